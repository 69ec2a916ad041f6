// Deligne-Lusztig system tests: split family by Harish-Chandra induction,
// nonsplit family from the exactly solved constraint system, Green
// functions, integer trace tables, the character formula, and the
// central-extension trace identities for SL2 ⊂ GL2.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggv/dl.hpp"

using namespace ggv;

namespace {

struct Fixture {
  InstanceData D;
  DLSystem dl;
  explicit Fixture(GroupLabel l, int q) : D(build_instance_data(l, q)) { dl = dl_system(D); }
};

Fixture& gl2_3() {
  static Fixture f(GroupLabel::GL2, 3);
  return f;
}

Fixture& sl2_3() {
  static Fixture f(GroupLabel::SL2, 3);
  return f;
}

}  // namespace

TEST_CASE("degrees and Green values GL2(F_3)") {
  auto& f = gl2_3();
  int id = f.D.classes.identity_class;
  for (auto& R : f.dl.split.R) CHECK(R.values[id] == CycNum(4).lifted_to(f.D.N));
  for (auto& R : f.dl.nonsplit.R) CHECK(R.values[id] == CycNum(-2).lifted_to(f.D.N));
  // Q_split = (q+1, 1), Q_nonsplit = (1-q, 1)
  CHECK(f.dl.split.green[0] == CycNum(4).lifted_to(f.D.N));
  CHECK(f.dl.split.green[1] == CycNum(1).lifted_to(f.D.N));
  CHECK(f.dl.nonsplit.green[0] == CycNum(-2).lifted_to(f.D.N));
  CHECK(f.dl.nonsplit.green[1] == CycNum(1).lifted_to(f.D.N));
}

TEST_CASE("dl gates pass") {
  CHECK(dl_gates(gl2_3().dl).empty());
  CHECK(dl_gates(sl2_3().dl).empty());
  Fixture f2(GroupLabel::GL2, 2);
  CHECK(dl_gates(f2.dl).empty());
  CHECK(verify_dl_formula(f2.dl).empty());
}

TEST_CASE("trace examples GL2(F_3)") {
  auto& f = gl2_3();
  int id = f.D.classes.identity_class;
  CHECK(dl_trace(f.dl, TorusClass::Split, id, 0) == 16);
  // sum over t of Tr((1,t)) = |S^F| R(triv)(1)
  for (TorusClass cls : {TorusClass::Split, TorusClass::Nonsplit}) {
    const TorusData& S = f.D.subgroups.torus(cls);
    long long sum = 0;
    for (int t = 0; t < S.index_count; ++t) sum += dl_trace(f.dl, cls, id, t);
    long long rtriv = (cls == TorusClass::Split) ? 4 : -2;
    CHECK(sum == S.index_count * rtriv);
  }
}

TEST_CASE("character formula verification") {
  CHECK(verify_dl_formula(gl2_3().dl).empty());
  CHECK(verify_dl_formula(sl2_3().dl).empty());
}

TEST_CASE("split regular semisimple values") {
  // R_split(theta)(s) = theta(s) + theta(s^w) for s = diag(1, 2) in GL2(F_3)
  auto& f = gl2_3();
  const TorusData& S = f.D.subgroups.split_torus;
  ElemId s = f.D.G.diag(1, 2);
  int c = f.D.classes.class_of[s];
  int si = S.index_of(s);
  ElemId sw = f.D.G.diag(2, 1);
  int swi = S.index_of(sw);
  for (int k = 0; k < S.index_count; ++k) {
    CycNum expect = torus_pairing(S, k, si, f.D.N) + torus_pairing(S, k, swi, f.D.N);
    CHECK(f.dl.split.R[k].values[c] == expect);
  }
}

TEST_CASE("SL2(F_3) nonsplit family separates the two unipotent classes") {
  auto& f = sl2_3();
  REQUIRE(f.dl.nonsplit.unip_classes.size() == 3);
  // a unique solution existed (construction would have thrown otherwise)
  CHECK(f.dl.nonsplit.green[1].is_rational_integer());
  CHECK(f.dl.nonsplit.green[2].is_rational_integer());
}

TEST_CASE("pair trace identities at q = 3") {
  InstanceData DH = build_instance_data(GroupLabel::GL2, 3);
  InstanceData DG = build_instance_data(GroupLabel::SL2, 3);
  ExtensionData X = extension_data(DH.G, DG.G);
  DLSystem dlH = dl_system(DH);
  DLSystem dlG = dl_system(DG);
  PairContext pc{&DH, &DG, &X, &dlH, &dlG};
  auto fails = verify_pair_traces(pc);
  for (auto& s : fails) MESSAGE(s);
  CHECK(fails.empty());

  // explicit corner of (5): h = t = 1 gives trace_H = (q-1) trace_G
  int idH = DH.classes.identity_class, idG = DG.classes.identity_class;
  for (TorusClass cls : {TorusClass::Split, TorusClass::Nonsplit}) {
    const TorusData& TG = DG.subgroups.torus(cls);
    const TorusData& TH = DH.subgroups.torus(cls);
    ElemId oneH = X.to_H[TG.elem_by_index[0]];
    CHECK(dl_trace(dlH, cls, idH, TH.index_of(oneH)) == 2 * dl_trace(dlG, cls, idG, 0));
  }
}

TEST_CASE("pair trace identities at q = 5") {
  InstanceData DH = build_instance_data(GroupLabel::GL2, 5);
  InstanceData DG = build_instance_data(GroupLabel::SL2, 5);
  ExtensionData X = extension_data(DH.G, DG.G);
  DLSystem dlH = dl_system(DH);
  DLSystem dlG = dl_system(DG);
  PairContext pc{&DH, &DG, &X, &dlH, &dlG};
  CHECK(verify_pair_traces(pc).empty());
}
