// Group-construction tests: field towers, GL2/SL2/PGL2 enumeration,
// conjugacy classes, Jordan decomposition, subgroup and torus data, and
// the central-extension bookkeeping.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ggv/group.hpp"

using namespace ggv;

TEST_CASE("field tower F_3 / F_9") {
  FieldTower t = build_field_tower(3, 1);
  CHECK(t.q == 3);
  CHECK(t.Fq2.q == 9);
  CHECK(t.Fq2.order(t.g2) == 8);
  // g2^4 is the unique element of order 2, i.e. -1
  CHECK(t.Fq2.pow(t.g2, 4) == t.embed[t.Fq.neg(1)]);
  CHECK(t.g1 == t.Fq.neg(1));  // g1 = g2^4 generates F_3^x = {1,2}
  CHECK(t.Fq.order(t.g1) == 2);
}

TEST_CASE("field tower F_2 / F_4") {
  FieldTower t = build_field_tower(2, 1);
  CHECK(t.Fq2.q == 4);
  CHECK(t.Fq2.order(t.g2) == 3);
  CHECK(t.g1 == 1);
}

TEST_CASE("field tower norm compatibility") {
  for (int q : {3, 5, 7, 9}) {
    int p = (q == 9) ? 3 : q;
    int f = (q == 9) ? 2 : 1;
    FieldTower t = build_field_tower(p, f);
    CHECK(t.Fq2.pow(t.g2, q + 1) == t.embed[t.g1]);
    CHECK(t.Fq.order(t.g1) == q - 1);
  }
}

TEST_CASE("bound enforcement") { CHECK_THROWS_AS(build_field_tower(17, 1), BoundExceeded); }

TEST_CASE("instance orders") {
  CHECK(build_instance(GroupLabel::GL2, 3).size() == 48);
  CHECK(build_instance(GroupLabel::SL2, 3).size() == 24);
  CHECK(build_instance(GroupLabel::PGL2, 3).size() == 24);
  CHECK(build_instance(GroupLabel::GL2, 2).size() == 6);
  CHECK_THROWS_AS(build_instance(GroupLabel::SL2, 4), UnsupportedInstance);
}

TEST_CASE("group axioms on samples") {
  GroupInstance G = build_instance(GroupLabel::PGL2, 3);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(0, G.size() - 1);
  for (int it = 0; it < 300; ++it) {
    ElemId x = pick(rng), y = pick(rng), z = pick(rng);
    CHECK(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
    CHECK(G.mul(x, G.inv(x)) == G.identity());
  }
}

TEST_CASE("conjugacy classes") {
  GroupInstance G = build_instance(GroupLabel::GL2, 3);
  ConjClassData C = conjugacy_classes(G);
  CHECK(C.count() == 8);  // q^2 - 1
  int total = 0;
  for (int c = 0; c < C.count(); ++c) {
    total += C.size[c];
    CHECK(C.size[c] * C.centralizer_order[c] == G.size());
  }
  CHECK(total == G.size());

  CHECK(conjugacy_classes(build_instance(GroupLabel::SL2, 3)).count() == 7);
  CHECK(conjugacy_classes(build_instance(GroupLabel::PGL2, 3)).count() == 5);
}

TEST_CASE("jordan decomposition examples") {
  GroupInstance G = build_instance(GroupLabel::GL2, 3);
  ElemId u = G.from_mat({1, 1, 0, 1});
  auto j1 = jordan(G, u);
  CHECK(j1.s == G.identity());
  CHECK(j1.u == u);

  ElemId t = G.diag(2, 1);
  auto j2 = jordan(G, t);
  CHECK(j2.s == t);
  CHECK(j2.u == G.identity());

  ElemId h = G.from_mat({2, 1, 0, 2});
  auto j3 = jordan(G, h);
  CHECK(j3.s == G.diag(2, 2));
  CHECK(j3.u == G.from_mat({1, 2, 0, 1}));
}

TEST_CASE("jordan properties everywhere") {
  for (auto [label, q] : std::vector<std::pair<GroupLabel, int>>{
           {GroupLabel::GL2, 3}, {GroupLabel::SL2, 3}, {GroupLabel::PGL2, 3}, {GroupLabel::GL2, 4}}) {
    GroupInstance G = build_instance(label, q);
    for (ElemId h = 0; h < G.size(); ++h) {
      auto [s, u] = jordan(G, h);
      CHECK(G.mul(s, u) == h);
      CHECK(G.mul(u, s) == h);
      CHECK(G.is_semisimple(s));
      CHECK(G.is_unipotent(u));
    }
  }
}

TEST_CASE("subgroup data GL2(3)") {
  GroupInstance G = build_instance(GroupLabel::GL2, 3);
  SubgroupData S = subgroup_data(G);
  CHECK(S.unipotent.size() == 3);
  CHECK(S.borel.size() == 12);
  CHECK(S.split_torus.order() == 4);
  CHECK(S.nonsplit_torus.order() == 8);
  CHECK(S.split_torus.weyl_f_order == 2);
  CHECK(S.nonsplit_torus.weyl_f_order == 2);
  // Steinberg count: sum over torus classes of |G|/(|S||W(S)^F|) = q^2
  CHECK(48 / (4 * 2) + 48 / (8 * 2) == 9);
}

TEST_CASE("torus orders and Weyl orders across instances") {
  for (auto [label, q] : std::vector<std::pair<GroupLabel, int>>{
           {GroupLabel::GL2, 2}, {GroupLabel::GL2, 3}, {GroupLabel::GL2, 5},
           {GroupLabel::SL2, 3}, {GroupLabel::SL2, 5}, {GroupLabel::PGL2, 3}}) {
    GroupInstance G = build_instance(label, q);
    SubgroupData S = subgroup_data(G);
    int split_expect = (label == GroupLabel::GL2) ? (q - 1) * (q - 1) : q - 1;
    int ns_expect = (label == GroupLabel::GL2) ? q * q - 1 : q + 1;
    CHECK(S.split_torus.order() == split_expect);
    CHECK(S.nonsplit_torus.order() == ns_expect);
    CHECK(S.split_torus.weyl_f_order == 2);
    CHECK(S.nonsplit_torus.weyl_f_order == 2);
    int count = G.size() / (S.split_torus.order() * 2) + G.size() / (S.nonsplit_torus.order() * 2);
    CHECK(count == q * q);
    // tori are abelian
    for (auto& T : {S.split_torus, S.nonsplit_torus})
      for (ElemId x : T.elem_by_index)
        for (ElemId y : T.elem_by_index) CHECK(G.mul(x, y) == G.mul(y, x));
  }
}

TEST_CASE("conjugation preserves torus type") {
  GroupInstance G = build_instance(GroupLabel::GL2, 3);
  SubgroupData S = subgroup_data(G);
  const FiniteField& F = G.tower->Fq;
  auto splits_over_fq = [&](ElemId e) {
    // char poly x^2 - tr x + det has a root in F_q
    Mat2 m = G.mat(e);
    int tr = F.add(m.a, m.d), det = G.det_code(e);
    for (int x = 0; x < G.q; ++x)
      if (F.add(F.sub(F.mul(x, x), F.mul(tr, x)), det) == 0) return true;
    return false;
  };
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, G.size() - 1);
  for (int it = 0; it < 40; ++it) {
    ElemId g = pick(rng);
    for (ElemId x : S.split_torus.elem_by_index) CHECK(splits_over_fq(G.conjugate(g, x)));
    for (ElemId x : S.nonsplit_torus.elem_by_index) {
      ElemId y = G.conjugate(g, x);
      if (G.order(x) > 2) CHECK((G.order(y) % (G.q - 1) == 0 || !splits_over_fq(y)));
    }
  }
}

TEST_CASE("extension data") {
  GroupInstance H = build_instance(GroupLabel::GL2, 3);
  GroupInstance G = build_instance(GroupLabel::SL2, 3);
  ExtensionData E = extension_data(H, G);
  CHECK(H.size() == G.size() * (H.q - 1));
  // kappa(diag(2,1)) = 2, i.e. dlog 1 w.r.t. g1 = 2
  CHECK(E.kappa_dlog[H.diag(2, 1)] == H.tower->dlog1[2]);
  // kernel of kappa is exactly SL2
  int in_kernel = 0;
  for (ElemId h = 0; h < H.size(); ++h)
    if (E.kappa_dlog[h] == 0) {
      ++in_kernel;
      CHECK(E.to_G[h] >= 0);
    }
  CHECK(in_kernel == 24);
  // kappa restricted to the included SL2 is trivial
  for (ElemId e = 0; e < G.size(); ++e) CHECK(E.kappa_dlog[E.to_H[e]] == 0);
  // section hits kappa-preimages: kappa(z-dot) = z
  for (int k = 0; k < H.q - 1; ++k) CHECK(E.kappa_dlog[E.section[k]] == k);
  CHECK(E.section[H.tower->dlog1[2]] == H.diag(2, 1));
}

TEST_CASE("epsilon signs") {
  CHECK(epsilon_of_group(GroupLabel::GL2) == 1);
  CHECK(epsilon_of_group(GroupLabel::SL2) == -1);
  CHECK(epsilon_of_torus(GroupLabel::GL2, TorusClass::Split) == 1);
  CHECK(epsilon_of_torus(GroupLabel::GL2, TorusClass::Nonsplit) == -1);
  CHECK(epsilon_of_torus(GroupLabel::SL2, TorusClass::Split) == -1);
  CHECK(epsilon_of_torus(GroupLabel::SL2, TorusClass::Nonsplit) == 1);
}
