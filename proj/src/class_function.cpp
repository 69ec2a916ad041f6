#include "ggv/class_function.hpp"

#include <cassert>
#include <map>

namespace ggv {

int instance_conductor(int p, int q) { return normalize_conductor(p * (q * q - 1)); }

InstanceData build_instance_data(GroupLabel label, int q) {
  InstanceData D;
  D.G = build_instance(label, q);
  D.classes = conjugacy_classes(D.G);
  D.subgroups = subgroup_data(D.G);
  D.N = instance_conductor(D.G.tower->p, q);
  D.ring = LocalRingSpec{D.G.tower->p, 1};
  return D;
}

ClassFunction make_class_function(const InstanceData& D, CycVec values) {
  assert(static_cast<int>(values.size()) == D.classes.count());
  return ClassFunction{&D, std::move(values)};
}

ClassFunction trivial_character(const InstanceData& D) {
  return make_class_function(D, CycVec(D.classes.count(), CycNum::one(D.N)));
}

ClassFunction regular_character(const InstanceData& D) {
  CycVec v(D.classes.count(), CycNum::zero(D.N));
  v[D.classes.identity_class] = CycNum::from_rat(D.N, Rat(Int(D.G.size())));
  return make_class_function(D, std::move(v));
}

CycNum inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.D != g.D) throw GroupMismatch("inner product across different instances");
  const ConjClassData& C = f.D->classes;
  CycNum s;
  for (int c = 0; c < C.count(); ++c) {
    if (f.values[c].is_zero() || g.values[c].is_zero()) continue;
    s += (f.values[c] * g.values[c].conj()).scaled(Rat(Int(C.size[c])));
  }
  return s.scaled(Rat(Int(1), Int(f.D->G.size())));
}

ClassFunction induce_from_subgroup(const InstanceData& D, const std::vector<ElemId>& K,
                                   const std::function<CycNum(ElemId)>& f) {
  const GroupInstance& G = D.G;
  const ConjClassData& C = D.classes;
  std::vector<char> in_K(G.size(), 0);
  for (ElemId e : K) {
    if (e < 0 || e >= G.size()) throw NotASubgroup("subgroup element outside the group");
    in_K[e] = 1;
  }
  CycVec values(C.count());
  for (int c = 0; c < C.count(); ++c) {
    ElemId r = C.rep[c];
    // collect multiplicities of x^-1 r x over K first, evaluate f once per hit
    std::map<ElemId, long long> hits;
    for (ElemId x = 0; x < G.size(); ++x) {
      ElemId y = G.conjugate(G.inv(x), r);
      if (in_K[y]) ++hits[y];
    }
    CycNum s = CycNum::zero(D.N);
    for (auto& [y, mult] : hits) s += f(y).scaled(Rat(Int(mult)));
    values[c] = s.scaled(Rat(Int(1), Int(K.size())));
  }
  return make_class_function(D, std::move(values));
}

std::vector<CycNum> restrict_to_subgroup(const ClassFunction& f, const std::vector<ElemId>& K) {
  std::vector<CycNum> v;
  v.reserve(K.size());
  for (ElemId e : K) v.push_back(f.at_elem(e));
  return v;
}

CycVec decompose(const ClassFunction& f, const CharacterTable& table) {
  CycVec m;
  m.reserve(table.count());
  for (const auto& chi : table.irr) m.push_back(inner_product(f, chi));
  return m;
}

}  // namespace ggv
