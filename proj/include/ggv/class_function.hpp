#pragma once

#include <functional>

#include "ggv/group.hpp"
#include "ggv/linalg.hpp"

namespace ggv {

// Everything downstream of group construction works over one fixed
// cyclotomic field per instance: N = p(q^2-1), normalized.  All torus
// character orders, the additive character order and the exponent of the
// group divide N (up to the even-conductor normalization).
int instance_conductor(int p, int q);

// One group instance with its class data, subgroups, and scalar field.
struct InstanceData {
  GroupInstance G;
  ConjClassData classes;
  SubgroupData subgroups;
  int N;
  LocalRingSpec ring;  // {p, M}; M = 1 for these type-A instances
};

InstanceData build_instance_data(GroupLabel label, int q);

// A Q(zeta_N)-valued class function, stored by conjugacy class.
struct ClassFunction {
  const InstanceData* D{nullptr};
  CycVec values;  // indexed by class

  const CycNum& at_class(int c) const { return values[c]; }
  const CycNum& at_elem(ElemId e) const { return values[D->classes.class_of[e]]; }
};

ClassFunction make_class_function(const InstanceData& D, CycVec values);
ClassFunction trivial_character(const InstanceData& D);
ClassFunction regular_character(const InstanceData& D);

CycNum inner_product(const ClassFunction& f, const ClassFunction& g);

// Frobenius induction from a stored subgroup, the input given by its
// values on subgroup elements.
ClassFunction induce_from_subgroup(const InstanceData& D, const std::vector<ElemId>& K,
                                   const std::function<CycNum(ElemId)>& f);

// restriction to a subgroup, as a per-element value map
std::vector<CycNum> restrict_to_subgroup(const ClassFunction& f, const std::vector<ElemId>& K);

struct CharacterTable {
  std::vector<ClassFunction> irr;  // sorted by degree, then value vector
  std::vector<long long> degree;
  int count() const { return static_cast<int>(irr.size()); }
};

// multiplicity vector <f, chi_i>
CycVec decompose(const ClassFunction& f, const CharacterTable& table);

}  // namespace ggv
