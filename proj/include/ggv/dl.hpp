#pragma once

#include "ggv/gelfand_graev.hpp"

namespace ggv {

// Duality pairing <s, t> between the dual-torus parameter space and S^F,
// realized on discrete-log indices.  The same index k names both the
// character theta_k of S^F and the dual torus point; theta_k(t) =
// torus_pairing(S, k, index_of(t)).
CycNum torus_pairing(const TorusData& S, int s_idx, int t_idx, int N);

// action of the nontrivial Weyl element on the index space
int torus_w_act(const TorusData& S, int idx);

// The full family of Deligne-Lusztig characters of one instance.  Split
// tori use Harish-Chandra induction from the Borel; nonsplit tori are cut
// out by the character-formula structure on semisimple-times-central
// classes, the degree pinned at the identity and cross-torus orthogonality
// against the split family, solved exactly for the Green values.
struct DLFamily {
  TorusClass cls{TorusClass::Split};
  int eps{1};  // eps_G * eps_S
  std::vector<ClassFunction> R;             // indexed by the character index k
  std::vector<int> unip_classes;            // class indices, identity first
  CycVec green;                             // Q_S on unip_classes
  std::vector<std::vector<long long>> trace;  // Tr((g,t)|H_c) by [class][t index]
};

struct DLSystem {
  const InstanceData* D{nullptr};
  DLFamily split, nonsplit;
  const DLFamily& family(TorusClass c) const {
    return c == TorusClass::Split ? split : nonsplit;
  }
};

DLSystem dl_system(const InstanceData& D);

long long dl_trace(const DLSystem& dl, TorusClass cls, int class_idx, int t_idx);

// trace of (x, t) for a group-algebra element x, extended linearly
CycNum dl_trace_elem(const DLSystem& dl, TorusClass cls, const GAElem& x, int t_idx);

// built-in gates: degree formula, norm table, theta-independence of
// unipotent values, Green positivity; returns failure witnesses
std::vector<std::string> dl_gates(const DLSystem& dl);

// Deligne-Lusztig character formula, recomputed from Jordan data and Green
// functions by direct summation over the group; empty result = pass
std::vector<std::string> verify_dl_formula(const DLSystem& dl);

// The central-extension trace identities for SL2 ⊂ GL2 with aligned tori:
// vanishing off kappa = 1, the |Z^F| ratio, restriction compatibility of
// the R's, and the normalized trace-sum equality.
struct PairContext {
  const InstanceData* H{nullptr};
  const InstanceData* G{nullptr};
  const ExtensionData* X{nullptr};
  const DLSystem* dlH{nullptr};
  const DLSystem* dlG{nullptr};
};

// index of the T_G^F-character obtained by restricting theta_k of T_H^F
int restrict_theta_index(const PairContext& pc, TorusClass cls, int k);

std::vector<std::string> verify_pair_traces(const PairContext& pc);

}  // namespace ggv
