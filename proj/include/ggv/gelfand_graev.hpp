#pragma once

#include "ggv/group_algebra.hpp"

namespace ggv {

// psi_a on U_0^F ≅ (F_q, +): psi_a(u(x)) = zeta_p^{Tr(a x)}.  For rank one
// every nontrivial character is regular.
struct RegularCharacter {
  int a_code;  // a in F_q^x
  int a_dlog;  // a = g1^a_dlog
};

std::vector<RegularCharacter> regular_characters(const InstanceData& D);
CycNum psi_value(const InstanceData& D, const RegularCharacter& psi, ElemId u);

// e_psi = (1/|U_0^F|) sum_u psi(u^-1) u
GAElem gg_idempotent(const InstanceData& D, const RegularCharacter& psi);

// Gamma = Ind_{U_0^F}^{G^F} psi
ClassFunction gg_character(const InstanceData& D, const RegularCharacter& psi);

// tau = |U_0^F| * (coefficient of the identity)
CycNum tau_form(const InstanceData& D, const GAElem& x);

// Basis of E = e_psi Q(zeta_N)[G^F] e_psi selected greedily over the fixed
// enumeration, with exact structure constants and the Gram matrix of tau.
// Every e_psi g e_psi is recorded as a coordinate vector over the basis;
// the module is saturated over the basis iff those coordinates are
// pM-integral, which lattice checks consume downstream.
struct EndoBasis {
  const InstanceData* D{nullptr};
  RegularCharacter psi;
  GAElem e_psi;
  std::vector<ElemId> gens;    // h_i = e_psi gens[i] e_psi
  std::vector<GAElem> basis;
  std::vector<std::vector<CycVec>> structure;  // h_i h_j = sum_k structure[i][j][k] h_k
  CycMat gram;                                 // tau(h_i h_j)
  std::vector<CycVec> all_coords;              // coords of e_psi g e_psi for every g

  int dim() const { return static_cast<int>(basis.size()); }
  // coordinates of an arbitrary element of E in the basis
  CycVec coords_of(const GAElem& x) const;
  GAElem from_coords(const CycVec& c) const;

 private:
  friend EndoBasis endo_basis(const InstanceData& D, const RegularCharacter& psi);
  struct EchelonEntry {
    ElemId pivot;
    GAElem vec;    // pivot coefficient 1
    CycVec expr;   // vec as a combination of basis elements
  };
  std::vector<EchelonEntry> echelon_;
};

EndoBasis endo_basis(const InstanceData& D, const RegularCharacter& psi);

// coefficient-preserving inclusion E_G -> E_H along SL2 ⊂ GL2
GAElem include_into_H(const ExtensionData& E, const GAElem& x);

}  // namespace ggv
