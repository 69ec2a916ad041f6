#include "ggv/gelfand_graev.hpp"

#include <cassert>

namespace ggv {

std::vector<RegularCharacter> regular_characters(const InstanceData& D) {
  const FieldTower& t = *D.G.tower;
  std::vector<RegularCharacter> out;
  for (int k = 0; k < D.G.q - 1; ++k) out.push_back({t.Fq.pow(t.g1, k), k});
  return out;
}

CycNum psi_value(const InstanceData& D, const RegularCharacter& psi, ElemId u) {
  const FieldTower& t = *D.G.tower;
  Mat2 m = D.G.mat(u);
  assert(m.a == 1 && m.d == 1 && m.c == 0);
  int tr = t.trace_to_prime(t.Fq.mul(psi.a_code, m.b));
  return CycNum::root_of_unity(t.p, tr, D.N);
}

GAElem gg_idempotent(const InstanceData& D, const RegularCharacter& psi) {
  GAElem e;
  Rat inv_q(Int(1), Int(D.G.q));
  for (ElemId u : D.subgroups.unipotent)
    e.add_term(u, psi_value(D, psi, D.G.inv(u)).scaled(inv_q));
  return e;
}

ClassFunction gg_character(const InstanceData& D, const RegularCharacter& psi) {
  return induce_from_subgroup(D, D.subgroups.unipotent,
                              [&](ElemId u) { return psi_value(D, psi, u); });
}

CycNum tau_form(const InstanceData& D, const GAElem& x) {
  return x.at(D.G.identity()).scaled(Rat(Int(D.G.q)));
}

CycVec EndoBasis::coords_of(const GAElem& x) const {
  GAElem r = x;
  CycVec coords(basis.size(), CycNum::zero(D->N));
  for (const auto& e : echelon_) {
    CycNum c = r.at(e.pivot);
    if (c.is_zero()) continue;
    r = ga_sub(r, ga_scale(e.vec, c));
    for (size_t i = 0; i < coords.size(); ++i)
      if (!e.expr[i].is_zero()) coords[i] += c * e.expr[i];
  }
  if (!r.is_zero())
    throw DimensionMismatch("element does not lie in the span of the endomorphism basis");
  return coords;
}

GAElem EndoBasis::from_coords(const CycVec& c) const {
  assert(c.size() == basis.size());
  GAElem r;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!c[i].is_zero()) r = ga_add(r, ga_scale(basis[i], c[i]));
  return r;
}

EndoBasis endo_basis(const InstanceData& D, const RegularCharacter& psi) {
  EndoBasis E;
  E.D = &D;
  E.psi = psi;
  E.e_psi = gg_idempotent(D, psi);

  // expected dimension <Gamma, Gamma>
  ClassFunction gamma = gg_character(D, psi);
  CycNum norm = inner_product(gamma, gamma);
  assert(norm.is_rational_integer());
  long long expected = static_cast<long long>(norm.as_rational().num);

  const auto& U = D.subgroups.unipotent;
  std::vector<CycNum> psi_inv_val;  // psi(u^-1) for u in U, aligned with U
  for (ElemId u : U) psi_inv_val.push_back(psi_value(D, psi, D.G.inv(u)));
  Rat inv_q2(Int(1), Int(static_cast<long long>(D.G.q) * D.G.q));

  E.all_coords.reserve(D.G.size());
  for (ElemId g = 0; g < D.G.size(); ++g) {
    // h = e_psi g e_psi, accumulated over U x U
    GAElem h;
    for (size_t i = 0; i < U.size(); ++i) {
      ElemId ug = D.G.mul(U[i], g);
      for (size_t j = 0; j < U.size(); ++j)
        h.add_term(D.G.mul(ug, U[j]), (psi_inv_val[i] * psi_inv_val[j]).scaled(inv_q2));
    }

    // reduce against the echelon, recording coordinates
    GAElem r = h;
    CycVec coords(E.basis.size(), CycNum::zero(D.N));
    for (const auto& e : E.echelon_) {
      CycNum c = r.at(e.pivot);
      if (c.is_zero()) continue;
      r = ga_sub(r, ga_scale(e.vec, c));
      for (size_t i = 0; i < coords.size(); ++i)
        if (!e.expr[i].is_zero()) coords[i] += c * e.expr[i];
    }
    if (r.is_zero()) {
      E.all_coords.push_back(std::move(coords));
      continue;
    }

    // new basis vector
    int idx = E.dim();
    E.gens.push_back(g);
    E.basis.push_back(h);
    ElemId pivot = r.coeff.begin()->first;
    CycNum pinv = r.coeff.begin()->second.inverse();
    EndoBasis::EchelonEntry entry;
    entry.pivot = pivot;
    entry.vec = ga_scale(r, pinv);
    entry.expr.assign(idx + 1, CycNum::zero(D.N));
    for (int i = 0; i < idx; ++i) entry.expr[i] = -coords[i] * pinv;
    entry.expr[idx] = pinv;
    for (auto& prev : E.echelon_) prev.expr.resize(idx + 1, CycNum::zero(D.N));
    E.echelon_.push_back(std::move(entry));
    coords.resize(idx + 1, CycNum::zero(D.N));
    coords[idx] = CycNum::one(D.N);
    E.all_coords.push_back(std::move(coords));
  }
  // pad earlier coordinate vectors to the final dimension
  for (auto& c : E.all_coords) c.resize(E.dim(), CycNum::zero(D.N));

  if (E.dim() != expected)
    throw DimensionMismatch("dim E = " + std::to_string(E.dim()) + " but <Gamma,Gamma> = " +
                            std::to_string(expected));

  // structure constants and Gram matrix from exact products
  const int n = E.dim();
  E.structure.assign(n, std::vector<CycVec>(n));
  E.gram = CycMat(n, n, CycNum::zero(D.N));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GAElem prod = ga_mul(D, E.basis[i], E.basis[j]);
      E.structure[i][j] = E.coords_of(prod);
      E.gram.at(i, j) = tau_form(D, prod);
    }
  return E;
}

GAElem include_into_H(const ExtensionData& E, const GAElem& x) {
  GAElem r;
  for (auto& [e, c] : x.coeff) r.coeff.emplace(E.to_H[e], c);
  return r;
}

}  // namespace ggv
