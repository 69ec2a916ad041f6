#pragma once

#include <map>

#include "ggv/class_function.hpp"

namespace ggv {

// Sparse element of Q(zeta_N)[G^F]; zero coefficients are never stored.
// std::map keeps iteration deterministic.
struct GAElem {
  std::map<ElemId, CycNum> coeff;

  bool is_zero() const { return coeff.empty(); }
  void add_term(ElemId e, const CycNum& c);
  CycNum at(ElemId e) const;
};

GAElem ga_unit(const InstanceData& D, ElemId e);
GAElem ga_add(const GAElem& x, const GAElem& y);
GAElem ga_sub(const GAElem& x, const GAElem& y);
GAElem ga_scale(const GAElem& x, const CycNum& c);
GAElem ga_mul(const InstanceData& D, const GAElem& x, const GAElem& y);
bool ga_equal(const GAElem& x, const GAElem& y);

}  // namespace ggv
