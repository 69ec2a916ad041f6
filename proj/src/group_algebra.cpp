#include "ggv/group_algebra.hpp"

namespace ggv {

void GAElem::add_term(ElemId e, const CycNum& c) {
  auto it = coeff.find(e);
  if (it == coeff.end()) {
    if (!c.is_zero()) coeff.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeff.erase(it);
}

CycNum GAElem::at(ElemId e) const {
  auto it = coeff.find(e);
  return it == coeff.end() ? CycNum(0) : it->second;
}

GAElem ga_unit(const InstanceData& D, ElemId e) {
  GAElem r;
  r.coeff.emplace(e, CycNum::one(D.N));
  return r;
}

GAElem ga_add(const GAElem& x, const GAElem& y) {
  GAElem r = x;
  for (auto& [e, c] : y.coeff) r.add_term(e, c);
  return r;
}

GAElem ga_sub(const GAElem& x, const GAElem& y) {
  GAElem r = x;
  for (auto& [e, c] : y.coeff) r.add_term(e, -c);
  return r;
}

GAElem ga_scale(const GAElem& x, const CycNum& c) {
  GAElem r;
  if (c.is_zero()) return r;
  for (auto& [e, v] : x.coeff) {
    CycNum p = v * c;
    if (!p.is_zero()) r.coeff.emplace(e, p);
  }
  return r;
}

GAElem ga_mul(const InstanceData& D, const GAElem& x, const GAElem& y) {
  GAElem r;
  for (auto& [a, ca] : x.coeff)
    for (auto& [b, cb] : y.coeff) r.add_term(D.G.mul(a, b), ca * cb);
  return r;
}

bool ga_equal(const GAElem& x, const GAElem& y) {
  if (x.coeff.size() != y.coeff.size()) return false;
  auto it = y.coeff.begin();
  for (auto& [e, c] : x.coeff) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

}  // namespace ggv
