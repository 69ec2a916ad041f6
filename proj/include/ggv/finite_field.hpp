#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ggv/errors.hpp"

namespace ggv {

// F_{p^d} with elements coded as integers in [0, p^d): the code's base-p
// digits are the coefficients of the representative polynomial modulo the
// lexicographically smallest monic irreducible of degree d (constant term
// is the least significant digit).
class FiniteField {
 public:
  FiniteField(int p, int d);

  int p, d, q;             // q = p^d
  std::vector<int> irred;  // monic irreducible, coefficients c_0..c_d

  int add(int a, int b) const { return add_[a * q + b]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q + b]; }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int order(int a) const;  // multiplicative order, a != 0

 private:
  std::vector<int> add_, mul_, neg_, inv_;
};

// The compatible pair F_q ⊂ F_{q^2} with a fixed generator g2 of F_{q^2}^x
// and g1 := g2^{q+1} generating F_q^x; all eigenvalue bookkeeping runs
// through the discrete logarithms collected here.
struct FieldTower {
  int p, f, q;
  FiniteField Fq;
  FiniteField Fq2;

  std::vector<int> embed;  // F_q code -> F_{q2} code
  int g2;                  // enumeration-smallest generator of F_{q2}^x
  int g1;                  // F_q code of the preimage of g2^{q+1}
  int g1_in_q2;            // embed[g1]
  std::vector<int> dlog1;  // F_q^x -> exponent base g1 (index: F_q code)
  std::vector<int> dlog2;  // F_{q2}^x -> exponent base g2

  int beta;                // F_{q2} code completing {1, beta} to an F_q-basis
  int beta_c0, beta_c1;    // beta^2 = c0 + c1*beta with c0, c1 in F_q (codes)

  int frob(int a) const { return Fq2.pow(a, q); }           // a^q in F_{q2}
  bool in_subfield(int a) const { return frob(a) == a; }
  int trace_to_prime(int a) const;                          // Tr_{F_q/F_p}
  std::pair<int, int> split(int z) const { return split_[z]; }  // z = a + b*beta

 private:
  friend FieldTower build_field_tower(int p, int f, int qmax);
  FieldTower(int p_, int f_) : p(p_), f(f_), q(1), Fq(p_, f_), Fq2(p_, 2 * f_) {}
  std::vector<std::pair<int, int>> split_;
};

FieldTower build_field_tower(int p, int f, int qmax = 16);

}  // namespace ggv
