#pragma once

#include <vector>

#include "ggv/rational.hpp"

namespace ggv {

// The coefficient ring of the main theorem: Z̄[1/pM] with p the defining
// characteristic and M the product of bad primes.  Intersected with
// Q(zeta_N) this is Z[zeta_N][1/pM], so membership is a per-denominator
// condition (see CycNum::is_pm_integral).
struct LocalRingSpec {
  long long p{1};
  long long M{1};
};

// conductors 2m (m odd) carry no new roots; normalize them away so that
// Z[zeta_N] is always the full ring of integers
int normalize_conductor(int n);

// Precomputed data for Q(zeta_n) with n = 1 or n !≡ 2 (mod 4): the n-th
// cyclotomic polynomial and the power-basis coordinates of all n-th roots
// of unity.  Immutable once built; shared through a registry.
class CycContext {
 public:
  static const CycContext* get(int n);

  int n;
  int phi;
  std::vector<Int> cyclo;  // Phi_n, monic of degree phi
  // zpow[m][j] = j-th power-basis coordinate of zeta_n^m, 0 <= m < n
  std::vector<std::vector<long long>> zpow;

 private:
  explicit CycContext(int n_);
};

// An element of Q(zeta_N) in the canonical power basis, stored as an
// integer coordinate vector over a single positive denominator with the
// overall content reduced.  Two values are equal iff their representations
// are equal.  All operations are pure; values are safe to share across
// threads.
class CycNum {
 public:
  CycNum();  // zero in Q = Q(zeta_1)
  explicit CycNum(const Rat& r);
  CycNum(long long v);  // NOLINT: implicit by design
  CycNum(const CycContext* ctx, std::vector<Int> num, Int den);

  static CycNum zero(int n) { return from_rat(n, Rat(0)); }
  static CycNum one(int n) { return from_rat(n, Rat(1)); }
  static CycNum from_rat(int n, const Rat& r);
  // zeta_m^k inside Q(zeta_n); requires m | n, or m ≡ 2 (mod 4) with
  // (m/2) | n via zeta_2m' = -zeta_m'^((m'+1)/2)
  static CycNum root_of_unity(int m, long long k, int n);

  int conductor() const { return ctx_->n; }
  const CycContext* context() const { return ctx_; }
  int dim() const { return ctx_->phi; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  bool is_rational_integer() const;
  Rat as_rational() const;              // requires is_rational()
  Rat coord(int i) const;               // i-th power-basis coordinate
  const Int& raw_den() const { return den_; }

  CycNum lifted_to(int n2) const;       // requires conductor | n2

  CycNum operator-() const;
  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  CycNum scaled(const Rat& r) const;    // multiply by a rational
  CycNum inverse() const;               // throws DivisionByZero on zero
  CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }
  CycNum conj() const;                  // complex conjugation zeta -> zeta^-1
  CycNum galois(long long a) const;     // zeta -> zeta^a, gcd(a, n) = 1

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }
  // deterministic total order for stable sorting only
  static bool less(const CycNum& a, const CycNum& b);

  // membership in Z[zeta_N][1/pM]
  bool is_pm_integral(const LocalRingSpec& ring) const;

  std::string str() const;

 private:
  const CycContext* ctx_;
  std::vector<Int> num_;
  Int den_;

  void normalize();
  static void align(CycNum& a, CycNum& b);
};

}  // namespace ggv
