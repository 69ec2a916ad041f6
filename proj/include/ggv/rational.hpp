#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "ggv/errors.hpp"

namespace ggv {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always reduced, denominator > 0.
// Equality is structural, which is sound because the representation is
// canonical.
struct Rat {
  Int num{0};
  Int den{1};

  Rat() = default;
  Rat(long long n) : num(n) {}  // NOLINT: implicit by design
  Rat(Int n) : num(std::move(n)) {}
  Rat(Int n, Int d);

  static Rat of(long long n, long long d) { return Rat(Int(n), Int(d)); }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  // total order, used only for deterministic sorting
  bool operator<(const Rat& o) const { return num * o.den < o.num * den; }

  std::string str() const;
};

// true iff every prime factor of d lies in {p} together with the primes of M
bool denominator_supported(const Int& d, long long p, long long M);

}  // namespace ggv
