#include "ggv/rational.hpp"

namespace ggv {

Rat::Rat(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rat Rat::operator-() const {
  Rat r;
  r.num = -num;
  r.den = den;
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  return Rat(num * o.den + o.num * den, den * o.den);
}

Rat Rat::operator-(const Rat& o) const {
  return Rat(num * o.den - o.num * den, den * o.den);
}

Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }

Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) throw DivisionByZero("rational division by zero");
  return Rat(num * o.den, den * o.num);
}

std::string Rat::str() const {
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool denominator_supported(const Int& d, long long p, long long M) {
  Int r = d;
  if (r < 0) r = -r;
  if (p > 1) {
    while (r % p == 0) r /= p;
  }
  for (long long f = 2; f * f <= M; ++f) {
    if (M % f == 0) {
      while (r % f == 0) r /= f;
      long long m = M;
      while (m % f == 0) m /= f;  // M is squarefree in practice; be safe
    }
  }
  // remaining cofactor of M (M squarefree: at most one prime > sqrt(M))
  long long m = M;
  for (long long f = 2; f * f <= m; ++f)
    while (m % f == 0) m /= f;
  if (m > 1) {
    while (r % m == 0) r /= m;
  }
  return r == 1;
}

}  // namespace ggv
