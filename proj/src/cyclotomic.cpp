#include "ggv/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ggv {

namespace {

// exact division of integer polynomials, used to build Phi_n from x^n - 1
std::vector<Int> poly_divide_exact(std::vector<Int> a, const std::vector<Int>& b) {
  std::vector<Int> q(a.size() - b.size() + 1, Int(0));
  const Int& lead = b.back();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    Int c = a[k + b.size() - 1] / lead;
    q[k] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  for (const Int& c : a) assert(c == 0);
  return q;
}

std::vector<Int> cyclotomic_poly(int n) {
  static std::map<int, std::vector<Int>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  std::function<std::vector<Int>(int)> build = [&](int m) -> std::vector<Int> {
    auto found = memo.find(m);
    if (found != memo.end()) return found->second;
    std::vector<Int> p(m + 1, Int(0));  // x^m - 1
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
      if (m % d == 0) p = poly_divide_exact(std::move(p), build(d));
    memo[m] = p;
    return p;
  };
  return build(n);
}

int euler_phi(int n) {
  int r = n;
  int m = n;
  for (int f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      r -= r / f;
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

Int int128_to_cpp(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  Int r = static_cast<unsigned long long>(u >> 64);
  r <<= 64;
  r += static_cast<unsigned long long>(u);
  return neg ? -r : r;
}

// |v| < 2^62 extraction; returns false if it does not fit
bool cpp_to_int64(const Int& v, long long& out) {
  if (v > Int(0x3fffffffffffffffLL) || v < -Int(0x3fffffffffffffffLL)) return false;
  out = static_cast<long long>(v);
  return true;
}

}  // namespace

int normalize_conductor(int n) { return (n % 4 == 2) ? n / 2 : n; }

CycContext::CycContext(int n_) : n(n_) {
  phi = euler_phi(n);
  cyclo = cyclotomic_poly(n);
  assert(static_cast<int>(cyclo.size()) == phi + 1 && cyclo[phi] == 1);

  // zeta^m for all m: start from unit vectors, then shift-and-reduce.
  zpow.assign(n, std::vector<long long>(phi, 0));
  for (int m = 0; m < std::min(n, phi); ++m) zpow[m][m] = 1;
  for (int m = phi; m < n; ++m) {
    const auto& prev = zpow[m - 1];
    std::vector<long long> cur(phi, 0);
    long long top = prev[phi - 1];
    for (int j = phi - 1; j >= 1; --j) cur[j] = prev[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < phi; ++j) {
        // zeta^phi = -sum_j cyclo[j] zeta^j; Phi_n coefficients are tiny here
        long long c = static_cast<long long>(cyclo[j]);
        cur[j] -= top * c;
      }
    }
    zpow[m] = std::move(cur);
  }
}

const CycContext* CycContext::get(int n) {
  if (n < 1 || (n % 4 == 2))
    throw ConductorMismatch("conductor must be 1 or !== 2 (mod 4), got " + std::to_string(n));
  static std::map<int, std::unique_ptr<CycContext>> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[n];
  if (!slot) slot = std::unique_ptr<CycContext>(new CycContext(n));
  return slot.get();
}

CycNum::CycNum() : ctx_(CycContext::get(1)), num_(1, Int(0)), den_(1) {}

CycNum::CycNum(const Rat& r) : ctx_(CycContext::get(1)), num_(1, r.num), den_(r.den) {}

CycNum::CycNum(long long v) : ctx_(CycContext::get(1)), num_(1, Int(v)), den_(1) {}

CycNum::CycNum(const CycContext* ctx, std::vector<Int> num, Int den)
    : ctx_(ctx), num_(std::move(num)), den_(std::move(den)) {
  assert(static_cast<int>(num_.size()) == ctx_->phi);
  if (den_ == 0) throw DivisionByZero("cyclotomic value with zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  normalize();
}

void CycNum::normalize() {
  if (den_ == 1) return;
  Int g = den_;
  for (const auto& c : num_) {
    if (c != 0) g = gcd(g, c);
    if (g == 1) return;
  }
  if (g > 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
}

CycNum CycNum::from_rat(int n, const Rat& r) {
  const CycContext* ctx = CycContext::get(n);
  std::vector<Int> num(ctx->phi, Int(0));
  num[0] = r.num;
  return CycNum(ctx, std::move(num), r.den);
}

CycNum CycNum::root_of_unity(int m, long long k, int n) {
  if (m <= 0) throw ConductorMismatch("root order must be positive");
  long long kk = ((k % m) + m) % m;
  if (n % m == 0) {
    const CycContext* ctx = CycContext::get(n);
    long long e = (kk * (n / m)) % n;
    std::vector<Int> num(ctx->phi);
    for (int j = 0; j < ctx->phi; ++j) num[j] = ctx->zpow[e][j];
    return CycNum(ctx, std::move(num), Int(1));
  }
  if (m % 2 == 0 && (m / 2) % 2 == 1 && n % (m / 2) == 0) {
    // zeta_{2m'} = -zeta_{m'}^{(m'+1)/2} for odd m'
    int mp = m / 2;
    CycNum r = root_of_unity(mp, kk * ((mp + 1) / 2), n);
    return (kk % 2 == 0) ? r : -r;
  }
  throw ConductorMismatch("zeta_" + std::to_string(m) + " does not lie in Q(zeta_" +
                          std::to_string(n) + ")");
}

bool CycNum::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool CycNum::is_rational_integer() const { return is_rational() && den_ == 1; }

Rat CycNum::as_rational() const {
  if (!is_rational()) throw ConductorMismatch("value is not rational: " + str());
  Rat r;
  r.num = num_[0];
  r.den = den_;
  return r;
}

Rat CycNum::coord(int i) const { return Rat(num_[i], den_); }

CycNum CycNum::lifted_to(int n2) const {
  if (n2 == ctx_->n) return *this;
  if (n2 % ctx_->n != 0)
    throw ConductorMismatch("cannot lift conductor " + std::to_string(ctx_->n) + " into " +
                            std::to_string(n2));
  const CycContext* c2 = CycContext::get(n2);
  int stride = n2 / ctx_->n;
  std::vector<Int> num(c2->phi, Int(0));
  for (int i = 0; i < ctx_->phi; ++i) {
    if (num_[i] == 0) continue;
    const auto& row = c2->zpow[(static_cast<long long>(i) * stride) % n2];
    for (int j = 0; j < c2->phi; ++j)
      if (row[j] != 0) num[j] += num_[i] * row[j];
  }
  return CycNum(c2, std::move(num), den_);
}

void CycNum::align(CycNum& a, CycNum& b) {
  if (a.ctx_ == b.ctx_) return;
  if (b.ctx_->n % a.ctx_->n == 0) {
    a = a.lifted_to(b.ctx_->n);
  } else if (a.ctx_->n % b.ctx_->n == 0) {
    b = b.lifted_to(a.ctx_->n);
  } else {
    throw ConductorMismatch("incompatible conductors " + std::to_string(a.ctx_->n) + ", " +
                            std::to_string(b.ctx_->n));
  }
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum a = *this, b = o;
  align(a, b);
  Int g = gcd(a.den_, b.den_);
  Int fa = b.den_ / g, fb = a.den_ / g;
  std::vector<Int> num(a.num_.size());
  for (size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * fa + b.num_[i] * fb;
  return CycNum(a.ctx_, std::move(num), a.den_ * fa);
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
  CycNum a = *this, b = o;
  align(a, b);
  const CycContext* ctx = a.ctx_;
  const int phi = ctx->phi;
  const int n = ctx->n;

  // fast path: both coordinate vectors fit in 32 bits
  bool small = true;
  static const Int kSmall = Int(1) << 31;
  for (const auto& c : a.num_)
    if (c >= kSmall || c <= -kSmall) {
      small = false;
      break;
    }
  if (small)
    for (const auto& c : b.num_)
      if (c >= kSmall || c <= -kSmall) {
        small = false;
        break;
      }

  std::vector<Int> res(phi, Int(0));
  if (small) {
    std::vector<long long> x(phi), y(phi);
    for (int i = 0; i < phi; ++i) x[i] = static_cast<long long>(a.num_[i]);
    for (int i = 0; i < phi; ++i) y[i] = static_cast<long long>(b.num_[i]);
    std::vector<__int128> conv(2 * phi - 1, 0);
    for (int i = 0; i < phi; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < phi; ++j) conv[i + j] += static_cast<__int128>(x[i]) * y[j];
    }
    std::vector<__int128> acc(phi, 0);
    for (int k = 0; k < phi; ++k) acc[k] = conv[k];
    for (int k = phi; k < 2 * phi - 1; ++k) {
      if (conv[k] == 0) continue;
      const auto& row = ctx->zpow[k % n];
      for (int j = 0; j < phi; ++j)
        if (row[j] != 0) acc[j] += conv[k] * row[j];
    }
    for (int j = 0; j < phi; ++j) res[j] = int128_to_cpp(acc[j]);
  } else {
    std::vector<Int> conv(2 * phi - 1, Int(0));
    for (int i = 0; i < phi; ++i) {
      if (a.num_[i] == 0) continue;
      for (int j = 0; j < phi; ++j)
        if (b.num_[j] != 0) conv[i + j] += a.num_[i] * b.num_[j];
    }
    for (int k = 0; k < phi; ++k) res[k] = conv[k];
    for (int k = phi; k < 2 * phi - 1; ++k) {
      if (conv[k] == 0) continue;
      const auto& row = ctx->zpow[k % n];
      for (int j = 0; j < phi; ++j)
        if (row[j] != 0) res[j] += conv[k] * row[j];
    }
  }
  return CycNum(ctx, std::move(res), a.den_ * b.den_);
}

CycNum CycNum::scaled(const Rat& r) const {
  std::vector<Int> num(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) num[i] = num_[i] * r.num;
  return CycNum(ctx_, std::move(num), den_ * r.den);
}

CycNum CycNum::galois(long long a) const {
  const int n = ctx_->n;
  a = ((a % n) + n) % n;
  assert(std::gcd(static_cast<long long>(n), a) == 1);
  std::vector<Int> num(ctx_->phi, Int(0));
  for (int i = 0; i < ctx_->phi; ++i) {
    if (num_[i] == 0) continue;
    const auto& row = ctx_->zpow[(static_cast<long long>(i) * a) % n];
    for (int j = 0; j < ctx_->phi; ++j)
      if (row[j] != 0) num[j] += num_[i] * row[j];
  }
  return CycNum(ctx_, std::move(num), den_);
}

CycNum CycNum::conj() const { return ctx_->n == 1 ? *this : galois(ctx_->n - 1); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (is_rational()) {
    Rat r = as_rational();
    return from_rat(ctx_->n, Rat(r.den, r.num));
  }
  // x^{-1} = (prod of nontrivial Galois conjugates) / Norm(x)
  std::vector<CycNum> factors;
  for (int a = 2; a < ctx_->n; ++a)
    if (std::gcd(a, ctx_->n) == 1) factors.push_back(galois(a));
  while (factors.size() > 1) {  // balanced product keeps operands small
    std::vector<CycNum> next;
    for (size_t i = 0; i + 1 < factors.size(); i += 2) next.push_back(factors[i] * factors[i + 1]);
    if (factors.size() % 2 == 1) next.push_back(factors.back());
    factors = std::move(next);
  }
  CycNum p = factors[0];
  CycNum norm = (*this) * p;
  assert(norm.is_rational() && !norm.is_zero());
  Rat r = norm.as_rational();
  return p.scaled(Rat(r.den, r.num));
}

bool CycNum::operator==(const CycNum& o) const {
  CycNum a = *this, b = o;
  align(a, b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

bool CycNum::less(const CycNum& a, const CycNum& b) {
  if (a.ctx_->n != b.ctx_->n) return a.ctx_->n < b.ctx_->n;
  if (a.den_ != b.den_) return a.den_ < b.den_;
  return a.num_ < b.num_;
}

bool CycNum::is_pm_integral(const LocalRingSpec& ring) const {
  return denominator_supported(den_, ring.p, ring.M);
}

std::string CycNum::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < num_.size(); ++i) {
    if (i) os << ",";
    os << num_[i].str();
  }
  os << "]";
  if (den_ != 1) os << "/" << den_.str();
  os << "@" << ctx_->n;
  return os.str();
}

}  // namespace ggv
