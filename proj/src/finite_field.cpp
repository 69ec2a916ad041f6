#include "ggv/finite_field.hpp"

#include <cassert>
#include <numeric>

namespace ggv {

namespace {

// polynomial codes: base-p digits are coefficients, constant term first
std::vector<int> decode(int code, int p) {
  std::vector<int> c;
  while (code) {
    c.push_back(code % p);
    code /= p;
  }
  return c;
}

int poly_mul_mod(int a, int b, const std::vector<int>& irred, int p) {
  int d = static_cast<int>(irred.size()) - 1;
  std::vector<int> x = decode(a, p), y = decode(b, p);
  std::vector<int> prod(x.size() + y.size(), 0);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (int k = static_cast<int>(prod.size()) - 1; k >= d; --k) {
    int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int j = 0; j < d; ++j) prod[k - d + j] = ((prod[k - d + j] - c * irred[j]) % p + p) % p;
  }
  int code = 0;
  for (int k = d - 1; k >= 0; --k)
    code = code * p + (k < static_cast<int>(prod.size()) ? prod[k] : 0);
  return code;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  // degrees <= 4 occur here; no roots suffices up to degree 3, and for
  // degree 4 additionally no irreducible quadratic factor
  int d = static_cast<int>(poly.size()) - 1;
  auto eval = [&](int x) {
    int v = 0;
    for (int k = d; k >= 0; --k) v = (v * x + poly[k]) % p;
    return v;
  };
  for (int x = 0; x < p; ++x)
    if (eval(x) == 0) return false;
  if (d <= 3) return true;
  for (int c1 = 0; c1 < p; ++c1)
    for (int c0 = 0; c0 < p; ++c0) {
      bool g_irred = true;
      for (int x = 0; x < p && g_irred; ++x)
        if ((c0 + c1 * x + x * x) % p == 0) g_irred = false;
      if (!g_irred) continue;
      std::vector<int> r = poly;
      for (int k = d; k >= 2; --k) {
        int c = r[k] % p;
        if (c == 0) continue;
        r[k] = 0;
        r[k - 1] = ((r[k - 1] - c * c1) % p + p) % p;
        r[k - 2] = ((r[k - 2] - c * c0) % p + p) % p;
      }
      if (r[0] % p == 0 && r[1] % p == 0) return false;
    }
  return true;
}

}  // namespace

FiniteField::FiniteField(int p_, int d_) : p(p_), d(d_), q(1) {
  for (int i = 0; i < d; ++i) q *= p;
  irred.assign(d + 1, 0);
  irred[d] = 1;
  if (d > 1) {
    // smallest code sum c_i p^i over non-leading coefficients
    bool found = false;
    for (int code = 0; code < q && !found; ++code) {
      std::vector<int> cand(d + 1, 0);
      int c = code;
      for (int i = 0; i < d; ++i) {
        cand[i] = c % p;
        c /= p;
      }
      cand[d] = 1;
      if (is_irreducible(cand, p)) {
        irred = cand;
        found = true;
      }
    }
    assert(found);
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      int s = 0, mulp = 1, x = a, y = b;
      for (int i = 0; i < d; ++i) {
        s += ((x % p + y % p) % p) * mulp;
        mulp *= p;
        x /= p;
        y /= p;
      }
      add_[a * q + b] = s;
      mul_[a * q + b] = poly_mul_mod(a, b, irred, p);
    }
  for (int a = 0; a < q; ++a) {
    int s = 0, mulp = 1, x = a;
    for (int i = 0; i < d; ++i) {
      s += ((p - x % p) % p) * mulp;
      mulp *= p;
      x /= p;
    }
    neg_[a] = s;
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw DivisionByZero("finite field inverse of 0");
  return inv_[a];
}

int FiniteField::pow(int a, long long e) const {
  long long m = q - 1;
  if (a == 0) {
    assert(e > 0);
    return 0;
  }
  e %= m;
  if (e < 0) e += m;
  int r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int FiniteField::order(int a) const {
  assert(a != 0);
  int o = 1, x = a;
  while (x != 1) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

int FieldTower::trace_to_prime(int a) const {
  int s = 0, x = a;
  for (int i = 0; i < f; ++i) {
    s = Fq.add(s, x);
    x = Fq.pow(x, p);
  }
  assert(s < p);  // lands in the prime subfield, coded as a constant
  return s;
}

FieldTower build_field_tower(int p, int f, int qmax) {
  {
    long long q = 1;
    for (int i = 0; i < f; ++i) q *= p;
    if (q > qmax)
      throw BoundExceeded("q = " + std::to_string(q) + " exceeds bound " + std::to_string(qmax));
  }
  FieldTower t(p, f);
  t.q = t.Fq.q;
  const int q = t.q, q2 = t.Fq2.q;

  // embed F_q into F_{q^2}: send the generator of the polynomial model to
  // the smallest root of F_q's defining polynomial
  int root = -1;
  for (int z = 0; z < q2 && root < 0; ++z) {
    int v = 0;
    for (int k = t.Fq.d; k >= 0; --k) v = t.Fq2.add(t.Fq2.mul(v, z), t.Fq.irred[k] % p);
    if (v == 0) root = z;
  }
  assert(root >= 0);
  t.embed.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    int v = 0, x = a, powz = 1;
    for (int i = 0; i < t.Fq.d; ++i) {
      v = t.Fq2.add(v, t.Fq2.mul(x % p, powz));
      powz = t.Fq2.mul(powz, root);
      x /= p;
    }
    t.embed[a] = v;
  }

  t.g2 = 1;
  for (int z = 2; z < q2; ++z)
    if (t.Fq2.order(z) == q2 - 1) {
      t.g2 = z;
      break;
    }
  t.g1_in_q2 = t.Fq2.pow(t.g2, q + 1);
  t.g1 = -1;
  for (int a = 0; a < q; ++a)
    if (t.embed[a] == t.g1_in_q2) t.g1 = a;
  assert(t.g1 >= 0);

  t.dlog1.assign(q, -1);
  {
    int x = 1;
    for (int k = 0; k < std::max(1, q - 1); ++k) {
      t.dlog1[x] = k;
      x = t.Fq.mul(x, t.g1);
    }
  }
  t.dlog2.assign(q2, -1);
  {
    int x = 1;
    for (int k = 0; k < q2 - 1; ++k) {
      t.dlog2[x] = k;
      x = t.Fq2.mul(x, t.g2);
    }
  }

  t.beta = -1;
  for (int z = 0; z < q2; ++z)
    if (!t.in_subfield(z)) {
      t.beta = z;
      break;
    }
  assert(t.beta >= 0);
  t.split_.assign(q2, {-1, -1});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      int z = t.Fq2.add(t.embed[a], t.Fq2.mul(t.embed[b], t.beta));
      t.split_[z] = {a, b};
    }
  for (int z = 0; z < q2; ++z) assert(t.split_[z].first >= 0);
  auto [c0, c1] = t.split(t.Fq2.mul(t.beta, t.beta));
  t.beta_c0 = c0;
  t.beta_c1 = c1;
  return t;
}

}  // namespace ggv
