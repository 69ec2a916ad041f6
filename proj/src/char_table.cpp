#include "ggv/char_table.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

#include <json.hpp>

namespace ggv {

namespace {

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 l) { return static_cast<unsigned __int128>(a) * b % l; }

u64 powmod(u64 a, u64 e, u64 l) {
  u64 r = 1;
  a %= l;
  while (e) {
    if (e & 1) r = mulmod(r, a, l);
    a = mulmod(a, a, l);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 l) { return powmod(a % l, l - 2, l); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// columns of B span a subspace of F_l^k; returns coordinates of v in the
// span, or empty if v is outside (B is kept column-echelon by construction)
struct Echelon {
  Mat basis;             // basis vectors (rows of this container)
  std::vector<int> piv;  // pivot position of each basis vector
  u64 l;

  // reduce v against the basis; returns coordinates if it lies in the span
  bool coords(Vec v, Vec& out) const {
    out.assign(basis.size(), 0);
    for (size_t r = 0; r < basis.size(); ++r) {
      u64 c = v[piv[r]];
      if (c == 0) continue;
      out[r] = c;  // basis vectors are normalized to pivot = 1
      for (size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + l - mulmod(c, basis[r][j], l)) % l;
    }
    for (u64 x : v)
      if (x) return false;
    return true;
  }
};

Echelon echelonize(Mat vecs, u64 l) {
  Echelon e;
  e.l = l;
  for (auto& v : vecs) {
    for (size_t r = 0; r < e.basis.size(); ++r) {
      u64 c = v[e.piv[r]];
      if (c)
        for (size_t j = 0; j < v.size(); ++j)
          v[j] = (v[j] + l - mulmod(c, e.basis[r][j], l)) % l;
    }
    int p = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j]) {
        p = static_cast<int>(j);
        break;
      }
    if (p < 0) continue;
    u64 inv = invmod(v[p], l);
    for (auto& x : v) x = mulmod(x, inv, l);
    e.basis.push_back(v);
    e.piv.push_back(p);
  }
  return e;
}

// characteristic polynomial of a d x d matrix over F_l by Hessenberg
// reduction followed by the standard recurrence
Vec char_poly(Mat a, u64 l) {
  const int d = static_cast<int>(a.size());
  for (int j = 0; j < d - 2; ++j) {
    int piv = -1;
    for (int i = j + 1; i < d; ++i)
      if (a[i][j]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(a[piv], a[j + 1]);
      for (int i = 0; i < d; ++i) std::swap(a[i][piv], a[i][j + 1]);
    }
    u64 inv = invmod(a[j + 1][j], l);
    for (int i = j + 2; i < d; ++i) {
      u64 f = mulmod(a[i][j], inv, l);
      if (!f) continue;
      for (int c = 0; c < d; ++c) a[i][c] = (a[i][c] + l - mulmod(f, a[j + 1][c], l)) % l;
      for (int r = 0; r < d; ++r) a[r][j + 1] = (a[r][j + 1] + mulmod(f, a[r][i], l)) % l;
    }
  }
  // p_0 = 1; p_k = char poly of leading k x k block
  std::vector<Vec> p(d + 1);
  p[0] = {1};
  for (int k = 1; k <= d; ++k) {
    p[k].assign(k + 1, 0);
    // p_k = (x - a[k-1][k-1]) p_{k-1} - sum_{i<k-1} h-terms
    for (int i = 0; i < k; ++i) {
      p[k][i + 1] = (p[k][i + 1] + p[k - 1][i]) % l;
      p[k][i] = (p[k][i] + l - mulmod(a[k - 1][k - 1] % l, p[k - 1][i], l)) % l;
    }
    u64 prod = 1;
    for (int m = k - 2; m >= 0; --m) {
      prod = mulmod(prod, a[m + 1][m], l);
      if (!prod) break;
      u64 f = mulmod(prod, a[m][k - 1], l);
      if (!f) continue;
      for (int i = 0; i <= m; ++i) p[k][i] = (p[k][i] + l - mulmod(f, p[m][i], l)) % l;
    }
  }
  return p[d];
}

Vec poly_eval_roots(const Vec& poly, u64 l) {
  Vec roots;
  for (u64 x = 0; x < l; ++x) {
    u64 v = 0;
    for (int k = static_cast<int>(poly.size()) - 1; k >= 0; --k) v = (mulmod(v, x, l) + poly[k]) % l;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

struct DixonState {
  const InstanceData* D;
  u64 l;
  u64 omega_e;  // primitive e-th root of unity mod l
  long long e;  // group exponent
  std::vector<std::vector<ElemId>> members;
};

}  // namespace

void verify_table_invariants(const InstanceData& D, const CharacterTable& table) {
  const ConjClassData& C = D.classes;
  const int k = C.count();
  if (table.count() != k)
    throw TableComputationFailed("irreducible count != class count");
  Int sum_sq = 0;
  for (int i = 0; i < k; ++i) {
    const ClassFunction& chi = table.irr[i];
    CycNum deg = chi.values[C.identity_class];
    if (!deg.is_rational_integer())
      throw TableComputationFailed("non-integral degree");
    Int d = deg.as_rational().num;
    if (d <= 0 || Int(D.G.size()) % d != 0)
      throw TableComputationFailed("degree does not divide |G|");
    if (d != table.degree[i]) throw TableComputationFailed("degree vector mismatch");
    sum_sq += d * d;
    for (const CycNum& v : chi.values)
      if (v.raw_den() != 1) throw TableComputationFailed("character value is not an algebraic integer");
  }
  if (sum_sq != D.G.size()) throw TableComputationFailed("sum of squared degrees != |G|");
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      CycNum ip = inner_product(table.irr[i], table.irr[j]);
      bool expect_one = (i == j);
      if (expect_one ? !ip.is_one() : !ip.is_zero())
        throw TableComputationFailed("row orthogonality failed");
    }
  // second orthogonality on all class pairs
  for (int c = 0; c < k; ++c)
    for (int cp = c; cp < k; ++cp) {
      CycNum s;
      for (int i = 0; i < k; ++i) s += table.irr[i].values[c] * table.irr[i].values[cp].conj();
      CycNum expect = (c == cp) ? CycNum(Rat(Int(C.centralizer_order[c]))) : CycNum(0);
      if (!(s == expect.lifted_to(D.N)))
        throw TableComputationFailed("column orthogonality failed");
    }
}

namespace {

CharacterTable dixon_schneider(const InstanceData& D) {
  const GroupInstance& G = D.G;
  const ConjClassData& C = D.classes;
  const int k = C.count();
  const int n = G.size();

  DixonState st;
  st.D = &D;
  st.members.assign(k, {});
  for (ElemId e = 0; e < n; ++e) st.members[C.class_of[e]].push_back(e);

  long long expo = 1;
  for (int c = 0; c < k; ++c) expo = std::lcm(expo, static_cast<long long>(G.order(C.rep[c])));
  st.e = expo;

  long long l = expo + 1;
  while (!(is_prime(l) && l * l > 4LL * n && n % l != 0)) l += expo;
  st.l = static_cast<u64>(l);

  u64 gen = 2;
  while (true) {
    // generator test over the prime divisors of l-1
    bool ok = true;
    long long m = l - 1;
    std::vector<long long> primes;
    for (long long f = 2; f * f <= m; ++f)
      if (m % f == 0) {
        primes.push_back(f);
        while (m % f == 0) m /= f;
      }
    if (m > 1) primes.push_back(m);
    for (long long f : primes)
      if (powmod(gen, (l - 1) / f, st.l) == 1) ok = false;
    if (ok) break;
    ++gen;
  }
  st.omega_e = powmod(gen, (st.l - 1) / st.e, st.l);

  // class matrices A_j[kk][ll] = #{(x,y) in C_j x C_kk : x y = rep_ll}
  std::vector<Mat> class_mats(k, Mat(k, Vec(k, 0)));
  for (int j = 0; j < k; ++j)
    for (int ll = 0; ll < k; ++ll) {
      ElemId z = C.rep[ll];
      for (ElemId x : st.members[j]) {
        int kk = C.class_of[G.mul(G.inv(x), z)];
        ++class_mats[j][kk][ll];
      }
    }

  // split F_l^k into common eigenspaces
  std::vector<Mat> spaces;
  {
    Mat full(k, Vec(k, 0));
    for (int i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(full);
  }
  for (int j = 0; j < k; ++j) {
    bool all_one = true;
    for (auto& sp : spaces) all_one &= sp.size() == 1;
    if (all_one) break;
    std::vector<Mat> next;
    for (auto& sp : spaces) {
      if (sp.size() == 1) {
        next.push_back(sp);
        continue;
      }
      const int d = static_cast<int>(sp.size());
      Echelon ech = echelonize(sp, st.l);
      assert(static_cast<int>(ech.basis.size()) == d);
      // action of A_j on the subspace in the echelon basis
      Mat act(d, Vec(d, 0));
      for (int r = 0; r < d; ++r) {
        Vec w(k, 0);
        for (int col = 0; col < k; ++col) {
          if (!ech.basis[r][col]) continue;
          for (int row = 0; row < k; ++row)
            if (class_mats[j][row][col])
              w[row] = (w[row] + mulmod(class_mats[j][row][col], ech.basis[r][col], st.l)) % st.l;
        }
        Vec coords;
        bool inside = ech.coords(w, coords);
        assert(inside);
        for (int c = 0; c < d; ++c) act[c][r] = coords[c];  // column r = image of basis r
      }
      Vec cp = char_poly(act, st.l);
      Vec roots = poly_eval_roots(cp, st.l);
      for (u64 lam : roots) {
        // kernel of (act - lam I)
        Mat m(d, Vec(d, 0));
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) m[r][c] = (act[r][c] + (r == c ? st.l - lam : 0)) % st.l;
        // gaussian elimination to find kernel
        std::vector<int> piv_col(d, -1);
        int rank = 0;
        for (int col = 0; col < d && rank < d; ++col) {
          int pr = -1;
          for (int r = rank; r < d; ++r)
            if (m[r][col]) {
              pr = r;
              break;
            }
          if (pr < 0) continue;
          std::swap(m[pr], m[rank]);
          u64 inv = invmod(m[rank][col], st.l);
          for (auto& x : m[rank]) x = mulmod(x, inv, st.l);
          for (int r = 0; r < d; ++r) {
            if (r == rank || !m[r][col]) continue;
            u64 f = m[r][col];
            for (int c = 0; c < d; ++c) m[r][c] = (m[r][c] + st.l - mulmod(f, m[rank][c], st.l)) % st.l;
          }
          piv_col[rank] = col;
          ++rank;
        }
        Mat newsp;
        std::vector<char> is_piv(d, 0);
        for (int r = 0; r < rank; ++r) is_piv[piv_col[r]] = 1;
        for (int free_col = 0; free_col < d; ++free_col) {
          if (is_piv[free_col]) continue;
          Vec coords(d, 0);
          coords[free_col] = 1;
          for (int r = 0; r < rank; ++r)
            coords[piv_col[r]] = (st.l - m[r][free_col]) % st.l;
          Vec v(k, 0);
          for (int c = 0; c < d; ++c) {
            if (!coords[c]) continue;
            for (int col = 0; col < k; ++col)
              v[col] = (v[col] + mulmod(coords[c], ech.basis[c][col], st.l)) % st.l;
          }
          newsp.push_back(v);
        }
        assert(!newsp.empty());
        next.push_back(newsp);
      }
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k)
    throw TableComputationFailed("class algebra did not split into " + std::to_string(k) +
                                 " eigenspaces");

  // power maps for the lift
  std::vector<std::vector<int>> power_class(k);
  for (int c = 0; c < k; ++c) {
    int m = G.order(C.rep[c]);
    power_class[c].resize(m);
    ElemId x = G.identity();
    for (int i = 0; i < m; ++i) {
      power_class[c][i] = C.class_of[x];
      x = G.mul(x, C.rep[c]);
    }
  }

  CharacterTable table;
  std::vector<std::pair<long long, CycVec>> rows;
  for (auto& sp : spaces) {
    Vec v = sp[0];
    u64 at_id = v[C.identity_class];
    if (!at_id) throw TableComputationFailed("eigenvector vanishes at the identity class");
    u64 norm = invmod(at_id, st.l);
    Vec omega(k);
    for (int c = 0; c < k; ++c) omega[c] = mulmod(v[c], norm, st.l);

    u64 T = 0;
    for (int c = 0; c < k; ++c)
      T = (T + mulmod(mulmod(omega[c], omega[C.inverse_class[c]], st.l),
                      invmod(C.size[c] % st.l, st.l), st.l)) %
          st.l;
    u64 dd = mulmod(n % st.l, invmod(T, st.l), st.l);
    long long deg = -1;
    for (long long d = 1; static_cast<long long>(d) * d <= n; ++d)
      if (mulmod(d, d, st.l) == dd) {
        deg = d;
        break;
      }
    if (deg < 0) throw TableComputationFailed("no integral degree matches eigenvector");

    Vec chi_mod(k);
    for (int c = 0; c < k; ++c)
      chi_mod[c] = mulmod(mulmod(omega[c], deg % st.l, st.l), invmod(C.size[c] % st.l, st.l), st.l);

    CycVec values(k);
    for (int c = 0; c < k; ++c) {
      int m = G.order(C.rep[c]);
      u64 om = powmod(st.omega_e, st.e / m, st.l);
      u64 minv = invmod(m % st.l, st.l);
      CycNum val = CycNum::zero(D.N);
      long long coeff_sum = 0;
      for (int t = 0; t < m; ++t) {
        u64 s = 0;
        u64 om_mt = powmod(om, (static_cast<u64>(m) - t % m) % m, st.l);  // om^{-t}
        u64 w = 1;
        for (int i = 0; i < m; ++i) {
          s = (s + mulmod(chi_mod[power_class[c][i]], w, st.l)) % st.l;
          w = mulmod(w, om_mt, st.l);
        }
        u64 nt = mulmod(s, minv, st.l);
        if (nt > static_cast<u64>(deg))
          throw TableComputationFailed("eigenvalue multiplicity out of range");
        if (nt) {
          coeff_sum += static_cast<long long>(nt);
          val += CycNum::root_of_unity(m, t, D.N).scaled(Rat(Int(nt)));
        }
      }
      if (coeff_sum != deg)
        throw TableComputationFailed("eigenvalue multiplicities do not sum to the degree");
      values[c] = val;
    }
    rows.emplace_back(deg, std::move(values));
  }

  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    for (size_t i = 0; i < a.second.size(); ++i) {
      if (a.second[i] == b.second[i]) continue;
      return CycNum::less(a.second[i], b.second[i]);
    }
    return false;
  });
  for (auto& [deg, vals] : rows) {
    table.degree.push_back(deg);
    table.irr.push_back(make_class_function(D, std::move(vals)));
  }
  return table;
}

nlohmann::ordered_json table_to_json(const InstanceData& D, const CharacterTable& t) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["label"] = label_name(D.G.label);
  j["q"] = D.G.q;
  j["N"] = D.N;
  j["poly_q"] = D.G.tower->Fq.irred;
  j["poly_q2"] = D.G.tower->Fq2.irred;
  nlohmann::ordered_json reps = nlohmann::ordered_json::array();
  for (int c = 0; c < D.classes.count(); ++c) {
    Mat2 m = D.G.mat(D.classes.rep[c]);
    reps.push_back({m.a, m.b, m.c, m.d});
  }
  j["class_reps"] = reps;
  j["degrees"] = t.degree;
  nlohmann::ordered_json vals = nlohmann::ordered_json::array();
  for (const auto& chi : t.irr) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& v : chi.values) {
      nlohmann::ordered_json entry = nlohmann::ordered_json::array();
      entry.push_back(v.raw_den().str());
      for (int i = 0; i < v.dim(); ++i) entry.push_back((v.coord(i).num * (v.raw_den() / v.coord(i).den)).str());
      row.push_back(entry);
    }
    vals.push_back(row);
  }
  j["values"] = vals;
  return j;
}

bool table_from_json(const InstanceData& D, const nlohmann::json& j, CharacterTable& out) {
  try {
    if (j.at("schema") != 1 || j.at("label") != label_name(D.G.label) || j.at("q") != D.G.q ||
        j.at("N") != D.N)
      return false;
    if (j.at("poly_q") != nlohmann::json(D.G.tower->Fq.irred)) return false;
    const auto& vals = j.at("values");
    const auto& degs = j.at("degrees");
    const int k = D.classes.count();
    if (static_cast<int>(vals.size()) != k) return false;
    const CycContext* ctx = CycContext::get(D.N);
    CharacterTable t;
    for (int i = 0; i < k; ++i) {
      CycVec row(k);
      for (int c = 0; c < k; ++c) {
        const auto& entry = vals.at(i).at(c);
        if (static_cast<int>(entry.size()) != ctx->phi + 1) return false;
        Int den(entry.at(0).get<std::string>());
        std::vector<Int> num(ctx->phi);
        for (int x = 0; x < ctx->phi; ++x) num[x] = Int(entry.at(x + 1).get<std::string>());
        row[c] = CycNum(ctx, std::move(num), den);
      }
      t.irr.push_back(make_class_function(D, std::move(row)));
      t.degree.push_back(degs.at(i).get<long long>());
    }
    verify_table_invariants(D, t);
    out = std::move(t);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::string cache_file_name(const InstanceData& D) {
  return "chartab_" + label_name(D.G.label) + "_q" + std::to_string(D.G.q) + "_v1.json";
}

CharacterTable character_table(const InstanceData& D, const std::string& cache_dir) {
  namespace fs = std::filesystem;
  fs::path path;
  if (!cache_dir.empty()) {
    path = fs::path(cache_dir) / cache_file_name(D);
    if (fs::exists(path)) {
      std::ifstream in(path);
      nlohmann::json j;
      CharacterTable t;
      try {
        in >> j;
      } catch (const std::exception&) {
        j = nullptr;
      }
      if (!j.is_null() && table_from_json(D, j, t)) return t;
      // fall through to recompute on a corrupt cache entry
    }
  }
  CharacterTable t = dixon_schneider(D);
  verify_table_invariants(D, t);
  if (!cache_dir.empty()) {
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << table_to_json(D, t).dump(1);
    }
    fs::rename(tmp, path);  // atomic publish
  }
  return t;
}

std::vector<std::string> cache_files(const std::string& cache_dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  if (cache_dir.empty() || !fs::exists(cache_dir)) return out;
  for (const auto& e : fs::directory_iterator(cache_dir))
    if (e.path().extension() == ".json") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

bool validate_cache_file(const std::string& path) {
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
    std::string label = j.at("label");
    int q = j.at("q");
    GroupLabel gl = label == "GL2"   ? GroupLabel::GL2
                    : label == "SL2" ? GroupLabel::SL2
                                     : GroupLabel::PGL2;
    InstanceData D = build_instance_data(gl, q);
    CharacterTable t;
    return table_from_json(D, j, t);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace ggv
