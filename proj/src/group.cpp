#include "ggv/group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace ggv {

std::string label_name(GroupLabel l) {
  switch (l) {
    case GroupLabel::GL2:
      return "GL2";
    case GroupLabel::SL2:
      return "SL2";
    case GroupLabel::PGL2:
      return "PGL2";
  }
  return "?";
}

uint32_t GroupInstance::pack(const Mat2& m) const {
  return ((static_cast<uint32_t>(m.a) * q + m.b) * q + m.c) * q + m.d;
}

Mat2 GroupInstance::unpack(uint32_t code) const {
  Mat2 m;
  m.d = code % q;
  code /= q;
  m.c = code % q;
  code /= q;
  m.b = code % q;
  code /= q;
  m.a = code % q;
  return m;
}

namespace {

int mat_det(const FiniteField& F, const Mat2& m) {
  return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
}

Mat2 mat_mul(const FiniteField& F, const Mat2& x, const Mat2& y) {
  Mat2 r;
  r.a = F.add(F.mul(x.a, y.a), F.mul(x.b, y.c));
  r.b = F.add(F.mul(x.a, y.b), F.mul(x.b, y.d));
  r.c = F.add(F.mul(x.c, y.a), F.mul(x.d, y.c));
  r.d = F.add(F.mul(x.c, y.b), F.mul(x.d, y.d));
  return r;
}

Mat2 mat_scale(const FiniteField& F, int s, const Mat2& m) {
  return {F.mul(s, m.a), F.mul(s, m.b), F.mul(s, m.c), F.mul(s, m.d)};
}

}  // namespace

ElemId GroupInstance::from_mat(const Mat2& m) const {
  uint32_t code = pack(m);
  if (label == GroupLabel::PGL2) {
    const FiniteField& F = tower->Fq;
    for (int s = 2; s < q; ++s) code = std::min(code, pack(mat_scale(F, s, m)));
  }
  int id = id_by_code_[code];
  assert(id >= 0);
  return id;
}

ElemId GroupInstance::diag(int x, int y) const { return from_mat({x, 0, 0, y}); }

ElemId GroupInstance::mul(ElemId x, ElemId y) const {
  Mat2 r = mat_mul(tower->Fq, unpack(elems_[x]), unpack(elems_[y]));
  if (label == GroupLabel::PGL2) return from_mat(r);
  return id_by_code_[pack(r)];
}

ElemId GroupInstance::pow(ElemId x, long long e) const {
  int n = order(x);
  e %= n;
  if (e < 0) e += n;
  ElemId r = identity_;
  ElemId b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool GroupInstance::is_unipotent(ElemId e) const {
  int n = order(e);
  while (n % tower->p == 0) n /= tower->p;
  return n == 1;
}

bool GroupInstance::is_semisimple(ElemId e) const { return order(e) % tower->p != 0; }

GroupInstance build_instance(GroupLabel label, int q, int qmax) {
  if (q > qmax) throw BoundExceeded("q exceeds configured bound");
  if ((label == GroupLabel::SL2 || label == GroupLabel::PGL2) && q % 2 == 0)
    throw UnsupportedInstance(label_name(label) + " requires odd q");
  // factor q = p^f
  int p = q, f = 1;
  for (int r = 2; r * r <= q; ++r)
    if (q % r == 0) {
      p = r;
      f = 0;
      int m = q;
      while (m > 1) {
        if (m % p != 0) throw UnsupportedInstance("q must be a prime power");
        m /= p;
        ++f;
      }
      break;
    }

  GroupInstance G;
  G.label = label;
  G.q = q;
  G.tower = std::make_shared<FieldTower>(build_field_tower(p, f, qmax));
  const FiniteField& F = G.tower->Fq;

  const uint32_t codes = static_cast<uint32_t>(q) * q * q * q;
  G.id_by_code_.assign(codes, -1);
  for (uint32_t code = 0; code < codes; ++code) {
    Mat2 m = G.unpack(code);
    int det = mat_det(F, m);
    if (det == 0) continue;
    if (label == GroupLabel::SL2 && det != 1) continue;
    if (label == GroupLabel::PGL2) {
      uint32_t canon = code;
      for (int s = 2; s < q; ++s) canon = std::min(canon, G.pack(mat_scale(F, s, m)));
      if (canon != code) continue;
    }
    G.id_by_code_[code] = static_cast<int>(G.elems_.size());
    G.elems_.push_back(code);
  }

  G.identity_ = G.id_by_code_[G.pack({1, 0, 0, 1})];
  assert(G.identity_ >= 0);

  const int n = G.size();
  G.det_.resize(n);
  G.inv_.resize(n);
  for (int e = 0; e < n; ++e) {
    Mat2 m = G.unpack(G.elems_[e]);
    int det = mat_det(F, m);
    G.det_[e] = det;
    int di = F.inv(det);
    Mat2 inv = {F.mul(di, m.d), F.mul(di, F.neg(m.b)), F.mul(di, F.neg(m.c)), F.mul(di, m.a)};
    G.inv_[e] = (label == GroupLabel::PGL2) ? G.from_mat(inv) : G.id_by_code_[G.pack(inv)];
  }
  G.order_.assign(n, 0);
  for (int e = 0; e < n; ++e) {
    int o = 1;
    ElemId x = e;
    while (x != G.identity_) {
      x = G.mul(x, e);
      ++o;
    }
    G.order_[e] = o;
  }
  return G;
}

ConjClassData conjugacy_classes(const GroupInstance& G) {
  const int n = G.size();
  ConjClassData C;
  C.class_of.assign(n, -1);
  for (ElemId e = 0; e < n; ++e) {
    if (C.class_of[e] >= 0) continue;
    int idx = C.count();
    C.rep.push_back(e);
    int sz = 0;
    for (ElemId g = 0; g < n; ++g) {
      ElemId x = G.conjugate(g, e);
      if (C.class_of[x] < 0) {
        C.class_of[x] = idx;
        ++sz;
      }
    }
    C.size.push_back(sz);
    C.centralizer_order.push_back(n / sz);
  }
  C.inverse_class.resize(C.count());
  for (int c = 0; c < C.count(); ++c) C.inverse_class[c] = C.class_of[G.inv(C.rep[c])];
  C.identity_class = C.class_of[G.identity()];
  return C;
}

JordanPair jordan(const GroupInstance& G, ElemId h) {
  const int p = G.tower->p;
  long long n = G.order(h);
  long long a = 1;
  while (n % p == 0) {
    a *= p;
    n /= p;
  }
  long long m = n;  // p'-part of the order
  if (a == 1) return {h, G.identity()};
  if (m == 1) return {G.identity(), h};
  // x ≡ 1 (mod a), x ≡ 0 (mod m): u = h^x;  s = h^{1-x}
  long long minv = 1;
  while ((m * minv) % a != 1) ++minv;
  long long x = m * minv;
  return {G.pow(h, 1 - x), G.pow(h, x)};
}

int TorusData::index_mul(int a, int b) const {
  if (group_label == GroupLabel::GL2 && cls == TorusClass::Split) {
    int base = q - 1;
    int i = a / base + b / base, j = a % base + b % base;
    return (i % base) * base + (j % base);
  }
  return (a + b) % index_count;
}

int TorusData::index_inv(int a) const {
  if (group_label == GroupLabel::GL2 && cls == TorusClass::Split) {
    int base = q - 1;
    int i = (base - a / base) % base, j = (base - a % base) % base;
    return i * base + j;
  }
  return (index_count - a) % index_count;
}

namespace {

// normalized point of P^1(F_{q^2})
std::pair<int, int> norm_point(const FiniteField& F2, int x, int y) {
  if (y != 0) return {F2.mul(x, F2.inv(y)), 1};
  return {1, 0};
}

std::pair<int, int> act_point(const FieldTower& t, const Mat2& m, std::pair<int, int> pt) {
  const FiniteField& F2 = t.Fq2;
  int a = t.embed[m.a], b = t.embed[m.b], c = t.embed[m.c], d = t.embed[m.d];
  int x = F2.add(F2.mul(a, pt.first), F2.mul(b, pt.second));
  int y = F2.add(F2.mul(c, pt.first), F2.mul(d, pt.second));
  return norm_point(F2, x, y);
}

int weyl_f_order_of(const GroupInstance& G, const TorusData& S,
                    std::pair<int, int> l1, std::pair<int, int> l2) {
  int count = 0;
  for (ElemId g = 0; g < G.size(); ++g) {
    Mat2 m = G.mat(g);
    auto i1 = act_point(*G.tower, m, l1);
    auto i2 = act_point(*G.tower, m, l2);
    if ((i1 == l1 && i2 == l2) || (i1 == l2 && i2 == l1)) ++count;
  }
  assert(count % S.order() == 0);
  return count / S.order();
}

// multiplication-by-z matrix on F_{q^2} = F_q + F_q*beta
Mat2 norm_embedding(const FieldTower& t, int z) {
  auto [a, b] = t.split(z);
  const FiniteField& F = t.Fq;
  return {a, F.mul(b, t.beta_c0), b, F.add(a, F.mul(b, t.beta_c1))};
}

}  // namespace

SubgroupData subgroup_data(const GroupInstance& G) {
  const FieldTower& t = *G.tower;
  const FiniteField& F = t.Fq;
  const int q = G.q;
  SubgroupData S;

  std::set<ElemId> borel, unip;
  for (int x = 0; x < q; ++x) unip.insert(G.from_mat({1, x, 0, 1}));
  for (int a = 1; a < q; ++a)
    for (int d = 1; d < q; ++d) {
      if (G.label == GroupLabel::SL2 && F.mul(a, d) != 1) continue;
      for (int b = 0; b < q; ++b) borel.insert(G.from_mat({a, b, 0, d}));
    }
  S.borel.assign(borel.begin(), borel.end());
  S.unipotent.assign(unip.begin(), unip.end());

  auto finish = [&](TorusData& T, std::pair<int, int> l1, std::pair<int, int> l2) {
    for (int i = 0; i < T.index_count; ++i) T.index_by_elem[T.elem_by_index[i]] = i;
    // distinct indices must give distinct group elements
    assert(static_cast<int>(T.index_by_elem.size()) == T.index_count);
    T.weyl_f_order = weyl_f_order_of(G, T, l1, l2);
  };

  const FiniteField& F2 = t.Fq2;
  std::pair<int, int> e1{1, 0}, e2{0, 1};
  int c1e = t.embed[t.beta_c1];
  std::pair<int, int> n1 = norm_point(F2, F2.sub(t.beta, c1e), 1);
  std::pair<int, int> n2 = norm_point(F2, F2.sub(t.frob(t.beta), c1e), 1);

  TorusData& Ts = S.split_torus;
  Ts.cls = TorusClass::Split;
  Ts.group_label = G.label;
  Ts.q = q;
  switch (G.label) {
    case GroupLabel::GL2: {
      Ts.index_count = (q - 1) * (q - 1);
      Ts.fq_rank = 2;
      Ts.elem_by_index.resize(Ts.index_count);
      for (int i = 0; i < q - 1; ++i)
        for (int j = 0; j < q - 1; ++j)
          Ts.elem_by_index[i * (q - 1) + j] = G.diag(F.pow(t.g1, i), F.pow(t.g1, j));
      break;
    }
    case GroupLabel::SL2: {
      Ts.index_count = q - 1;
      Ts.fq_rank = 1;
      Ts.elem_by_index.resize(Ts.index_count);
      for (int i = 0; i < q - 1; ++i)
        Ts.elem_by_index[i] = G.diag(F.pow(t.g1, i), F.pow(t.g1, q - 1 - i));
      break;
    }
    case GroupLabel::PGL2: {
      Ts.index_count = q - 1;
      Ts.fq_rank = 1;
      Ts.elem_by_index.resize(Ts.index_count);
      for (int i = 0; i < q - 1; ++i) Ts.elem_by_index[i] = G.diag(F.pow(t.g1, i), 1);
      break;
    }
  }
  finish(Ts, e1, e2);

  TorusData& Tn = S.nonsplit_torus;
  Tn.cls = TorusClass::Nonsplit;
  Tn.group_label = G.label;
  Tn.q = q;
  switch (G.label) {
    case GroupLabel::GL2: {
      Tn.index_count = q * q - 1;
      Tn.fq_rank = 1;
      Tn.elem_by_index.resize(Tn.index_count);
      for (int m = 0; m < q * q - 1; ++m)
        Tn.elem_by_index[m] = G.from_mat(norm_embedding(t, F2.pow(t.g2, m)));
      break;
    }
    case GroupLabel::SL2: {
      Tn.index_count = q + 1;
      Tn.fq_rank = 0;
      Tn.elem_by_index.resize(Tn.index_count);
      for (int m = 0; m < q + 1; ++m)
        Tn.elem_by_index[m] =
            G.from_mat(norm_embedding(t, F2.pow(t.g2, static_cast<long long>(q - 1) * m)));
      break;
    }
    case GroupLabel::PGL2: {
      Tn.index_count = q + 1;
      Tn.fq_rank = 0;
      Tn.elem_by_index.resize(Tn.index_count);
      for (int m = 0; m < q + 1; ++m) Tn.elem_by_index[m] = G.from_mat(norm_embedding(t, F2.pow(t.g2, m)));
      break;
    }
  }
  finish(Tn, n1, n2);
  return S;
}

ExtensionData extension_data(const GroupInstance& H, const GroupInstance& G) {
  if (H.label != GroupLabel::GL2 || G.label != GroupLabel::SL2 || H.q != G.q)
    throw PairModeRequired("extension data needs GL2 and SL2 over the same F_q");
  const FieldTower& t = *H.tower;
  ExtensionData E;
  E.to_H.resize(G.size());
  E.to_G.assign(H.size(), -1);
  for (ElemId e = 0; e < G.size(); ++e) {
    ElemId h = H.from_mat(G.mat(e));
    E.to_H[e] = h;
    E.to_G[h] = e;
  }
  E.kappa_dlog.resize(H.size());
  for (ElemId e = 0; e < H.size(); ++e) E.kappa_dlog[e] = t.dlog1[H.det_code(e)];
  E.section.resize(H.q - 1);
  for (int k = 0; k < H.q - 1; ++k) E.section[k] = H.diag(t.Fq.pow(t.g1, k), 1);
  return E;
}

int fq_rank_of_group(GroupLabel l) { return l == GroupLabel::GL2 ? 2 : 1; }

int epsilon_of_group(GroupLabel l) { return fq_rank_of_group(l) % 2 == 0 ? 1 : -1; }

int epsilon_of_torus(GroupLabel l, TorusClass c) {
  int rank = (c == TorusClass::Split) ? fq_rank_of_group(l) : fq_rank_of_group(l) - 1;
  return rank % 2 == 0 ? 1 : -1;
}

}  // namespace ggv
