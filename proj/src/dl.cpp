#include "ggv/dl.hpp"

#include <cassert>
#include <sstream>

namespace ggv {

CycNum torus_pairing(const TorusData& S, int s_idx, int t_idx, int N) {
  const int q = S.q;
  if (S.group_label == GroupLabel::GL2 && S.cls == TorusClass::Split) {
    int base = q - 1;
    long long e = static_cast<long long>(s_idx / base) * (t_idx / base) +
                  static_cast<long long>(s_idx % base) * (t_idx % base);
    return CycNum::root_of_unity(base, e, N);
  }
  long long e = static_cast<long long>(s_idx) * t_idx;
  if (S.cls == TorusClass::Split) return CycNum::root_of_unity(q - 1, e, N);
  return CycNum::root_of_unity(S.index_count, e, N);
}

int torus_w_act(const TorusData& S, int idx) {
  const int q = S.q;
  if (S.group_label == GroupLabel::GL2) {
    if (S.cls == TorusClass::Split) {
      int base = q - 1;
      return (idx % base) * base + idx / base;  // swap the two exponents
    }
    return static_cast<int>((static_cast<long long>(idx) * q) % (q * q - 1));
  }
  // SL2 / PGL2: the Weyl flip acts by inversion on the one-parameter space
  return S.index_inv(idx);
}

namespace {

long long p_prime_part(long long n, int p) {
  while (n % p == 0) n /= p;
  return n;
}

// diagonal-part index of a Borel element, for the theta lift to B_0
int borel_diag_index(const InstanceData& D, ElemId b) {
  const FieldTower& t = *D.G.tower;
  Mat2 m = D.G.mat(b);
  assert(m.c == 0);
  if (D.G.label == GroupLabel::GL2) return t.dlog1[m.a] * (D.G.q - 1) + t.dlog1[m.d];
  return t.dlog1[m.a];  // SL2: d = a^{-1}
}

DLFamily build_split(const InstanceData& D) {
  DLFamily F;
  F.cls = TorusClass::Split;
  F.eps = epsilon_of_group(D.G.label) * epsilon_of_torus(D.G.label, TorusClass::Split);
  const TorusData& S = D.subgroups.split_torus;
  F.R.reserve(S.index_count);
  for (int k = 0; k < S.index_count; ++k) {
    ClassFunction Rk = induce_from_subgroup(D, D.subgroups.borel, [&](ElemId b) {
      return torus_pairing(S, k, borel_diag_index(D, b), D.N);
    });
    F.R.push_back(std::move(Rk));
  }
  return F;
}

DLFamily build_nonsplit(const InstanceData& D, const DLFamily& split) {
  DLFamily F;
  F.cls = TorusClass::Nonsplit;
  F.eps = epsilon_of_group(D.G.label) * epsilon_of_torus(D.G.label, TorusClass::Nonsplit);
  const TorusData& S = D.subgroups.nonsplit_torus;
  const ConjClassData& C = D.classes;
  const TorusData& Ssplit = D.subgroups.split_torus;

  // Q_S(1) from the degree formula
  Rat q1(Int(F.eps) * p_prime_part(D.G.size(), D.G.tower->p), Int(S.order()));
  assert(q1.is_integer());
  CycNum Q1 = CycNum::from_rat(D.N, q1);

  std::vector<int> unip;
  unip.push_back(C.identity_class);
  for (int c = 0; c < C.count(); ++c)
    if (c != C.identity_class && D.G.is_unipotent(C.rep[c])) unip.push_back(c);
  F.unip_classes = unip;
  const int n_unknown = static_cast<int>(unip.size()) - 1;
  auto unknown_of_class = [&](int cls) {
    for (size_t i = 1; i < unip.size(); ++i)
      if (unip[i] == cls) return static_cast<int>(i) - 1;
    return -1;
  };

  // value of R(theta_k) on class c, affine in the unknown Green values
  struct Affine {
    CycNum cst;
    std::vector<std::pair<int, CycNum>> lin;
  };
  auto value_expr = [&](int c, int k) -> Affine {
    Affine a;
    a.cst = CycNum::zero(D.N);
    ElemId h = C.rep[c];
    auto [s, u] = jordan(D.G, h);
    int s_class = C.class_of[s];
    if (C.size[s_class] == 1) {
      // central s: value = Q(u) theta_k(s)
      CycNum th = torus_pairing(S, k, S.index_of(s), D.N);
      if (C.class_of[u] == C.identity_class)
        a.cst = Q1 * th;
      else
        a.lin.emplace_back(unknown_of_class(C.class_of[u]), th);
    } else {
      // noncentral semisimple s (so u = 1): sum of theta over the torus
      // points lying in the class; zero if the class misses S^F
      for (int idx = 0; idx < S.index_count; ++idx)
        if (C.class_of[S.elem_by_index[idx]] == c) a.cst += torus_pairing(S, k, idx, D.N);
    }
    return a;
  };

  // constraints: orthogonality to every split character (one equation per
  // (k, l)), plus the Gelfand-Graev multiplicities <R_S(theta), Gamma_psi>
  // = eps_G eps_S for every theta and every regular psi.  The latter are
  // needed to separate the two regular-unipotent classes of SL2, where all
  // split-induced characters take equal values; the Gamma values are
  // Gauss-sum-like and do distinguish them.
  std::vector<ClassFunction> gammas;
  for (const auto& psi : regular_characters(D)) gammas.push_back(gg_character(D, psi));
  const int nk = S.index_count, nl = Ssplit.index_count;
  const int ng = static_cast<int>(gammas.size());
  CycMat A(nk * (nl + ng), n_unknown, CycNum::zero(D.N));
  CycVec b(nk * (nl + ng), CycNum::zero(D.N));
  for (int k = 0; k < nk; ++k) {
    for (int l = 0; l < nl; ++l) {
      int row = k * (nl + ng) + l;
      for (int c = 0; c < C.count(); ++c) {
        CycNum w = split.R[l].values[c].conj().scaled(Rat(Int(C.size[c])));
        if (w.is_zero()) continue;
        Affine a = value_expr(c, k);
        if (!a.cst.is_zero()) b[row] -= a.cst * w;
        for (auto& [ui, coef] : a.lin) A.at(row, ui) += coef * w;
      }
    }
    for (int gi = 0; gi < ng; ++gi) {
      int row = k * (nl + ng) + nl + gi;
      b[row] = CycNum::from_rat(D.N, Rat(Int(F.eps) * D.G.size()));
      for (int c = 0; c < C.count(); ++c) {
        CycNum w = gammas[gi].values[c].conj().scaled(Rat(Int(C.size[c])));
        if (w.is_zero()) continue;
        Affine a = value_expr(c, k);
        if (!a.cst.is_zero()) b[row] -= a.cst * w;
        for (auto& [ui, coef] : a.lin) A.at(row, ui) += coef * w;
      }
    }
  }
  SolveResult sol = solve_exact(A, b);
  if (sol.status == SolveStatus::Ambiguous)
    throw AmbiguousConstraintSystem("nonsplit Deligne-Lusztig system is underdetermined for " +
                                    label_name(D.G.label) + " q=" + std::to_string(D.G.q));
  if (sol.status == SolveStatus::Inconsistent)
    throw InconsistentSystem("nonsplit Deligne-Lusztig system has no solution");

  F.green.push_back(Q1);
  for (int i = 0; i < n_unknown; ++i) F.green.push_back(sol.x[i]);

  F.R.reserve(nk);
  for (int k = 0; k < nk; ++k) {
    CycVec values(C.count());
    for (int c = 0; c < C.count(); ++c) {
      Affine a = value_expr(c, k);
      CycNum v = a.cst;
      for (auto& [ui, coef] : a.lin) v += coef * sol.x[ui];
      values[c] = v;
    }
    F.R.push_back(make_class_function(D, std::move(values)));
  }
  return F;
}

void fill_unip_and_green_split(const InstanceData& D, DLFamily& F) {
  const ConjClassData& C = D.classes;
  F.unip_classes.push_back(C.identity_class);
  for (int c = 0; c < C.count(); ++c)
    if (c != C.identity_class && D.G.is_unipotent(C.rep[c])) F.unip_classes.push_back(c);
  for (int c : F.unip_classes) F.green.push_back(F.R[0].values[c]);
}

void fill_traces(const InstanceData& D, DLFamily& F, const TorusData& S) {
  const int k = D.classes.count();
  F.trace.assign(k, std::vector<long long>(S.index_count, 0));
  for (int c = 0; c < k; ++c)
    for (int t = 0; t < S.index_count; ++t) {
      CycNum s = CycNum::zero(D.N);
      for (int kk = 0; kk < S.index_count; ++kk)
        s += F.R[kk].values[c] * torus_pairing(S, kk, t, D.N);
      if (!s.is_rational_integer())
        throw NonIntegralTrace("trace at class " + std::to_string(c) + ", torus point " +
                               std::to_string(t) + " is " + s.str());
      F.trace[c][t] = static_cast<long long>(s.as_rational().num);
    }
}

}  // namespace

DLSystem dl_system(const InstanceData& D) {
  if (D.G.label == GroupLabel::PGL2)
    throw UnsupportedInstance("Deligne-Lusztig pipelines run on GL2 and SL2 only");
  DLSystem dl;
  dl.D = &D;
  dl.split = build_split(D);
  fill_unip_and_green_split(D, dl.split);
  dl.nonsplit = build_nonsplit(D, dl.split);
  fill_traces(D, dl.split, D.subgroups.split_torus);
  fill_traces(D, dl.nonsplit, D.subgroups.nonsplit_torus);
  return dl;
}

long long dl_trace(const DLSystem& dl, TorusClass cls, int class_idx, int t_idx) {
  return dl.family(cls).trace[class_idx][t_idx];
}

CycNum dl_trace_elem(const DLSystem& dl, TorusClass cls, const GAElem& x, int t_idx) {
  const DLFamily& F = dl.family(cls);
  CycNum s = CycNum::zero(dl.D->N);
  for (auto& [e, c] : x.coeff) {
    long long tr = F.trace[dl.D->classes.class_of[e]][t_idx];
    if (tr) s += c.scaled(Rat(Int(tr)));
  }
  return s;
}

std::vector<std::string> dl_gates(const DLSystem& dl) {
  std::vector<std::string> fails;
  const InstanceData& D = *dl.D;
  const ConjClassData& C = D.classes;
  for (TorusClass cls : {TorusClass::Split, TorusClass::Nonsplit}) {
    const DLFamily& F = dl.family(cls);
    const TorusData& S = D.subgroups.torus(cls);
    std::string tag = (cls == TorusClass::Split ? "split" : "nonsplit");
    Rat expect(Int(F.eps) * p_prime_part(D.G.size(), D.G.tower->p), Int(S.order()));
    for (int k = 0; k < S.index_count; ++k)
      if (!(F.R[k].values[C.identity_class] == CycNum::from_rat(D.N, expect)))
        fails.push_back(tag + " degree failed at theta " + std::to_string(k));
    for (int k = 0; k < S.index_count; ++k)
      for (int l = 0; l < S.index_count; ++l) {
        CycNum ip = inner_product(F.R[k], F.R[l]);
        int expect_n = (k == l ? 1 : 0) + (torus_w_act(S, k) == l ? 1 : 0);
        if (!(ip == CycNum(expect_n).lifted_to(D.N)))
          fails.push_back(tag + " norm table failed at (" + std::to_string(k) + "," +
                          std::to_string(l) + ")");
      }
    for (int k = 1; k < S.index_count; ++k)
      for (size_t ui = 0; ui < F.unip_classes.size(); ++ui)
        if (!(F.R[k].values[F.unip_classes[ui]] == F.green[ui]))
          fails.push_back(tag + " unipotent value depends on theta at k=" + std::to_string(k));
  }
  for (size_t k = 0; k < dl.split.R.size(); ++k)
    for (size_t l = 0; l < dl.nonsplit.R.size(); ++l)
      if (!inner_product(dl.split.R[k], dl.nonsplit.R[l]).is_zero())
        fails.push_back("cross-torus orthogonality failed at (" + std::to_string(k) + "," +
                        std::to_string(l) + ")");
  CycNum qs = dl.split.green[0];
  long long index = D.G.size() / static_cast<long long>(D.subgroups.borel.size());
  if (!(qs == CycNum(index).lifted_to(D.N))) fails.push_back("split Green at 1 is not |G:B|");
  // Gelfand-Graev multiplicities <R_S(theta), Gamma_psi> = eps_G eps_S,
  // for every torus, theta and regular psi
  for (const auto& psi : regular_characters(D)) {
    ClassFunction gamma = gg_character(D, psi);
    for (TorusClass cls : {TorusClass::Split, TorusClass::Nonsplit}) {
      const DLFamily& F = dl.family(cls);
      for (size_t k = 0; k < F.R.size(); ++k)
        if (!(inner_product(F.R[k], gamma) == CycNum(F.eps).lifted_to(D.N)))
          fails.push_back(std::string(cls == TorusClass::Split ? "split" : "nonsplit") +
                          " Gelfand-Graev multiplicity failed at theta " + std::to_string(k) +
                          " psi " + std::to_string(psi.a_dlog));
    }
  }
  return fails;
}

std::vector<std::string> verify_dl_formula(const DLSystem& dl) {
  std::vector<std::string> fails;
  const InstanceData& D = *dl.D;
  const ConjClassData& C = D.classes;
  for (TorusClass cls : {TorusClass::Split, TorusClass::Nonsplit}) {
    const DLFamily& F = dl.family(cls);
    const TorusData& S = D.subgroups.torus(cls);
    auto green_at = [&](int class_idx) -> CycNum {
      for (size_t i = 0; i < F.unip_classes.size(); ++i)
        if (F.unip_classes[i] == class_idx) return F.green[i];
      return CycNum::zero(D.N);
    };
    for (int c = 0; c < C.count(); ++c) {
      ElemId h = C.rep[c];
      auto [s, u] = jordan(D.G, h);
      bool central = (C.size[C.class_of[s]] == 1);
      // transporter counts #{g : g^-1 s g = t} over t in S^F
      std::vector<long long> cnt(S.index_count, 0);
      for (ElemId g = 0; g < D.G.size(); ++g) {
        ElemId x = D.G.conjugate(D.G.inv(g), s);
        if (S.contains(x)) ++cnt[S.index_of(x)];
      }
      long long centralizer =
          central ? D.G.size() : C.centralizer_order[C.class_of[s]];  // C_G(s) connected here
      for (int k = 0; k < S.index_count; ++k) {
        CycNum factor = central ? green_at(C.class_of[u])
                                : (C.class_of[u] == C.identity_class ? CycNum::one(D.N)
                                                                     : CycNum::zero(D.N));
        CycNum rhs = CycNum::zero(D.N);
        if (!factor.is_zero()) {
          CycNum acc = CycNum::zero(D.N);
          for (int t = 0; t < S.index_count; ++t)
            if (cnt[t]) acc += torus_pairing(S, k, t, D.N).scaled(Rat(Int(cnt[t])));
          rhs = factor * acc.scaled(Rat(Int(1), Int(centralizer)));
        }
        if (!(rhs == F.R[k].values[c])) {
          std::ostringstream os;
          os << (cls == TorusClass::Split ? "split" : "nonsplit")
             << " character formula failed at class " << c << " theta " << k << ": stored "
             << F.R[k].values[c].str() << " vs " << rhs.str();
          fails.push_back(os.str());
        }
      }
    }
  }
  return fails;
}

int restrict_theta_index(const PairContext& pc, TorusClass cls, int k) {
  const int q = pc.H->G.q;
  if (cls == TorusClass::Split) {
    int base = q - 1;
    return ((k / base - k % base) % base + base) % base;
  }
  return k % (q + 1);
}

std::vector<std::string> verify_pair_traces(const PairContext& pc) {
  std::vector<std::string> fails;
  const InstanceData& H = *pc.H;
  const InstanceData& G = *pc.G;
  const ExtensionData& X = *pc.X;

  for (TorusClass cls : {TorusClass::Split, TorusClass::Nonsplit}) {
    const TorusData& TH = H.subgroups.torus(cls);
    const TorusData& TG = G.subgroups.torus(cls);
    std::string tag = (cls == TorusClass::Split ? "split" : "nonsplit");

    // T_G^F = ker(kappa) inside T_H^F, with matched H-side indices
    std::vector<int> THidx_of_TGidx(TG.index_count);
    for (int i = 0; i < TG.index_count; ++i) {
      ElemId inH = X.to_H[TG.elem_by_index[i]];
      if (!TH.contains(inH)) {
        fails.push_back(tag + " torus alignment broken");
        return fails;
      }
      THidx_of_TGidx[i] = TH.index_of(inH);
    }

    // (5) first clause: vanishing whenever kappa(h t) != 1
    for (ElemId h = 0; h < H.G.size(); ++h) {
      int ch = H.classes.class_of[h];
      for (int t = 0; t < TH.index_count; ++t) {
        int kappa = (X.kappa_dlog[h] + X.kappa_dlog[TH.elem_by_index[t]]) % (H.G.q - 1);
        if (kappa != 0 && pc.dlH->family(cls).trace[ch][t] != 0)
          fails.push_back(tag + " (5) clause 1 failed at h=" + std::to_string(h) +
                          " t=" + std::to_string(t));
      }
    }
    // (5) second clause: the |Z^F| ratio on G^F x T_G^F
    for (ElemId g = 0; g < G.G.size(); ++g) {
      int cH = H.classes.class_of[X.to_H[g]];
      int cG = G.classes.class_of[g];
      for (int i = 0; i < TG.index_count; ++i) {
        long long trH = pc.dlH->family(cls).trace[cH][THidx_of_TGidx[i]];
        long long trG = pc.dlG->family(cls).trace[cG][i];
        if (trH != static_cast<long long>(H.G.q - 1) * trG)
          fails.push_back(tag + " (5) clause 2 failed at g=" + std::to_string(g) +
                          " t=" + std::to_string(i));
      }
    }

    // (6): R_{T_H}^H(chi)|_{G^F} = R_{T_G}^G(chi|_{T_G^F})
    for (int k = 0; k < TH.index_count; ++k) {
      int kres = restrict_theta_index(pc, cls, k);
      for (int cG = 0; cG < G.classes.count(); ++cG) {
        ElemId rep = G.classes.rep[cG];
        CycNum vH = pc.dlH->family(cls).R[k].values[H.classes.class_of[X.to_H[rep]]];
        CycNum vG = pc.dlG->family(cls).R[kres].values[cG];
        if (!(vH == vG)) {
          fails.push_back(tag + " (6) failed at chi=" + std::to_string(k) +
                          " class=" + std::to_string(cG));
          break;
        }
      }
    }

    // (11): normalized trace sums agree inside the H-torus group algebra
    std::vector<int> TGidx_of_THidx(TH.index_count, -1);
    for (int i = 0; i < TG.index_count; ++i) TGidx_of_THidx[THidx_of_TGidx[i]] = i;
    for (ElemId g = 0; g < G.G.size(); ++g) {
      int cH = H.classes.class_of[X.to_H[g]];
      int cG = G.classes.class_of[g];
      for (int t = 0; t < TH.index_count; ++t) {
        int tinv_H = TH.index_inv(t);
        Rat lhs(Int(pc.dlH->family(cls).trace[cH][tinv_H]), Int(TH.index_count));
        Rat rhs = TGidx_of_THidx[t] >= 0
                      ? Rat(Int(pc.dlG->family(cls).trace[cG]
                                                        [TG.index_inv(TGidx_of_THidx[t])]),
                            Int(TG.index_count))
                      : Rat(0);
        if (!(lhs == rhs))
          fails.push_back(tag + " (11) failed at g=" + std::to_string(g) +
                          " t=" + std::to_string(t));
      }
    }
  }
  return fails;
}

}  // namespace ggv
