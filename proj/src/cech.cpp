#include "camreg/cech.hpp"

#include <algorithm>

namespace camreg {

bool CechSpec::has_rplus_block() const {
  for (int j = ring.m; j < ring.nvars(); ++j) {
    bool found = false;
    for (const auto &g : gens)
      if (g.mono == mono_var(j, ring))
        found = true;
    if (!found)
      return false;
  }
  return true;
}

bool CechSpec::x_block_covered() const { return has_rplus_block(); }

CechSpec CechSpec::from_ideal(const RingSpec &R,
                              const std::vector<Polynomial> &a0,
                              bool add_rplus) {
  CechSpec C;
  C.ring = R;
  for (const auto &f : a0) {
    if (f.is_zero())
      continue;
    if (!f.is_single_term())
      throw domain_error("cech: ideal generator must be a single term");
    C.gens.push_back({f.terms().begin()->first, true});
  }
  if (add_rplus)
    for (int j = R.m; j < R.nvars(); ++j)
      C.gens.push_back({mono_var(j, R), false});
  C.validate();
  return C;
}

CechSpec CechSpec::rplus_only(const RingSpec &R) {
  return from_ideal(R, {}, true);
}

void CechSpec::validate() const {
  if (gens.empty())
    throw domain_error("cech: no generators");
  for (const auto &g : gens)
    if (mono_total(g.mono) == 0 && coarse_of(g.mono, ring) == 0 &&
        std::all_of(g.mono.begin(), g.mono.end(), [](int e) { return e == 0; }))
      throw domain_error("cech: unit generator");
}

namespace {

/// Per-coordinate degree above which candidate/relation patterns of fine
/// pieces are constant.
MultiDegree stab_bounds(const ModulePresentation &M) {
  const int n = M.F.ring.nvars();
  MultiDegree stab(n, 0);
  for (int g = 0; g < M.F.rank(); ++g)
    for (int j = 0; j < n; ++j)
      stab[j] = std::max(stab[j], M.F.fine_degs[g][j]);
  for (const auto &rel : M.rels) {
    auto d = elem_fine_degree(rel, M.F);
    if (!d)
      throw domain_error("cech: relation not fine-graded");
    if (elem_is_zero(rel))
      continue;
    for (int j = 0; j < n; ++j)
      stab[j] = std::max(stab[j], (*d)[j]);
  }
  return stab;
}

std::vector<std::vector<int>> size_subsets(int s, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto &&self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int j = from; j < s; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Monomial subset_degree(const CechSpec &C, const std::vector<int> &sigma) {
  Monomial d(C.ring.nvars(), 0);
  for (int j : sigma)
    d = mono_mul(d, C.gens[j].mono);
  return d;
}

bool is_iso(const Matrix &A) {
  return A.rows() == A.cols() && A.rank() == A.rows();
}

/// Insert-only column space accumulator.
struct ColSpace {
  std::vector<std::vector<Scalar>> red;
  std::vector<size_t> piv;

  bool insert(std::vector<Scalar> v) {
    for (size_t k = 0; k < red.size(); ++k) {
      const Scalar c = v[piv[k]];
      if (c.is_zero())
        continue;
      for (size_t j = 0; j < v.size(); ++j)
        v[j] = v[j] - c * red[k][j];
    }
    size_t p = v.size();
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        p = j;
        break;
      }
    if (p == v.size())
      return false;
    Scalar inv = v[p].inv();
    for (auto &c : v)
      c = c * inv;
    red.push_back(std::move(v));
    piv.push_back(p);
    return true;
  }
};

} // namespace

CechAtDegree::CechAtDegree(const ModulePresentation &M, const CechSpec &C,
                           const MultiDegree &u, int min_K)
    : C_(C), u_(u) {
  if (M.F.rank() > 0 && !M.F.has_fine())
    throw domain_error("cech: MULTIGRADED presentation required");
  const int n = C.ring.nvars();
  if (static_cast<int>(u.size()) != n)
    throw domain_error("cech: degree length mismatch");
  MultiDegree stab = M.F.rank() > 0 ? stab_bounds(M) : MultiDegree(n, 0);
  int K = std::max(1, min_K);
  for (const auto &g : C_.gens)
    for (int j = 0; j < n; ++j)
      if (g.mono[j] > 0)
        K = std::max(K, stab[j] + 1 - u[j]);
  K_ = K;
  for (int attempt = 0;; ++attempt) {
    try {
      build(M);
      break;
    } catch (const domain_error &) {
      if (attempt >= 1)
        throw domain_error("STABILIZATION_FAILURE");
      K_ *= 2;
    }
  }
}

void CechAtDegree::build(const ModulePresentation &M) {
  const int s = C_.s();
  subsets_.clear();
  pieces_.clear();
  diffs_.clear();
  Scalar one = Scalar::one(C_.ring.field);
  for (int i = 0; i <= s; ++i) {
    subsets_.push_back(size_subsets(s, i));
    std::vector<PieceBasis> lvl;
    for (const auto &sigma : subsets_[i]) {
      Monomial d = subset_degree(C_, sigma);
      MultiDegree v = u_;
      for (size_t j = 0; j < v.size(); ++j)
        v[j] += K_ * d[j];
      PieceBasis P = fine_piece(M, v);
      if (!sigma.empty()) {
        // Verify stabilization: two consecutive multiplication isomorphisms.
        Polynomial f = Polynomial::term(d, one);
        MultiDegree v1 = v, v2 = v;
        for (size_t j = 0; j < v.size(); ++j) {
          v1[j] += d[j];
          v2[j] += 2 * d[j];
        }
        PieceBasis P1 = fine_piece(M, v1), P2 = fine_piece(M, v2);
        if (!is_iso(mult_matrix(P, P1, f)) || !is_iso(mult_matrix(P1, P2, f)))
          throw domain_error("cech: localization not stabilized");
      }
      lvl.push_back(std::move(P));
    }
    pieces_.push_back(std::move(lvl));
  }
  // Differentials.
  for (int i = 0; i < s; ++i) {
    std::vector<int> off_src(subsets_[i].size() + 1, 0),
        off_dst(subsets_[i + 1].size() + 1, 0);
    for (size_t b = 0; b < subsets_[i].size(); ++b)
      off_src[b + 1] = off_src[b] + pieces_[i][b].dim();
    for (size_t b = 0; b < subsets_[i + 1].size(); ++b)
      off_dst[b + 1] = off_dst[b] + pieces_[i + 1][b].dim();
    Matrix D(off_dst.back(), off_src.back(), C_.ring.field);
    for (size_t b = 0; b < subsets_[i].size(); ++b) {
      const auto &sigma = subsets_[i][b];
      for (int j = 0; j < s; ++j) {
        if (std::find(sigma.begin(), sigma.end(), j) != sigma.end())
          continue;
        std::vector<int> tau = sigma;
        tau.insert(std::upper_bound(tau.begin(), tau.end(), j), j);
        size_t tb = std::find(subsets_[i + 1].begin(), subsets_[i + 1].end(),
                              tau) -
                    subsets_[i + 1].begin();
        int pos = static_cast<int>(
            std::lower_bound(sigma.begin(), sigma.end(), j) - sigma.begin());
        Scalar sign = pos % 2 == 0 ? one : -one;
        Polynomial mult =
            Polynomial::term(mono_pow(C_.gens[j].mono, K_), sign);
        Matrix B = mult_matrix(pieces_[i][b], pieces_[i + 1][tb], mult);
        for (size_t r = 0; r < B.rows(); ++r)
          for (size_t c = 0; c < B.cols(); ++c)
            D.at(off_dst[tb] + r, off_src[b] + c) = B.at(r, c);
      }
    }
    diffs_.push_back(std::move(D));
  }
}

int CechAtDegree::dim_total(int i) const {
  if (i < 0 || i > C_.s())
    return 0;
  int d = 0;
  for (const auto &P : pieces_[i])
    d += P.dim();
  return d;
}

CohomologyPiece CechAtDegree::cohomology(int i) const {
  CohomologyPiece H;
  H.i = i;
  H.u = u_;
  if (i < 0 || i > C_.s())
    return H;
  const int dimC = dim_total(i);
  std::vector<std::vector<Scalar>> kernel;
  if (i < C_.s()) {
    kernel = diffs_[i].kernel_basis();
  } else {
    for (int j = 0; j < dimC; ++j) {
      std::vector<Scalar> e(dimC, Scalar::zero(C_.ring.field));
      e[j] = Scalar::one(C_.ring.field);
      kernel.push_back(std::move(e));
    }
  }
  ColSpace cs;
  if (i > 0) {
    const Matrix &P = diffs_[i - 1];
    for (size_t c = 0; c < P.cols(); ++c) {
      std::vector<Scalar> col(P.rows(), Scalar::zero(C_.ring.field));
      for (size_t r = 0; r < P.rows(); ++r)
        col[r] = P.at(r, c);
      cs.insert(std::move(col));
    }
  }
  for (auto &k : kernel)
    if (cs.insert(k))
      H.reps.push_back(std::move(k));
  H.dim = static_cast<int>(H.reps.size());
  return H;
}

std::vector<Scalar> CechAtDegree::express(int i,
                                          const std::vector<Scalar> &v) const {
  CohomologyPiece H = cohomology(i);
  const int dimC = dim_total(i);
  size_t nim = i > 0 ? diffs_[i - 1].cols() : 0;
  Matrix A(dimC, nim + H.reps.size(), C_.ring.field);
  for (size_t c = 0; c < nim; ++c)
    for (int r = 0; r < dimC; ++r)
      A.at(r, c) = diffs_[i - 1].at(r, c);
  for (size_t c = 0; c < H.reps.size(); ++c)
    for (int r = 0; r < dimC; ++r)
      A.at(r, nim + c) = H.reps[c][r];
  auto sol = A.solve(v);
  if (!sol)
    throw domain_error("cech: vector is not a cocycle class");
  return std::vector<Scalar>(sol->begin() + nim, sol->end());
}

std::vector<Scalar> transport_chain(const CechAtDegree &src,
                                    const CechAtDegree &dst, int i, int scale,
                                    const Monomial &extra,
                                    const std::vector<Scalar> &v) {
  const RingSpec &R = src.cech().ring;
  const int n = R.nvars();
  if (dst.cech().s() != src.cech().s())
    throw domain_error("transport: mismatched Cech specs");
  const int shift = dst.K() - scale * src.K();
  if (shift < 0)
    throw domain_error("transport: target exponent too small");
  for (int j = 0; j < n; ++j)
    if (dst.degree()[j] != scale * src.degree()[j] + extra[j])
      throw domain_error("transport: degree mismatch");
  std::vector<Scalar> out(dst.dim_total(i), Scalar::zero(R.field));
  const auto &subs = src.subsets(i);
  size_t off_s = 0, off_d = 0;
  for (size_t b = 0; b < subs.size(); ++b) {
    const PieceBasis &Ps = src.piece(i, static_cast<int>(b));
    const PieceBasis &Pd = dst.piece(i, static_cast<int>(b));
    std::vector<Scalar> cs(v.begin() + off_s, v.begin() + off_s + Ps.dim());
    bool nz = std::any_of(cs.begin(), cs.end(),
                          [](const Scalar &c) { return !c.is_zero(); });
    if (nz) {
      Monomial dsig(n, 0);
      for (int j : subs[b])
        dsig = mono_mul(dsig, src.cech().gens[j].mono);
      Monomial w0 = mono_mul(mono_pow(dsig, shift), extra);
      ModuleElement e = Ps.element_of(cs);
      ModuleElement img = elem_zero(Pd.F);
      for (size_t g = 0; g < e.size(); ++g)
        for (const auto &[mo, c] : e[g].terms()) {
          Monomial m2 = mo;
          for (auto &x : m2)
            x *= scale;
          img[g].add_term(mono_mul(m2, w0), c);
        }
      auto cd = Pd.coords_of(img);
      for (size_t r = 0; r < cd.size(); ++r)
        out[off_d + r] = out[off_d + r] + cd[r];
    }
    off_s += Ps.dim();
    off_d += Pd.dim();
  }
  return out;
}

FineBox certified_box(const ModulePresentation &M, const CechSpec &C) {
  FineBox B;
  const int n = C.ring.nvars();
  if (M.F.rank() == 0) {
    B.empty = true;
    return B;
  }
  MultiDegree stab = stab_bounds(M);
  B.lo.assign(n, 0);
  B.hi.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    int mn = M.F.fine_degs[0][j];
    for (int g = 1; g < M.F.rank(); ++g)
      mn = std::min(mn, M.F.fine_degs[g][j]);
    B.lo[j] = mn - 1;
    B.hi[j] = stab[j] + 2;
  }
  return B;
}

namespace {

int cohomology_dim_fast(const CechAtDegree &X, int i) {
  int d = X.dim_total(i);
  if (d == 0)
    return 0;
  int rk_next = i < X.levels() ? static_cast<int>(X.diff(i).rank()) : 0;
  int rk_prev = i > 0 ? static_cast<int>(X.diff(i - 1).rank()) : 0;
  return d - rk_next - rk_prev;
}

void fill_aggregates(EndReport &R, int s) {
  R.astar = NEG_INF;
  for (const auto &e : R.ends)
    R.astar = std::max(R.astar, e.end);
  for (int k = 0; k <= s; ++k) {
    int v = NEG_INF;
    for (const auto &e : R.ends)
      if (e.i >= k && e.end != NEG_INF)
        v = std::max(v, e.end + e.i);
    R.regk[k] = v;
  }
  R.status = "CERTIFIED";
  for (const auto &e : R.ends)
    if (e.status != "CERTIFIED")
      R.status = e.status;
}

} // namespace

EndReport analyze_cech(const ModulePresentation &M, const CechSpec &C) {
  const int s = C.s();
  EndReport R;
  R.box = certified_box(M, C);
  std::vector<int> end(s + 1, NEG_INF);
  std::vector<bool> nonzero(s + 1, false), at_uncovered_edge(s + 1, false);
  if (!R.box.empty) {
    const int n = C.ring.nvars();
    MultiDegree u = R.box.lo;
    for (;;) {
      CechAtDegree X(M, C, u);
      for (int i = 0; i <= s; ++i) {
        int d = cohomology_dim_fast(X, i);
        if (d > 0) {
          nonzero[i] = true;
          end[i] = std::max(end[i], coarse_of(u, C.ring));
          if (!C.x_block_covered())
            for (int j = C.ring.m; j < n; ++j)
              if (u[j] == R.box.hi[j])
                at_uncovered_edge[i] = true;
        }
      }
      int j = 0;
      while (j < n && u[j] == R.box.hi[j]) {
        u[j] = R.box.lo[j];
        ++j;
      }
      if (j == n)
        break;
      ++u[j];
    }
  }
  for (int i = 0; i <= s; ++i) {
    EndEntry e;
    e.i = i;
    e.end = end[i];
    e.status = at_uncovered_edge[i] ? "WINDOW_BOUNDED" : "CERTIFIED";
    R.ends.push_back(e);
  }
  R.cd_lower = R.cd_upper = NEG_INF;
  for (int i = 0; i <= s; ++i)
    if (nonzero[i])
      R.cd_lower = R.cd_upper = i;
  R.cd_equal = true;
  fill_aggregates(R, s);
  return R;
}

EndReport analyze_general(const ModulePresentation &M) {
  const RingSpec &R = M.F.ring;
  if (R.m != 0)
    throw domain_error("analyze_general: requires m = 0");
  const int t = R.t;
  EndReport out;
  out.box.empty = true;
  auto Rfree = ModulePresentation::free_module(FreeModuleSpec::free_rank1(R));
  for (int i = 0; i <= t; ++i) {
    EndEntry e;
    e.i = i;
    ModulePresentation E = ext_module(M, t - i, Rfree);
    if (!is_zero_module(E)) {
      ModulePresentation P = minimal_presentation(E);
      int beg = POS_INF;
      for (int d : P.F.coarse_degs)
        beg = std::min(beg, d);
      e.end = -t - beg;
      out.cd_lower = out.cd_upper = i;
    }
    out.ends.push_back(e);
  }
  out.cd_equal = true;
  fill_aggregates(out, t);
  return out;
}

int general_cohomology_dim(const ModulePresentation &M, int i, int n) {
  const RingSpec &R = M.F.ring;
  if (R.m != 0)
    throw domain_error("general_cohomology_dim: requires m = 0");
  if (i < 0 || i > R.t)
    return 0;
  auto Rfree = ModulePresentation::free_module(FreeModuleSpec::free_rank1(R));
  ModulePresentation E = ext_module(M, R.t - i, Rfree);
  return coarse_piece(E, -n - R.t).dim();
}

int cohomological_dimension(const ModulePresentation &M, const CechSpec &C) {
  return analyze_cech(M, C).cd_lower;
}

} // namespace camreg
