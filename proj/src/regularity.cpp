#include "camreg/regularity.hpp"

#include "camreg/ideal_ops.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace camreg {

namespace {

ModulePresentation zero_pres(const RingSpec &R) {
  ModulePresentation Z;
  Z.F.ring = R;
  return Z;
}

std::vector<Monomial> x_monomials(const RingSpec &R, int d) {
  std::vector<Monomial> out;
  if (d < 0)
    return out;
  Monomial cur(R.nvars(), 0);
  auto rec = [&](auto &&self, int var, int left) -> void {
    if (var == R.nvars() - 1) {
      cur[var] = left;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, R.m, d);
  return out;
}

std::vector<std::vector<int>> x_subsets(int t, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto &&self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int j = from; j < t; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Coarse-degree-n strand of the level-i term of the Koszul cocomplex on
/// (x_1^k .. x_t^k), presented with the x block acting as zero.
struct StrandLevel {
  ModulePresentation P;
  std::vector<std::vector<int>> sigmas; // subsets of the x block (0-based)
  std::vector<std::tuple<int, int, Monomial>> cover; // (sigma, gen, x-mono)
  std::map<std::tuple<int, int, Monomial>, int> index;
};

StrandLevel build_level(const ModulePresentation &M, int i, int n, int k) {
  const RingSpec &R = M.F.ring;
  Scalar one = Scalar::one(R.field);
  StrandLevel L;
  L.sigmas = x_subsets(R.t, i);
  L.P.F.ring = R;
  for (int si = 0; si < static_cast<int>(L.sigmas.size()); ++si) {
    Monomial esig(R.nvars(), 0);
    for (int j : L.sigmas[si])
      esig[R.m + j] = 1;
    for (int g = 0; g < M.F.rank(); ++g) {
      int need = n - M.F.coarse_degs[g] + k * i;
      for (const auto &a : x_monomials(R, need)) {
        MultiDegree fd = M.F.fine_degs[g];
        for (int v = 0; v < R.nvars(); ++v)
          fd[v] += a[v] - k * esig[v];
        L.index[{si, g, a}] = static_cast<int>(L.cover.size());
        L.cover.push_back({si, g, a});
        L.P.F.coarse_degs.push_back(n);
        L.P.F.fine_degs.push_back(fd);
      }
    }
  }
  // The x block acts as zero on the strand.
  for (size_t c = 0; c < L.cover.size(); ++c)
    for (int v = R.m; v < R.nvars(); ++v) {
      ModuleElement r = elem_zero(L.P.F);
      r[c] = Polynomial::term(mono_var(v, R), one);
      L.P.rels.push_back(std::move(r));
    }
  // Strand of the module relations in each Koszul position.
  for (int si = 0; si < static_cast<int>(L.sigmas.size()); ++si)
    for (const auto &rho : M.rels) {
      auto dc = elem_coarse_degree(rho, M.F);
      if (!dc)
        throw domain_error("strand: relation not graded");
      if (*dc == NEG_INF)
        continue;
      for (const auto &b : x_monomials(R, n - *dc + k * i)) {
        ModuleElement r = elem_zero(L.P.F);
        for (int g = 0; g < M.F.rank(); ++g)
          for (const auto &[mo, c] : rho[g].terms()) {
            Monomial xpart(R.nvars(), 0), ypart(R.nvars(), 0);
            for (int v = 0; v < R.nvars(); ++v)
              (v < R.m ? ypart : xpart)[v] = mo[v];
            Monomial key = mono_mul(xpart, b);
            int idx = L.index.at({si, g, key});
            r[idx] = r[idx] + Polynomial::term(ypart, c);
          }
        if (!elem_is_zero(r))
          L.P.rels.push_back(std::move(r));
      }
    }
  return L;
}

/// Columns of the strand differential level i -> i+1 (entries +-1).
std::vector<ModuleElement> strand_diff(const StrandLevel &A,
                                       const StrandLevel &B, int k) {
  const RingSpec &R = A.P.F.ring;
  Scalar one = Scalar::one(R.field);
  std::vector<ModuleElement> cols;
  for (const auto &[si, g, a] : A.cover) {
    const auto &sigma = A.sigmas[si];
    ModuleElement col = elem_zero(B.P.F);
    for (int j = 0; j < R.t; ++j) {
      if (std::find(sigma.begin(), sigma.end(), j) != sigma.end())
        continue;
      std::vector<int> tau = sigma;
      tau.insert(std::upper_bound(tau.begin(), tau.end(), j), j);
      int ti = static_cast<int>(
          std::find(B.sigmas.begin(), B.sigmas.end(), tau) - B.sigmas.begin());
      int pos = static_cast<int>(
          std::lower_bound(sigma.begin(), sigma.end(), j) - sigma.begin());
      Monomial a2 = mono_mul(a, mono_pow(mono_var(R.m + j, R), k));
      int idx = B.index.at({ti, g, a2});
      col[idx] = Polynomial::constant(pos % 2 == 0 ? one : -one, R);
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

/// Map a strand element along the comparison K(x^k) -> K(x^(k+1)):
/// multiplication by x_sigma in each Koszul position.
ModuleElement compare_elem(const StrandLevel &A, const StrandLevel &B,
                           const ModuleElement &v) {
  const RingSpec &R = A.P.F.ring;
  ModuleElement out = elem_zero(B.P.F);
  for (size_t c = 0; c < A.cover.size(); ++c) {
    if (v[c].is_zero())
      continue;
    const auto &[si, g, a] = A.cover[c];
    Monomial esig(R.nvars(), 0);
    for (int j : A.sigmas[si])
      esig[R.m + j] = 1;
    int idx = B.index.at({si, g, mono_mul(a, esig)});
    out[idx] = out[idx] + v[c];
  }
  return out;
}

struct StrandHomology {
  ModulePresentation H;
  std::vector<ModuleElement> K; // cover of H as elements of level.P.F
  StrandLevel level;
};

StrandHomology strand_cohomology(const ModulePresentation &M, int i, int n,
                                 int k) {
  const RingSpec &R = M.F.ring;
  StrandHomology out;
  out.level = build_level(M, i, n, k);
  if (out.level.P.F.rank() == 0) {
    out.H = zero_pres(R);
    return out;
  }
  if (i < R.t) {
    StrandLevel C = build_level(M, i + 1, n, k);
    ModuleMap phi;
    phi.A = out.level.P;
    phi.B = C.P;
    phi.cols = strand_diff(out.level, C, k);
    out.K = kernel_of_map(phi);
  } else {
    for (int g = 0; g < out.level.P.F.rank(); ++g)
      out.K.push_back(elem_unit(out.level.P.F, g));
  }
  if (out.K.empty()) {
    out.H = zero_pres(R);
    return out;
  }
  std::vector<ModuleElement> W = out.level.P.rels;
  if (i > 0) {
    StrandLevel A = build_level(M, i - 1, n, k);
    for (auto &col : strand_diff(A, out.level, k))
      if (!elem_is_zero(col))
        W.push_back(std::move(col));
  }
  out.H = subquotient_presentation(out.K, out.level.P, W);
  return out;
}

/// Express elements of the span of K in K-coordinates.
std::vector<ModuleElement> express_in_span(const std::vector<ModuleElement> &K,
                                           const FreeModuleSpec &amb,
                                           const FreeModuleSpec &dstF,
                                           const std::vector<ModuleElement> &v) {
  GroebnerOptions opts;
  opts.track_transform = true;
  auto kg = buchberger(K, amb, nullptr, opts);
  std::vector<ModuleElement> out;
  for (const auto &w : v) {
    std::vector<Polynomial> q;
    ModuleElement nf = normal_form(w, kg.gb, &q);
    if (!elem_is_zero(nf))
      throw domain_error("strand: element escapes the span");
    ModuleElement rel = elem_zero(dstF);
    for (size_t g = 0; g < kg.gb.gens.size(); ++g)
      for (size_t j = 0; j < K.size(); ++j)
        rel[j] = rel[j] + q[g] * kg.transform[g][j];
    out.push_back(std::move(rel));
  }
  return out;
}

bool map_is_iso(const ModuleMap &phi) {
  // surjective: target dies after adding the image columns
  ModulePresentation cok = phi.B;
  for (const auto &c : phi.cols)
    cok.rels.push_back(c);
  if (!is_zero_module(cok))
    return false;
  // injective: kernel generators vanish in the source
  auto ker = kernel_of_map(phi);
  if (ker.empty())
    return true;
  GroebnerBasis rg = relations_gb(phi.A);
  for (const auto &v : ker)
    if (!elem_is_zero(normal_form(v, rg, nullptr)))
      return false;
  return true;
}

/// Induced map on strand cohomology along the k -> k+1 comparison.
ModuleMap compare_homology(const StrandHomology &Hk, const StrandHomology &Hk1) {
  ModuleMap phi;
  phi.A = Hk.H;
  phi.B = Hk1.H;
  if (Hk.H.F.rank() == 0 || Hk1.H.F.rank() == 0) {
    for (int g = 0; g < Hk.H.F.rank(); ++g)
      phi.cols.push_back(elem_zero(Hk1.H.F));
    return phi;
  }
  std::vector<ModuleElement> imgs;
  for (const auto &kgen : Hk.K)
    imgs.push_back(compare_elem(Hk.level, Hk1.level, kgen));
  phi.cols = express_in_span(Hk1.K, Hk1.level.P.F, Hk1.H.F, imgs);
  return phi;
}

int module_stab_start(const ModulePresentation &M) {
  const RingSpec &R = M.F.ring;
  int s = 0;
  for (const auto &fd : M.F.fine_degs)
    for (int v = R.m; v < R.nvars(); ++v)
      s = std::max(s, fd[v]);
  for (const auto &rel : M.rels) {
    auto fd = elem_fine_degree(rel, M.F);
    if (fd && !elem_is_zero(rel))
      for (int v = R.m; v < R.nvars(); ++v)
        s = std::max(s, (*fd)[v]);
  }
  return s + 2;
}

EndReport analyze_for(const ModulePresentation &M, const CechSpec &C) {
  if (C.ring.m == 0 && !M.F.has_fine() && M.F.rank() > 0)
    return analyze_general(M);
  return analyze_cech(M, C);
}

} // namespace

int cohomology_piece_dim(const ModulePresentation &M, const CechSpec &C, int i,
                         const MultiDegree &u) {
  if (i < 0 || i > C.s())
    return 0;
  return CechAtDegree(M, C, u).cohomology(i).dim;
}

EndValue end_of_cohomology(const ModulePresentation &M, const CechSpec &C,
                           int i) {
  EndValue out;
  if (i < 0 || i > C.s())
    return out;
  EndReport rep = analyze_for(M, C);
  out.end = rep.ends[i].end;
  out.status = rep.ends[i].status;
  return out;
}

EndReport reg_wrt(const ModulePresentation &M, const CechSpec &C, int k) {
  if (k < 0)
    throw domain_error("reg_wrt: level must be >= 0");
  EndReport rep = analyze_for(M, C);
  if (!rep.regk.count(k))
    rep.regk[k] = NEG_INF;
  return rep;
}

int reg_thm213(const ModulePresentation &M) {
  return betti_table(minimal_free_resolution(M)).regularity();
}

ModulePresentation coarse_strand(const ModulePresentation &N, int n) {
  if (!N.F.has_fine() && N.F.rank() > 0)
    throw domain_error("strand: MULTIGRADED presentation required");
  return build_level(N, 0, n, 1).P;
}

ModulePresentation koszul_strand_cohomology(const ModulePresentation &M, int i,
                                            int n, int k) {
  const RingSpec &R = M.F.ring;
  if (i < 0 || i > R.t || M.F.rank() == 0)
    return zero_pres(R);
  return strand_cohomology(M, i, n, k).H;
}

ModulePresentation rplus_coarse_cohomology(const ModulePresentation &M, int i,
                                           int n) {
  const RingSpec &R = M.F.ring;
  if (!M.F.has_fine() && M.F.rank() > 0)
    throw domain_error("strand: MULTIGRADED presentation required");
  if (i < 0 || i > R.t || M.F.rank() == 0)
    return zero_pres(R);
  int k = std::max(2, module_stab_start(M) + std::max(0, -n) / std::max(1, R.t));
  for (int attempt = 0; attempt < 3; ++attempt) {
    StrandHomology Hk = strand_cohomology(M, i, n, k);
    StrandHomology H1 = strand_cohomology(M, i, n, k + 1);
    StrandHomology H2 = strand_cohomology(M, i, n, k + 2);
    if (map_is_iso(compare_homology(Hk, H1)) &&
        map_is_iso(compare_homology(H1, H2)))
      return Hk.H;
    k *= 2;
  }
  throw domain_error("STABILIZATION_FAILURE");
}

PolyModuleReport reg_polynomial_module(const ModulePresentation &M0,
                                       const std::vector<Polynomial> &a0) {
  const RingSpec &R = M0.F.ring;
  if (!M0.F.has_fine() && M0.F.rank() > 0)
    throw domain_error("reg_polynomial_module: MULTIGRADED required");
  for (const auto &rel : M0.rels)
    for (const auto &p : rel)
      for (const auto &[mo, c] : p.terms())
        for (int v = R.m; v < R.nvars(); ++v)
          if (mo[v] != 0)
            throw domain_error(
                "reg_polynomial_module: relations must avoid the x block");
  // kill the x block: cd is computed on M0 itself
  ModulePresentation K = M0;
  for (int g = 0; g < K.F.rank(); ++g)
    for (int v = R.m; v < R.nvars(); ++v) {
      ModuleElement r = elem_zero(K.F);
      r[g] = Polynomial::variable(v, R);
      K.rels.push_back(std::move(r));
    }
  PolyModuleReport out;
  std::vector<int> nonzero;
  if (a0.empty()) {
    bool nz = !is_zero_module(K);
    out.reg = nz ? 0 : NEG_INF;
    nonzero.assign(1, nz ? 0 : NEG_INF);
    out.predicted_ends.assign(R.t + 1, NEG_INF);
    if (nz)
      out.predicted_ends[R.t] = -R.t;
    return out;
  }
  CechSpec C = CechSpec::from_ideal(R, a0, false);
  EndReport rep = analyze_cech(K, C);
  out.status = rep.status;
  out.reg = rep.cd_lower;
  out.predicted_ends.assign(R.t + C.s() + 1, NEG_INF);
  for (int i = 0; i <= C.s(); ++i)
    if (rep.ends[i].end != NEG_INF)
      out.predicted_ends[R.t + i] = -R.t;
  return out;
}

namespace {
int scan_floor_override = POS_INF;
}

void set_scan_floor(int floor) { scan_floor_override = floor; }

RelCMReport relative_cm_reg(const ModulePresentation &M,
                            const std::vector<Polynomial> &a0) {
  const RingSpec &R = M.F.ring;
  if (!M.F.has_fine())
    throw domain_error("relative_cm: MULTIGRADED presentation required");
  std::vector<Polynomial> xg;
  for (int v = R.m; v < R.nvars(); ++v)
    xg.push_back(Polynomial::variable(v, R));
  int g = grade_on_module(xg, M);
  EndReport rp = analyze_cech(M, CechSpec::rplus_only(R));
  if (g == POS_INF || rp.cd_lower != g)
    throw domain_error("relative_cm: grade and cd over R+ differ");
  RelCMReport out;
  out.g = g;
  out.status = rp.status;
  int cap = 0;
  CechSpec Ca;
  if (!a0.empty()) {
    Ca = CechSpec::from_ideal(R, a0, false);
    cap = std::min(Ca.s(), R.m);
  }
  const int upper = rp.astar;
  int floor = upper - 4 * (R.m + R.t + std::max(1, cap));
  if (scan_floor_override < POS_INF)
    floor = scan_floor_override;
  int best = NEG_INF;
  for (int n = upper;; --n) {
    if (best == NEG_INF) {
      if (n < floor) {
        out.status = "WINDOW_BOUNDED";
        break;
      }
    } else if (n + cap < best)
      break;
    ModulePresentation H =
        minimal_presentation(rplus_coarse_cohomology(M, g, n));
    if (H.F.rank() == 0) {
      out.per_n.push_back({n, NEG_INF});
      continue;
    }
    int cd = a0.empty() ? 0 : cohomological_dimension(H, Ca);
    out.per_n.push_back({n, cd});
    best = std::max(best, cd + n);
  }
  out.reg = best == NEG_INF ? NEG_INF : best + g;
  return out;
}

} // namespace camreg
