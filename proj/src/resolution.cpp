#include "camreg/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace camreg {

void FreeComplex::check_composition_zero() const {
  for (size_t i = 0; i + 1 < diffs.size(); ++i)
    for (const auto &col : diffs[i + 1]) {
      ModuleElement img = elem_zero(F[i]);
      for (size_t j = 0; j < diffs[i].size(); ++j)
        img = elem_add(img, elem_mul_poly(diffs[i][j], col[j]));
      if (!elem_is_zero(img))
        throw domain_error("free complex: d o d != 0");
    }
}

namespace {

bool constant_entry(const Polynomial &f, Scalar &a) {
  if (f.nterms() != 1)
    return false;
  const auto &[u, c] = *f.terms().begin();
  if (mono_total(u) != 0)
    return false;
  a = c;
  return true;
}

void erase_gen(FreeModuleSpec &F, size_t idx) {
  F.coarse_degs.erase(F.coarse_degs.begin() + idx);
  if (F.has_fine())
    F.fine_degs.erase(F.fine_degs.begin() + idx);
}

/// Split off one trivial summand at step i: pivot entry diffs[i][c][r] is a
/// nonzero constant. Returns false when step i has no pivot.
bool prune_once(FreeComplex &C, size_t i) {
  auto &d = C.diffs[i];
  size_t pc = 0, pr = 0;
  Scalar a;
  bool found = false;
  for (size_t c = 0; c < d.size() && !found; ++c)
    for (size_t r = 0; r < d[c].size() && !found; ++r)
      if (constant_entry(d[c][r], a)) {
        pc = c;
        pr = r;
        found = true;
      }
  if (!found)
    return false;

  // Column operations clear row pr outside column pc.
  std::vector<Polynomial> lam(d.size(), Polynomial(C.F[i].ring));
  for (size_t j = 0; j < d.size(); ++j) {
    if (j == pc)
      continue;
    lam[j] = d[j][pr].scaled(a.inv());
    if (lam[j].is_zero())
      continue;
    for (size_t r = 0; r < d[j].size(); ++r)
      d[j][r] = d[j][r] - lam[j] * d[pc][r];
  }
  // Corresponding update of the next differential's row pc; it must vanish.
  if (i + 1 < C.diffs.size()) {
    for (auto &w : C.diffs[i + 1]) {
      Polynomial acc = w[pc];
      for (size_t j = 0; j < d.size(); ++j)
        if (j != pc)
          acc = acc + lam[j] * w[j];
      if (!acc.is_zero())
        throw domain_error("minimize: split summand leaves a residue");
      w.erase(w.begin() + pc);
    }
  }
  // Delete generator pc of F[i+1] and generator pr of F[i].
  d.erase(d.begin() + pc);
  erase_gen(C.F[i + 1], pc);
  for (auto &col : d)
    col.erase(col.begin() + pr);
  erase_gen(C.F[i], pr);
  if (i > 0)
    C.diffs[i - 1].erase(C.diffs[i - 1].begin() + pr);
  return true;
}

void minimize(FreeComplex &C) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < C.diffs.size(); ++i)
      while (prune_once(C, i))
        changed = true;
  }
  while (!C.F.empty() && C.F.back().rank() == 0) {
    C.F.pop_back();
    if (!C.diffs.empty())
      C.diffs.pop_back();
  }
  for (const auto &d : C.diffs)
    for (const auto &col : d)
      if (elem_is_zero(col))
        throw domain_error("minimize: zero column survived");
}

} // namespace

FreeComplex minimal_free_resolution(const ModulePresentation &M) {
  const int cap = M.F.ring.nvars() + 4;
  FreeComplex C;
  C.F.push_back(M.F);
  GroebnerBasis cur = buchberger(M.rels, M.F).gb;
  if (!cur.gens.empty()) {
    C.diffs.push_back(cur.gens);
    for (int lvl = 1;; ++lvl) {
      if (lvl > cap)
        throw domain_error("resolution exceeds the length cap");
      SyzygyResult syz = syzygy_basis(cur);
      C.F.push_back(syz.F);
      if (syz.syzygies.empty())
        break;
      C.diffs.push_back(syz.syzygies);
      // Schreyer's theorem: the new syzygies are a Groebner basis for the
      // induced order, so the next level needs no completion step.
      GroebnerBasis next;
      next.F = syz.F;
      next.order = syz.order;
      next.gens = syz.syzygies;
      for (const auto &v : next.gens)
        next.leads.push_back(elem_lead(v, *next.order).first);
      cur = std::move(next);
    }
  }
  minimize(C);
  C.check_composition_zero();
  return C;
}

BettiTable betti_table(const FreeComplex &C) {
  BettiTable B;
  for (const auto &F : C.F) {
    std::map<int, int> row;
    for (int d : F.coarse_degs)
      row[d]++;
    B.by_degree.push_back(std::move(row));
  }
  while (!B.by_degree.empty() && B.by_degree.back().empty())
    B.by_degree.pop_back();
  return B;
}

int BettiTable::projective_dimension() const {
  for (int i = static_cast<int>(by_degree.size()) - 1; i >= 0; --i)
    if (!by_degree[i].empty())
      return i;
  return NEG_INF;
}

int BettiTable::regularity() const {
  int r = NEG_INF;
  for (size_t i = 0; i < by_degree.size(); ++i)
    for (const auto &[d, n] : by_degree[i])
      r = std::max(r, d - static_cast<int>(i));
  return r;
}

std::string BettiTable::str() const {
  if (by_degree.empty() || by_degree[0].empty())
    return "0\n";
  int lo = POS_INF, hi = NEG_INF;
  std::vector<int> totals(by_degree.size(), 0);
  for (size_t i = 0; i < by_degree.size(); ++i)
    for (const auto &[d, n] : by_degree[i]) {
      lo = std::min(lo, d - static_cast<int>(i));
      hi = std::max(hi, d - static_cast<int>(i));
      totals[i] += n;
    }
  std::ostringstream os;
  auto cell = [&](const std::string &s) {
    os.width(7);
    os << s;
  };
  cell("");
  for (size_t i = 0; i < by_degree.size(); ++i)
    cell(std::to_string(i));
  os << '\n';
  cell("total:");
  for (int t : totals)
    cell(std::to_string(t));
  os << '\n';
  for (int s = lo; s <= hi; ++s) {
    cell(std::to_string(s) + ":");
    for (size_t i = 0; i < by_degree.size(); ++i) {
      auto it = by_degree[i].find(s + static_cast<int>(i));
      cell(it == by_degree[i].end() ? "." : std::to_string(it->second));
    }
    os << '\n';
  }
  return os.str();
}

int projective_dimension(const ModulePresentation &M) {
  return betti_table(minimal_free_resolution(M)).projective_dimension();
}

int depth_via_pd(const ModulePresentation &M) {
  int pd = projective_dimension(M);
  if (pd == NEG_INF)
    return POS_INF; // zero module
  return M.F.ring.nvars() - pd;
}

ModulePresentation minimal_presentation(const ModulePresentation &M) {
  FreeComplex C = minimal_free_resolution(M);
  ModulePresentation out;
  out.F = C.F[0];
  if (!C.diffs.empty())
    out.rels = C.diffs[0];
  return out;
}

namespace {

ModulePresentation zero_presentation(const RingSpec &R) {
  ModulePresentation Z;
  Z.F.ring = R;
  return Z;
}

/// Hom(F, B) for a free F: cover generator (u, b) at degree deg_b - deg_u,
/// laid out u-major; relations are B's relations in every block.
ModulePresentation hom_into(const FreeModuleSpec &Fi,
                            const ModulePresentation &B) {
  ModulePresentation H;
  H.F.ring = Fi.ring;
  const int rb = B.F.rank();
  for (int u = 0; u < Fi.rank(); ++u)
    for (int b = 0; b < rb; ++b) {
      H.F.coarse_degs.push_back(B.F.coarse_degs[b] - Fi.coarse_degs[u]);
      if (B.F.has_fine()) {
        MultiDegree d = B.F.fine_degs[b];
        if (Fi.has_fine())
          for (size_t j = 0; j < d.size(); ++j)
            d[j] -= Fi.fine_degs[u][j];
        H.F.fine_degs.push_back(std::move(d));
      }
    }
  for (int u = 0; u < Fi.rank(); ++u)
    for (const auto &rel : B.rels) {
      ModuleElement v = elem_zero(H.F);
      for (int b = 0; b < rb; ++b)
        v[u * rb + b] = rel[b];
      if (!elem_is_zero(v))
        H.rels.push_back(std::move(v));
    }
  return H;
}

/// Column of Hom(d, B): image of Hom-generator (h, b) of Hom(F_from, B) in
/// Hom(F_to, B), where d : F_to -> F_from has columns `dcols`.
ModuleElement hom_delta_col(const std::vector<ModuleElement> &dcols, int h,
                            int b, int rb, const ModulePresentation &Hto) {
  ModuleElement v = elem_zero(Hto.F);
  for (size_t u = 0; u < dcols.size(); ++u)
    v[u * rb + b] = dcols[u][h];
  return v;
}

} // namespace

ModulePresentation ext_module(const ModulePresentation &A, int i,
                              const ModulePresentation &B) {
  const RingSpec &R = A.F.ring;
  if (i < 0)
    return zero_presentation(R);
  FreeComplex C = minimal_free_resolution(A);
  if (i >= static_cast<int>(C.F.size()))
    return zero_presentation(R);

  ModulePresentation Hi = hom_into(C.F[i], B);
  const int rb = B.F.rank();
  if (Hi.F.rank() == 0)
    return zero_presentation(R);

  // Kernel of delta_i : Hom(F_i, B) -> Hom(F_{i+1}, B).
  std::vector<ModuleElement> K;
  if (i < static_cast<int>(C.diffs.size())) {
    ModulePresentation Hnext = hom_into(C.F[i + 1], B);
    ModuleMap phi;
    phi.A = Hi;
    phi.B = Hnext;
    for (int h = 0; h < C.F[i].rank(); ++h)
      for (int b = 0; b < rb; ++b)
        phi.cols.push_back(hom_delta_col(C.diffs[i], h, b, rb, Hnext));
    K = kernel_of_map(phi);
  } else {
    for (int g = 0; g < Hi.F.rank(); ++g)
      K.push_back(elem_unit(Hi.F, g));
  }
  if (K.empty())
    return zero_presentation(R);

  // Elements to kill: Hi's relations and the image of delta_{i-1}.
  std::vector<ModuleElement> W = Hi.rels;
  if (i > 0)
    for (int h = 0; h < C.F[i - 1].rank(); ++h)
      for (int b = 0; b < rb; ++b) {
        ModuleElement v = hom_delta_col(C.diffs[i - 1], h, b, rb, Hi);
        if (!elem_is_zero(v))
          W.push_back(std::move(v));
      }

  return subquotient_presentation(K, Hi, W);
}

ModulePresentation
subquotient_presentation(const std::vector<ModuleElement> &K,
                         const ModulePresentation &mid,
                         const std::vector<ModuleElement> &boundaries) {
  const RingSpec &R = mid.F.ring;
  if (K.empty())
    return zero_presentation(R);
  ModulePresentation E;
  E.F.ring = R;
  for (const auto &k : K) {
    auto d = elem_coarse_degree(k, mid.F);
    if (!d || *d == NEG_INF)
      throw domain_error("subquotient: generator not homogeneous");
    E.F.coarse_degs.push_back(*d);
    if (mid.F.has_fine()) {
      auto fd = elem_fine_degree(k, mid.F);
      if (!fd)
        throw domain_error("subquotient: generator not fine-graded");
      E.F.fine_degs.push_back(*fd);
    }
  }
  E.rels = syzygies_of(K, mid.F, E.F);

  GroebnerOptions opts;
  opts.track_transform = true;
  auto kg = buchberger(K, mid.F, nullptr, opts);
  for (const auto &w : boundaries) {
    std::vector<Polynomial> q;
    ModuleElement nf = normal_form(w, kg.gb, &q);
    if (!elem_is_zero(nf))
      throw domain_error("subquotient: boundary escapes the span");
    ModuleElement rel = elem_zero(E.F);
    for (size_t g = 0; g < kg.gb.gens.size(); ++g)
      for (size_t j = 0; j < K.size(); ++j)
        rel[j] = rel[j] + q[g] * kg.transform[g][j];
    if (!elem_is_zero(rel))
      E.rels.push_back(std::move(rel));
  }
  return E;
}

int grade_on_module(const std::vector<Polynomial> &b,
                    const ModulePresentation &N) {
  const RingSpec &R = N.F.ring;
  ModulePresentation Rb = ModulePresentation::quotient_ring(R, b);
  for (int i = 0; i <= R.nvars(); ++i)
    if (!is_zero_module(ext_module(Rb, i, N)))
      return i;
  return POS_INF;
}

} // namespace camreg
