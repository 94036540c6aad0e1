#include "camreg/ideal_ops.hpp"

#include <algorithm>

namespace camreg {

std::vector<ModuleElement> syzygies_of(const std::vector<ModuleElement> &inputs,
                                       const FreeModuleSpec &target,
                                       const FreeModuleSpec &source) {
  if (static_cast<int>(inputs.size()) != source.rank())
    throw domain_error("syzygies_of: source rank mismatch");
  GroebnerOptions opts;
  opts.track_transform = true;
  auto res = buchberger(inputs, target, nullptr, opts);
  const size_t s = inputs.size(), r = res.gb.gens.size();
  std::vector<ModuleElement> out;

  // Rows e_i - S_i T: how each input reduces to zero against the basis.
  for (size_t i = 0; i < s; ++i) {
    if (elem_is_zero(inputs[i])) {
      out.push_back(elem_unit(source, static_cast<int>(i)));
      continue;
    }
    std::vector<Polynomial> q;
    ModuleElement nf = normal_form(inputs[i], res.gb, &q);
    if (!elem_is_zero(nf))
      throw domain_error("syzygies_of: input escapes its own basis");
    ModuleElement row = elem_unit(source, static_cast<int>(i));
    for (size_t g = 0; g < r; ++g)
      for (size_t j = 0; j < s; ++j)
        row[j] = row[j] - q[g] * res.transform[g][j];
    if (!elem_is_zero(row))
      out.push_back(std::move(row));
  }

  // Schreyer syzygies of the basis, pushed back to the inputs.
  auto syz = syzygy_basis(res.gb);
  for (const auto &tau : syz.syzygies) {
    ModuleElement v = elem_zero(source);
    for (size_t l = 0; l < r; ++l)
      for (size_t j = 0; j < s; ++j)
        v[j] = v[j] + tau[l] * res.transform[l][j];
    if (!elem_is_zero(v))
      out.push_back(std::move(v));
  }
  return out;
}

void ModuleMap::validate() const {
  A.validate();
  B.validate();
  if (cols.size() != static_cast<size_t>(A.F.rank()))
    throw domain_error("module map: column count mismatch");
  GroebnerBasis G = relations_gb(B);
  for (size_t j = 0; j < cols.size(); ++j) {
    auto d = elem_coarse_degree(cols[j], B.F);
    if (!d)
      throw domain_error("module map: column not homogeneous");
    if (*d != NEG_INF && *d != A.F.coarse_degs[j])
      throw domain_error("module map: column degree mismatch");
  }
  for (const auto &rel : A.rels) {
    ModuleElement img = elem_zero(B.F);
    for (size_t j = 0; j < cols.size(); ++j)
      img = elem_add(img, elem_mul_poly(cols[j], rel[j]));
    if (!G.contains(img))
      throw domain_error("module map: does not descend to the quotient");
  }
}

std::vector<ModuleElement> kernel_of_map(const ModuleMap &phi) {
  const size_t a = phi.cols.size();
  std::vector<ModuleElement> inputs = phi.cols;
  FreeModuleSpec source;
  source.ring = phi.A.F.ring;
  source.coarse_degs = phi.A.F.coarse_degs;
  source.fine_degs = phi.A.F.fine_degs;
  for (const auto &rel : phi.B.rels) {
    inputs.push_back(rel);
    auto d = elem_coarse_degree(rel, phi.B.F);
    if (!d || *d == NEG_INF)
      throw domain_error("kernel_of_map: bad relation column");
    source.coarse_degs.push_back(*d);
    if (phi.B.F.has_fine()) {
      auto fd = elem_fine_degree(rel, phi.B.F);
      if (!fd)
        throw domain_error("kernel_of_map: relation not fine-graded");
      source.fine_degs.push_back(*fd);
    }
  }
  auto syz = syzygies_of(inputs, phi.B.F, source);
  std::vector<ModuleElement> out;
  for (const auto &v : syz) {
    ModuleElement w(v.begin(), v.begin() + a);
    if (!elem_is_zero(w))
      out.push_back(std::move(w));
  }
  return out;
}

GroebnerBasis relations_gb(const ModulePresentation &M) {
  return buchberger(M.rels, M.F).gb;
}

bool is_zero_module(const ModulePresentation &M) {
  GroebnerBasis G = relations_gb(M);
  for (int g = 0; g < M.F.rank(); ++g)
    if (!G.contains(elem_unit(M.F, g)))
      return false;
  return true;
}

std::vector<Polynomial> annihilator(const ModulePresentation &M) {
  const RingSpec &R = M.F.ring;
  const int r = M.F.rank();
  // Kernel of R -> sum_g M(-deg_g), 1 |-> (e_1, ..., e_r).
  FreeModuleSpec big;
  big.ring = R;
  for (int g = 0; g < r; ++g)
    for (int h = 0; h < r; ++h) {
      big.coarse_degs.push_back(M.F.coarse_degs[h] - M.F.coarse_degs[g]);
      if (M.F.has_fine()) {
        MultiDegree d = M.F.fine_degs[h];
        for (size_t j = 0; j < d.size(); ++j)
          d[j] -= M.F.fine_degs[g][j];
        big.fine_degs.push_back(std::move(d));
      }
    }
  std::vector<ModuleElement> inputs;
  FreeModuleSpec source;
  source.ring = R;
  ModuleElement diag = elem_zero(big);
  for (int g = 0; g < r; ++g)
    diag[g * r + g] = Polynomial::constant(Scalar::one(R.field), R);
  inputs.push_back(std::move(diag));
  source.coarse_degs.push_back(0);
  if (M.F.has_fine())
    source.fine_degs.push_back(MultiDegree(R.nvars(), 0));
  for (int g = 0; g < r; ++g)
    for (const auto &rel : M.rels) {
      ModuleElement v = elem_zero(big);
      for (int h = 0; h < r; ++h)
        v[g * r + h] = rel[h];
      auto d = elem_coarse_degree(v, big);
      if (!d)
        throw domain_error("annihilator: relation not homogeneous");
      if (*d == NEG_INF)
        continue;
      source.coarse_degs.push_back(*d);
      if (big.has_fine()) {
        auto fd = elem_fine_degree(v, big);
        if (!fd)
          throw domain_error("annihilator: relation not fine-graded");
        source.fine_degs.push_back(*fd);
      }
      inputs.push_back(std::move(v));
    }
  auto syz = syzygies_of(inputs, big, source);
  std::vector<Polynomial> out;
  for (const auto &v : syz)
    if (!v[0].is_zero())
      out.push_back(v[0]);
  return out;
}

std::vector<Polynomial> ideal_intersect(const RingSpec &R,
                                        const std::vector<Polynomial> &I,
                                        const std::vector<Polynomial> &J) {
  // Kernel of R -> R/I + R/J, 1 |-> (1, 1).
  FreeModuleSpec F2;
  F2.ring = R;
  F2.coarse_degs = {0, 0};
  if (R.regime == Regime::Multigraded)
    F2.fine_degs = {MultiDegree(R.nvars(), 0), MultiDegree(R.nvars(), 0)};
  std::vector<ModuleElement> inputs;
  FreeModuleSpec source;
  source.ring = R;
  Polynomial one = Polynomial::constant(Scalar::one(R.field), R);
  inputs.push_back({one, one});
  source.coarse_degs.push_back(0);
  auto push = [&](const Polynomial &f, int slot) {
    if (f.is_zero())
      return;
    ModuleElement v = {Polynomial(R), Polynomial(R)};
    v[slot] = f;
    auto d = f.coarse_degree(R);
    if (!d)
      throw domain_error("ideal_intersect: generator not homogeneous");
    source.coarse_degs.push_back(*d);
    if (F2.has_fine()) {
      auto fd = f.fine_degree(R);
      if (!fd)
        throw domain_error("ideal_intersect: generator not fine-graded");
      source.fine_degs.push_back(*fd);
    }
    inputs.push_back(std::move(v));
  };
  if (F2.has_fine())
    source.fine_degs.push_back(MultiDegree(R.nvars(), 0));
  for (const auto &f : I)
    push(f, 0);
  for (const auto &g : J)
    push(g, 1);
  auto syz = syzygies_of(inputs, F2, source);
  std::vector<Polynomial> out;
  for (const auto &v : syz)
    if (!v[0].is_zero())
      out.push_back(v[0]);
  return out;
}

std::vector<Polynomial> ideal_quotient(const RingSpec &R,
                                       const std::vector<Polynomial> &I,
                                       const std::vector<Polynomial> &J) {
  Polynomial one = Polynomial::constant(Scalar::one(R.field), R);
  std::vector<Polynomial> acc;
  bool first = true;
  for (const auto &g : J) {
    if (g.is_zero())
      continue;
    // (I : g) = kernel of R -g-> R/I
    FreeModuleSpec F1 = FreeModuleSpec::free_rank1(R);
    std::vector<ModuleElement> inputs = {{g}};
    FreeModuleSpec source;
    source.ring = R;
    auto dg = g.coarse_degree(R);
    if (!dg)
      throw domain_error("ideal_quotient: generator not homogeneous");
    source.coarse_degs.push_back(*dg);
    if (R.regime == Regime::Multigraded) {
      auto fd = g.fine_degree(R);
      if (!fd)
        throw domain_error("ideal_quotient: generator not fine-graded");
      source.fine_degs.push_back(*fd);
    }
    for (const auto &f : I) {
      if (f.is_zero())
        continue;
      inputs.push_back({f});
      source.coarse_degs.push_back(*f.coarse_degree(R));
      if (R.regime == Regime::Multigraded)
        source.fine_degs.push_back(*f.fine_degree(R));
    }
    auto syz = syzygies_of(inputs, F1, source);
    std::vector<Polynomial> part;
    for (const auto &v : syz)
      if (!v[0].is_zero())
        part.push_back(v[0]);
    acc = first ? part : ideal_intersect(R, acc, part);
    first = false;
  }
  if (first)
    return {one}; // (I : 0) = R
  return acc;
}

bool radical_contains(const RingSpec &R, const std::vector<Polynomial> &I,
                      const Polynomial &f) {
  RingSpec Re = R;
  Re.t += 1; // fresh variable z, appended after the x block
  auto lift = [&](const Polynomial &g) {
    Polynomial out(Re);
    for (const auto &[u, c] : g.terms()) {
      Monomial v = u;
      v.push_back(0);
      out.add_term(v, c);
    }
    return out;
  };
  Polynomial z = Polynomial::variable(Re.nvars() - 1, Re);
  Polynomial one = Polynomial::constant(Scalar::one(Re.field), Re);
  std::vector<ModuleElement> gens;
  for (const auto &g : I)
    if (!g.is_zero())
      gens.push_back({lift(g)});
  gens.push_back({one - z * lift(f)});
  GroebnerOptions opts;
  opts.check_graded = false;
  auto res = buchberger(gens, FreeModuleSpec::free_rank1(Re), nullptr, opts);
  return res.gb.contains({one});
}

int krull_dimension(const ModulePresentation &M) {
  const RingSpec &R = M.F.ring;
  std::vector<Polynomial> ann = annihilator(M);
  std::vector<ModuleElement> gens;
  for (const auto &f : ann)
    gens.push_back({f});
  GroebnerOptions opts;
  opts.check_graded = false;
  auto res = buchberger(gens, FreeModuleSpec::free_rank1(R), nullptr, opts);
  std::vector<Monomial> leads;
  for (const auto &lt : res.gb.leads)
    leads.push_back(lt.mono);
  const int n = R.nvars();
  if (n > 24)
    throw domain_error("krull_dimension: too many variables");
  int best = NEG_INF;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto &u : leads) {
      bool inside = true;
      for (int j = 0; j < n; ++j)
        if (u[j] > 0 && !(mask & (1u << j))) {
          inside = false;
          break;
        }
      if (inside) { // some lead is supported inside the candidate set
        ok = false;
        break;
      }
    }
    if (ok)
      best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

} // namespace camreg
