#include "camreg/module.hpp"

namespace camreg {

void FreeModuleSpec::validate() const {
  ring.validate();
  if (!fine_degs.empty()) {
    if (fine_degs.size() != coarse_degs.size())
      throw domain_error("fine/coarse degree count mismatch");
    for (size_t g = 0; g < fine_degs.size(); ++g) {
      if (static_cast<int>(fine_degs[g].size()) != ring.nvars())
        throw domain_error("fine degree length mismatch");
      if (coarse_of(fine_degs[g], ring) != coarse_degs[g])
        throw domain_error("fine degree does not match coarse degree");
    }
  }
}

FreeModuleSpec FreeModuleSpec::free_rank1(const RingSpec &R) {
  FreeModuleSpec F;
  F.ring = R;
  F.coarse_degs = {0};
  if (R.regime == Regime::Multigraded)
    F.fine_degs = {MultiDegree(R.nvars(), 0)};
  return F;
}

bool elem_is_zero(const ModuleElement &v) {
  for (const auto &f : v)
    if (!f.is_zero())
      return false;
  return true;
}

ModuleElement elem_zero(const FreeModuleSpec &F) {
  return ModuleElement(F.rank(), Polynomial(F.ring));
}

ModuleElement elem_unit(const FreeModuleSpec &F, int pos) {
  ModuleElement v = elem_zero(F);
  v[pos] = Polynomial::constant(Scalar::one(F.ring.field), F.ring);
  return v;
}

ModuleElement elem_add(const ModuleElement &a, const ModuleElement &b) {
  ModuleElement c(a);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = c[i] + b[i];
  return c;
}

ModuleElement elem_sub(const ModuleElement &a, const ModuleElement &b) {
  ModuleElement c(a);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = c[i] - b[i];
  return c;
}

ModuleElement elem_scaled(const ModuleElement &a, const Scalar &c) {
  ModuleElement r(a);
  for (auto &f : r)
    f = f.scaled(c);
  return r;
}

ModuleElement elem_times_term(const ModuleElement &a, const Monomial &u,
                              const Scalar &c) {
  ModuleElement r(a);
  for (auto &f : r)
    f = f.times_term(u, c);
  return r;
}

ModuleElement elem_mul_poly(const ModuleElement &a, const Polynomial &f) {
  ModuleElement r(a);
  for (auto &g : r)
    g = g * f;
  return r;
}

std::optional<int> elem_coarse_degree(const ModuleElement &v,
                                      const FreeModuleSpec &F) {
  int deg = NEG_INF;
  for (size_t g = 0; g < v.size(); ++g) {
    if (v[g].is_zero())
      continue;
    auto d = v[g].coarse_degree(F.ring);
    if (!d)
      return std::nullopt;
    int total = *d + F.coarse_degs[g];
    if (deg == NEG_INF)
      deg = total;
    else if (deg != total)
      return std::nullopt;
  }
  return deg;
}

std::optional<MultiDegree> elem_fine_degree(const ModuleElement &v,
                                            const FreeModuleSpec &F) {
  if (!F.has_fine())
    throw domain_error("fine degrees unavailable in the general regime");
  bool found = false;
  MultiDegree deg;
  for (size_t g = 0; g < v.size(); ++g) {
    if (v[g].is_zero())
      continue;
    auto d = v[g].fine_degree(F.ring);
    if (!d)
      return std::nullopt;
    MultiDegree total = *d;
    for (int j = 0; j < F.ring.nvars(); ++j)
      total[j] += F.fine_degs[g][j];
    if (!found) {
      deg = total;
      found = true;
    } else if (deg != total)
      return std::nullopt;
  }
  if (!found)
    return MultiDegree(F.ring.nvars(), NEG_INF);
  return deg;
}

std::string elem_str(const ModuleElement &v, const FreeModuleSpec &F) {
  std::string s = "(";
  for (int g = 0; g < F.rank(); ++g) {
    if (g)
      s += ", ";
    s += v[g].str(F.ring);
  }
  return s + ")";
}

void ModulePresentation::validate() const {
  F.validate();
  for (const auto &col : rels) {
    if (static_cast<int>(col.size()) != F.rank())
      throw domain_error("presentation column rank mismatch");
    if (F.ring.regime == Regime::Multigraded) {
      for (const auto &f : col)
        if (!f.is_zero() && !f.is_single_term())
          throw domain_error(
              "multigraded regime requires single-term matrix entries");
      if (!elem_fine_degree(col, F))
        throw domain_error("presentation column is not fine-graded");
    } else if (!elem_coarse_degree(col, F)) {
      throw domain_error("presentation column is not graded");
    }
  }
}

ModulePresentation
ModulePresentation::quotient_ring(const RingSpec &R,
                                  const std::vector<Polynomial> &ideal) {
  ModulePresentation M;
  M.F = FreeModuleSpec::free_rank1(R);
  for (const auto &f : ideal)
    if (!f.is_zero())
      M.rels.push_back({f});
  return M;
}

ModulePresentation ModulePresentation::free_module(const FreeModuleSpec &F) {
  ModulePresentation M;
  M.F = F;
  return M;
}

} // namespace camreg
