#pragma once

#include "camreg/poly.hpp"

namespace camreg {

/// Graded free module F = sum of R(a_j). We store generator degrees rather
/// than shifts: a generator of R(a) sits in degree -a. Fine degrees are
/// tracked in the multigraded regime only.
struct FreeModuleSpec {
  RingSpec ring;
  std::vector<int> coarse_degs;
  std::vector<MultiDegree> fine_degs; // empty in the general regime

  int rank() const { return static_cast<int>(coarse_degs.size()); }
  bool has_fine() const { return !fine_degs.empty(); }
  void validate() const;

  static FreeModuleSpec free_rank1(const RingSpec &R);
};

/// Element of a free module: one polynomial coordinate per generator.
using ModuleElement = std::vector<Polynomial>;

bool elem_is_zero(const ModuleElement &v);
ModuleElement elem_zero(const FreeModuleSpec &F);
ModuleElement elem_unit(const FreeModuleSpec &F, int pos);
ModuleElement elem_add(const ModuleElement &a, const ModuleElement &b);
ModuleElement elem_sub(const ModuleElement &a, const ModuleElement &b);
ModuleElement elem_scaled(const ModuleElement &a, const Scalar &c);
ModuleElement elem_times_term(const ModuleElement &a, const Monomial &u,
                              const Scalar &c);
ModuleElement elem_mul_poly(const ModuleElement &a, const Polynomial &f);

/// Common coarse degree of a module element against generator degrees;
/// NEG_INF for zero, nullopt for an ungraded element.
std::optional<int> elem_coarse_degree(const ModuleElement &v,
                                      const FreeModuleSpec &F);
std::optional<MultiDegree> elem_fine_degree(const ModuleElement &v,
                                            const FreeModuleSpec &F);

std::string elem_str(const ModuleElement &v, const FreeModuleSpec &F);

/// Finitely generated graded module presented as F / (span of columns).
struct ModulePresentation {
  FreeModuleSpec F;
  std::vector<ModuleElement> rels;

  void validate() const;

  /// Quotient ring R/I as a rank-1 presentation.
  static ModulePresentation quotient_ring(const RingSpec &R,
                                          const std::vector<Polynomial> &ideal);
  static ModulePresentation free_module(const FreeModuleSpec &F);
};

} // namespace camreg
