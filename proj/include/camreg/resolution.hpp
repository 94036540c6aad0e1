#pragma once

#include "camreg/ideal_ops.hpp"

#include <map>

namespace camreg {

constexpr int POS_INF = -NEG_INF;

/// Chain of free modules F[0] <- F[1] <- ...; diffs[i] holds one column per
/// generator of F[i+1], each an element of F[i].
struct FreeComplex {
  std::vector<FreeModuleSpec> F;
  std::vector<std::vector<ModuleElement>> diffs;

  int length() const { return static_cast<int>(F.size()) - 1; }
  /// Throws unless d . d = 0.
  void check_composition_zero() const;
};

/// Minimal graded free resolution; F[0] covers M minimally.
FreeComplex minimal_free_resolution(const ModulePresentation &M);

struct BettiTable {
  std::vector<std::map<int, int>> by_degree; // step i: degree -> count

  int projective_dimension() const; // NEG_INF for the zero module
  int regularity() const;           // max(d - i), NEG_INF for zero
  std::string str() const;          // Macaulay2-style layout
};

BettiTable betti_table(const FreeComplex &C);

int projective_dimension(const ModulePresentation &M);
/// depth_{m}(M) = nvars - pd(M) (Auslander-Buchsbaum); POS_INF for zero M.
int depth_via_pd(const ModulePresentation &M);

/// Minimal cover + minimal first syzygies, read off the minimal resolution.
ModulePresentation minimal_presentation(const ModulePresentation &M);

/// Presentation of (submodule generated by K) / (submodule generated by
/// `boundaries`) inside the ambient free module mid.F; `boundaries` must lie
/// in the span of K and should include mid.rels.
ModulePresentation
subquotient_presentation(const std::vector<ModuleElement> &K,
                         const ModulePresentation &mid,
                         const std::vector<ModuleElement> &boundaries);

/// Ext^i_R(A, B) as a presented graded module.
ModulePresentation ext_module(const ModulePresentation &A, int i,
                              const ModulePresentation &B);

/// grade_b(N) = min { i : Ext^i(R/b, N) != 0 }; POS_INF when every Ext up to
/// the number of variables vanishes (iff bN = N).
int grade_on_module(const std::vector<Polynomial> &b,
                    const ModulePresentation &N);

} // namespace camreg
