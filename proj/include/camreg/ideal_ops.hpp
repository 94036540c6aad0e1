#pragma once

#include "camreg/groebner.hpp"

namespace camreg {

/// Generators of the full syzygy module of `inputs` (as elements of the free
/// module `source`, one coordinate per input, target degrees from `target`).
std::vector<ModuleElement> syzygies_of(const std::vector<ModuleElement> &inputs,
                                       const FreeModuleSpec &target,
                                       const FreeModuleSpec &source);

/// Map of presented modules induced by images of the source generators.
struct ModuleMap {
  ModulePresentation A, B;
  std::vector<ModuleElement> cols; // image of each generator of A.F in B.F

  void validate() const;
};

/// Generators (in A.F) of the kernel of the induced map A -> B.
std::vector<ModuleElement> kernel_of_map(const ModuleMap &phi);

GroebnerBasis relations_gb(const ModulePresentation &M);

bool is_zero_module(const ModulePresentation &M);

/// Generators of Ann_R(M).
std::vector<Polynomial> annihilator(const ModulePresentation &M);

std::vector<Polynomial> ideal_intersect(const RingSpec &R,
                                        const std::vector<Polynomial> &I,
                                        const std::vector<Polynomial> &J);

/// (I : J)
std::vector<Polynomial> ideal_quotient(const RingSpec &R,
                                       const std::vector<Polynomial> &I,
                                       const std::vector<Polynomial> &J);

/// f in sqrt(I), by Rabinowitsch's trick.
bool radical_contains(const RingSpec &R, const std::vector<Polynomial> &I,
                      const Polynomial &f);

/// dim_R(M) = dim R/Ann(M); NEG_INF for the zero module.
int krull_dimension(const ModulePresentation &M);

} // namespace camreg
