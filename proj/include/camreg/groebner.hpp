#pragma once

#include "camreg/module.hpp"

#include <memory>

namespace camreg {

/// A term of a free module: monomial times a generator position.
struct ModTerm {
  int pos = 0;
  Monomial mono;
  bool operator==(const ModTerm &o) const {
    return pos == o.pos && mono == o.mono;
  }
};

/// Term-over-position order, optionally refined Schreyer-style by the lead
/// terms of the previous resolution step.
class ModuleOrder {
public:
  static ModuleOrder top(const RingSpec &R);
  static ModuleOrder schreyer(std::shared_ptr<const ModuleOrder> prev,
                              std::vector<ModTerm> prev_leads);

  Cmp compare(const ModTerm &a, const ModTerm &b) const;
  const RingSpec &ring() const { return ring_; }

private:
  RingSpec ring_;
  std::shared_ptr<const ModuleOrder> prev_; // null for TOP
  std::vector<ModTerm> leads_;
};

std::pair<ModTerm, Scalar> elem_lead(const ModuleElement &v,
                                     const ModuleOrder &ord);

struct GroebnerBasis {
  FreeModuleSpec F;
  std::shared_ptr<const ModuleOrder> order;
  std::vector<ModuleElement> gens; // reduced, lead coefficient 1, sorted
  std::vector<ModTerm> leads;      // cached lead terms

  bool contains(const ModuleElement &v) const;
};

struct GroebnerOptions {
  bool check_graded = true;
  bool track_transform = false;
};

struct GroebnerResult {
  GroebnerBasis gb;
  /// transform[i][j]: coefficient of input j in basis element i
  /// (only filled when track_transform was requested).
  std::vector<std::vector<Polynomial>> transform;
};

GroebnerResult buchberger(const std::vector<ModuleElement> &gens,
                          const FreeModuleSpec &F,
                          std::shared_ptr<const ModuleOrder> order = nullptr,
                          const GroebnerOptions &opts = {});

/// Canonical normal form; quotients (one polynomial per basis element) are
/// accumulated when a non-null pointer is passed.
ModuleElement normal_form(const ModuleElement &v, const GroebnerBasis &G,
                          std::vector<Polynomial> *quotients = nullptr);

struct SyzygyResult {
  FreeModuleSpec F; // free module on the GB elements, Schreyer shifts
  std::vector<ModuleElement> syzygies;
  std::shared_ptr<const ModuleOrder> order; // induced Schreyer order
};

/// Generators of the full syzygy module of a reduced Groebner basis
/// (one candidate per same-position pair, reduced to a syzygy by division).
SyzygyResult syzygy_basis(const GroebnerBasis &G);

} // namespace camreg
