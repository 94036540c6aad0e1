#pragma once

#include "camreg/cech.hpp"
#include "camreg/frobenius.hpp"
#include "camreg/regularity.hpp"

namespace camreg {

/// Abstract simplicial complex on vertices 0..m-1, given by facets and closed
/// under subsets. Encodes the Stanley-Reisner ideal of its non-faces.
struct SimplicialComplex {
  int m = 0;
  std::vector<std::vector<int>> facets; // each sorted, strictly increasing

  bool is_face(const std::vector<int> &f) const;
  /// All faces of given dimension (cardinality dim+1), sorted.
  std::vector<std::vector<int>> faces_of_dim(int dim) const;
  /// Full subcomplex on a vertex subset.
  SimplicialComplex restriction(const std::vector<int> &verts) const;
  /// Minimal non-faces = squarefree SR generators.
  std::vector<std::vector<int>> minimal_nonfaces() const;

  static SimplicialComplex from_nonfaces(int m,
                                         const std::vector<std::vector<int>> &nf);
};

/// dim_k of reduced simplicial cohomology H~^j(D; k) by exact coboundary ranks.
int reduced_cohomology_dim(const SimplicialComplex &D, int j, const Field &k);

/// dim_k H^i_{m0}(k[D])_u by Hochster's formula; requires u <= 0.
int hochster_dim(const SimplicialComplex &D, int i, const MultiDegree &u,
                 const Field &k);

struct AraBound {
  int lower = 0;
  int upper = 0;
  bool exact = false; // generators form a regular sequence
};

/// Arithmetic-rank bounds for an ideal of the base ring k[y].
AraBound ara_bound(const RingSpec &R, const std::vector<Polynomial> &a0);

struct Instance {
  int id = 0;
  std::string desc;
  RingSpec R;
  ModulePresentation M;
  std::vector<Polynomial> a0; // base-ideal generators (y block only)
  bool x_free_rels = false;   // M = M0[x], a polynomial module
  bool x_killed = false;      // M concentrated in x-degree 0
  std::vector<std::string> statements; // ids this instance can exercise
};

struct CheckResult {
  std::string statement;
  std::string instance;
  std::string verdict; // HOLDS | FAILS | SKIPPED
  std::string reason;  // unmet hypothesis / uncertified window for SKIPPED
  std::string left, right; // rendered values, "-inf" for NEG_INF
  std::string statuses;    // certification statuses consumed
  std::string note = "graded-local: R0 = k[y], m0 = (y)";
};

/// Deterministic desk-scale instance generator.
std::vector<Instance> corpus(unsigned seed, int size);

/// One statement check on one instance; throws on unknown statement id.
CheckResult verify(const std::string &statement_id, const Instance &inst);

/// Statement ids in report order.
const std::vector<std::string> &statement_ids();

/// Full suite over corpus(seed, size), statement-ordered, deterministic
/// regardless of thread count.
std::vector<CheckResult> verify_suite(unsigned seed, int size, int threads = 1);

std::string results_json(const std::vector<CheckResult> &rs);
std::string results_table(const std::vector<CheckResult> &rs);
/// True iff some certified instance FAILS.
bool any_certified_failure(const std::vector<CheckResult> &rs);

} // namespace camreg
