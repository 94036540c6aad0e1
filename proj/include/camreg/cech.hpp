#pragma once

#include "camreg/pieces.hpp"

#include <optional>
#include <string>

namespace camreg {

/// Ordered Čech generators: monomials from a0 (y-block) and/or the x-block.
struct CechGen {
  Monomial mono;
  bool from_a0 = false;
};

struct CechSpec {
  RingSpec ring;
  std::vector<CechGen> gens;

  int s() const { return static_cast<int>(gens.size()); }
  bool has_rplus_block() const;
  /// Every x_j lies in the radical of the generated ideal (pure x_j among
  /// the generators); needed for certified ends over the coarse degree.
  bool x_block_covered() const;

  static CechSpec from_ideal(const RingSpec &R,
                             const std::vector<Polynomial> &a0,
                             bool add_rplus);
  static CechSpec rplus_only(const RingSpec &R);

  void validate() const;
};

struct CohomologyPiece {
  int i = 0;
  MultiDegree u;
  int dim = 0;
  /// Cocycle representatives in the block coordinates of the complex at u.
  std::vector<std::vector<Scalar>> reps;
};

/// The Čech complex of a MULTIGRADED presentation at one fine degree, with a
/// common stabilization exponent across all localizations.
class CechAtDegree {
public:
  CechAtDegree(const ModulePresentation &M, const CechSpec &C,
               const MultiDegree &u, int min_K = 0);

  const MultiDegree &degree() const { return u_; }
  int K() const { return K_; }
  int levels() const { return C_.s(); }
  const std::vector<std::vector<int>> &subsets(int i) const {
    return subsets_[i];
  }
  const PieceBasis &piece(int i, int blk) const { return pieces_[i][blk]; }
  int dim_total(int i) const;
  /// Differential C^i -> C^{i+1} (zero-size matrices at the ends).
  const Matrix &diff(int i) const { return diffs_[i]; }

  CohomologyPiece cohomology(int i) const;
  /// Coordinates of a cocycle with respect to cohomology(i).reps.
  std::vector<Scalar> express(int i, const std::vector<Scalar> &cocycle) const;

  const CechSpec &cech() const { return C_; }

private:
  void build(const ModulePresentation &M);

  CechSpec C_;
  MultiDegree u_;
  int K_ = 0;
  std::vector<std::vector<std::vector<int>>> subsets_; // [i] -> sorted tuples
  std::vector<std::vector<PieceBasis>> pieces_;
  std::vector<Matrix> diffs_; // diffs_[i] : C^i -> C^{i+1}, i = 0..s-1
};

/// Chain-level monomial transport C^i(src) -> C^i(dst) between complexes of
/// the same CechSpec. A numerator monomial w in the block of sigma maps to
/// scale*w * extra * f_sigma^(dst.K() - scale*src.K()); with scale = 1 this
/// is multiplication by `extra`, with scale = p^s and extra = 1 it is the
/// Frobenius power on a cyclic degree-0 quotient. Requires
/// dst.degree() == scale*src.degree() + deg(extra) and dst.K() >= scale*src.K().
std::vector<Scalar> transport_chain(const CechAtDegree &src,
                                    const CechAtDegree &dst, int i, int scale,
                                    const Monomial &extra,
                                    const std::vector<Scalar> &v);

struct FineBox {
  MultiDegree lo, hi;
  bool empty = false;
};

/// Clamp box outside which every cohomology value repeats along coordinate
/// rays (multiplication by the corresponding variable is an isomorphism).
FineBox certified_box(const ModulePresentation &M, const CechSpec &C);

struct EndEntry {
  int i = 0;
  int end = NEG_INF; // NEG_INF encodes minus infinity
  std::string status = "CERTIFIED";
};

struct EndReport {
  std::vector<EndEntry> ends; // i = 0..s
  int astar = NEG_INF;
  std::map<int, int> regk; // k -> reg^k
  int cd_lower = NEG_INF, cd_upper = NEG_INF;
  bool cd_equal = true;
  std::string status = "CERTIFIED";
  FineBox box;

  int reg() const { return regk.count(0) ? regk.at(0) : NEG_INF; }
};

/// Full box scan in the MULTIGRADED regime: ends, a*, reg^k, cd, certified.
EndReport analyze_cech(const ModulePresentation &M, const CechSpec &C);

/// GENERAL regime (m = 0), R+ cohomology via graded local duality.
EndReport analyze_general(const ModulePresentation &M);
/// dim_k H^i_{R+}(M)_n in the GENERAL regime (m = 0).
int general_cohomology_dim(const ModulePresentation &M, int i, int n);

/// cd_a0(M0) for an R0-module given as a MULTIGRADED presentation over the
/// full ring with the x block acting as zero (or any presentation).
int cohomological_dimension(const ModulePresentation &M, const CechSpec &C);

} // namespace camreg
