#pragma once

#include "camreg/cech.hpp"

namespace camreg {

/// Cech generators for the base maximal ideal (y1..ym); requires m >= 1.
CechSpec base_max_spec(const RingSpec &R);

/// One term of a rendered Cech fraction: coeff * numerator / denominator.
struct CechFraction {
  std::string coeff, numerator, denominator;
  std::string str() const;
};

/// Matrix of F^s : H^i(Q)_u -> H^i(Q)_{p^s u} over the base maximal ideal,
/// on the cohomology bases of the two degrees.
struct FrobeniusMap {
  int i = 0;
  int s = 1;
  MultiDegree u_src, u_dst;
  int K_src = 0, K_dst = 0;
  Matrix mat; // rows: target basis, cols: source basis

  bool is_zero() const;
};

/// F^s on the degree-u piece of H^i of a cyclic monomial quotient over F_p
/// (x variables must act as zero). `u` may be given over the y block only.
/// The optional stabilization exponents pin the chain complexes so that maps
/// at consecutive powers compose.
FrobeniusMap frobenius_on_piece(const ModulePresentation &Q, int i,
                                const MultiDegree &u, int s,
                                int min_K_src = 0, int min_K_dst = 0);

struct FDepthVerdict {
  enum class Kind { Nonvanishing, NilpotentAt, Undecided };

  int i = 0;
  Kind kind = Kind::Undecided;
  int s = 0; // annihilating power (NilpotentAt) or probed bound (Undecided)
  MultiDegree witness_degree;         // Nonvanishing only
  std::vector<CechFraction> witness;  // class with F^s(xi) != 0 for every s

  std::string str() const;
};

struct FDepthReport {
  std::vector<FDepthVerdict> verdicts; // i = 0..m
  int f_depth = POS_INF;               // POS_INF: no F-nonvanishing level
  std::string status = "CERTIFIED";
  FineBox box;
  int s_max = 4;
  /// The probe computes the graded analogue of the local-ring notion.
  std::string assumption;
};

/// Definition-level probe: for each i, search the certified degree box for a
/// class whose twisted Frobenius iterate is non-nilpotent (then F^s(xi) != 0
/// for every s) or a power s <= s_max annihilating every piece in the box.
/// box_radius 0 picks the default 3m.
FDepthReport f_depth_probe(const ModulePresentation &Q, int s_max = 4,
                           int box_radius = 0);

} // namespace camreg
