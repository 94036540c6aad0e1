#pragma once

#include "camreg/cech.hpp"
#include "camreg/resolution.hpp"

namespace camreg {

/// dim_k H^i_C(M)_u at one fine degree.
int cohomology_piece_dim(const ModulePresentation &M, const CechSpec &C, int i,
                         const MultiDegree &u);

struct EndValue {
  int end = NEG_INF; // NEG_INF encodes minus infinity
  std::string status = "CERTIFIED";
};

/// end(H^i_C(M)) over the coarse degree.
EndValue end_of_cohomology(const ModulePresentation &M, const CechSpec &C,
                           int i);

/// reg^k and friends; regk map populated for every level >= k.
EndReport reg_wrt(const ModulePresentation &M, const CechSpec &C, int k = 0);

/// Resolution-shift formula for regularity: max_i (max shift in step i) - i.
int reg_thm213(const ModulePresentation &M);

/// Coarse strand N_n of a MULTIGRADED presentation as a finitely presented
/// module on which the x block acts as zero (an R0-module in disguise).
ModulePresentation coarse_strand(const ModulePresentation &N, int n);

/// H^i of the Koszul cocomplex on (x_1^k, .., x_t^k) in coarse degree n.
ModulePresentation koszul_strand_cohomology(const ModulePresentation &M, int i,
                                            int n, int k);

/// H^i_{R+}(M)_n as a finitely presented module (x block acting as zero),
/// certified by two consecutive Koszul-power isomorphisms.
ModulePresentation rplus_coarse_cohomology(const ModulePresentation &M, int i,
                                           int n);

struct PolyModuleReport {
  int reg = NEG_INF; // = cd_{a0}(M0); also reg_{a0+R+}(M0[x])
  std::vector<int> predicted_ends; // end(H^i), i = 0..t+s: -t or NEG_INF
  std::string status = "CERTIFIED";
};

/// Inverse-polynomial closed form for a polynomial module M0[x]: the input is
/// the presentation of M0 over k[y][x] with relations free of the x block.
PolyModuleReport reg_polynomial_module(const ModulePresentation &M0,
                                       const std::vector<Polynomial> &a0);

struct RelCMEntry {
  int n = 0;
  int cd = NEG_INF; // NEG_INF: strand vanishes
};

struct RelCMReport {
  int g = 0;
  int reg = NEG_INF; // sup{cd + n} + g
  std::vector<RelCMEntry> per_n;
  std::string status = "CERTIFIED";
};

/// Relative Cohen-Macaulay formula: reg_{a0+R+}(M) =
/// sup{cd_{a0}(H^g_{R+}(M)_n) + n} + g; throws when grade != cd over R+.
RelCMReport relative_cm_reg(const ModulePresentation &M,
                            const std::vector<Polynomial> &a0);

/// Override the lower scan floor used by relative_cm_reg before it reports
/// WINDOW_BOUNDED; POS_INF restores the automatic floor.
void set_scan_floor(int floor);

} // namespace camreg
