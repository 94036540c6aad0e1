#pragma once

#include "camreg/linalg.hpp"
#include "camreg/resolution.hpp"

#include <map>

namespace camreg {

/// Finite k-basis of a graded piece of a presented module, kept as standard
/// candidates (generator index, monomial) modulo the row space of the
/// relations in that degree.
struct PieceBasis {
  FreeModuleSpec F;
  std::vector<std::pair<int, Monomial>> cands;
  std::map<std::pair<int, Monomial>, size_t> index;
  // Column-reduced relation vectors in candidate coordinates.
  std::vector<std::vector<Scalar>> red;
  std::vector<size_t> piv;    // pivot candidate per reduced relation
  std::vector<size_t> basis;  // non-pivot candidates: basis of the quotient

  int dim() const { return static_cast<int>(basis.size()); }
  /// Reduce a candidate-coordinate vector modulo the relations and return
  /// its coordinates in `basis`.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  /// Expand a module element of this degree into basis coordinates.
  std::vector<Scalar> coords_of(const ModuleElement &v) const;
  /// The module element represented by basis coordinates.
  ModuleElement element_of(const std::vector<Scalar> &coords) const;
};

/// Piece at a fine multidegree (MULTIGRADED regime).
PieceBasis fine_piece(const ModulePresentation &M, const MultiDegree &u);
/// Piece at a coarse degree; requires m = 0.
PieceBasis coarse_piece(const ModulePresentation &M, int n);

/// Matrix of multiplication by a homogeneous w from `src` to `dst` (the piece
/// at source degree + deg w). Rows: dst basis; columns: src basis.
Matrix mult_matrix(const PieceBasis &src, const PieceBasis &dst,
                   const Polynomial &w);

/// All monomials of the x-block (m = 0) with total degree d.
std::vector<Monomial> monomials_of_degree(const RingSpec &R, int d);

} // namespace camreg
