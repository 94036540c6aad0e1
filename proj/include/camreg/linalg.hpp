#pragma once

#include "camreg/scalar.hpp"

#include <optional>
#include <vector>

namespace camreg {

/// Dense exact matrix over a fixed field; desk-scale sizes only.
class Matrix {
public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const Field &f)
      : rows_(rows), cols_(cols), field_(f),
        a_(rows, std::vector<Scalar>(cols, Scalar::zero(f))) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field &field() const { return field_; }

  Scalar &at(size_t r, size_t c) { return a_[r][c]; }
  const Scalar &at(size_t r, size_t c) const { return a_[r][c]; }

  size_t rank() const;

  /// Basis of the right kernel, one column vector per basis element.
  std::vector<std::vector<Scalar>> kernel_basis() const;

  /// Solve A x = b; nullopt when inconsistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar> &b) const;

  std::vector<Scalar> apply(const std::vector<Scalar> &x) const;

  /// Row-reduce in place; returns pivot column indices.
  std::vector<size_t> rref();

private:
  size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<std::vector<Scalar>> a_;
};

} // namespace camreg
