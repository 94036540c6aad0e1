#include "camreg/linalg.hpp"

namespace camreg {

std::vector<size_t> Matrix::rref() {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t p = r;
    while (p < rows_ && a_[p][c].is_zero())
      ++p;
    if (p == rows_)
      continue;
    std::swap(a_[r], a_[p]);
    Scalar inv = a_[r][c].inv();
    for (size_t j = c; j < cols_; ++j)
      a_[r][j] = a_[r][j] * inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r || a_[i][c].is_zero())
        continue;
      Scalar f = a_[i][c];
      for (size_t j = c; j < cols_; ++j)
        a_[i][j] = a_[i][j] - f * a_[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t Matrix::rank() const {
  Matrix tmp(*this);
  return tmp.rref().size();
}

std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
  Matrix tmp(*this);
  std::vector<size_t> pivots = tmp.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots)
    is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Scalar> v(cols_, Scalar::zero(field_));
    v[free] = Scalar::one(field_);
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -tmp.a_[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>>
Matrix::solve(const std::vector<Scalar> &b) const {
  Matrix aug(rows_, cols_ + 1, field_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j)
      aug.a_[i][j] = a_[i][j];
    aug.a_[i][cols_] = b[i];
  }
  std::vector<size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_)
    return std::nullopt;
  std::vector<Scalar> x(cols_, Scalar::zero(field_));
  for (size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug.a_[i][cols_];
  return x;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar> &x) const {
  std::vector<Scalar> y(rows_, Scalar::zero(field_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!a_[i][j].is_zero() && !x[j].is_zero())
        y[i] = y[i] + a_[i][j] * x[j];
  return y;
}

} // namespace camreg
