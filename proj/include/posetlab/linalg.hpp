#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace posetlab {

/// Dense row-major matrix over an exact field.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

/// Reduces `m` in place to reduced row echelon form; returns the pivot
/// column of each nonzero row, in order.
template <class T>
std::vector<std::size_t> reduce_to_rref(DenseMatrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && m(pick, col).is_zero()) ++pick;
    if (pick == m.rows()) continue;
    m.swap_rows(row, pick);

    const T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(DenseMatrix<T> m) {
  return reduce_to_rref(m).size();
}

/// Basis of {v : m v = 0}, one vector per free column in increasing column
/// order; each has a 1 in its free column.
template <class T>
std::vector<std::vector<T>> nullspace_basis(DenseMatrix<T> m) {
  const auto pivots = reduce_to_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Whether `v` lies in the span of `basis`.
template <class T>
bool in_span(const std::vector<std::vector<T>>& basis, const std::vector<T>& v) {
  if (basis.empty()) {
    for (const auto& x : v) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  const std::size_t n = v.size();
  DenseMatrix<T> with(basis.size() + 1, n);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) with(r, c) = basis[r][c];
  }
  for (std::size_t c = 0; c < n; ++c) with(basis.size(), c) = v[c];
  DenseMatrix<T> without(basis.size(), n);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) without(r, c) = basis[r][c];
  }
  return rank(std::move(with)) == rank(std::move(without));
}

}  // namespace posetlab
