#pragma once

// Rank, kernels and linear solves over Rational, double, and their complex
// pairs. One elimination kernel serves every field; exactness comes from the
// field's is_zero.

#include <optional>
#include <utility>
#include <vector>

#include "gencx/matrix.hpp"

namespace gencx {

namespace detail {

// Pivot choice in column c among rows [r, rows): first nonzero in exact mode,
// largest magnitude in float mode (entries at or below ε count as zero).
template <class F>
std::optional<std::size_t> find_pivot(const Mat<F>& m, std::size_t r, std::size_t c) {
  if constexpr (is_exact_v<F>) {
    for (std::size_t i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) return i;
    return std::nullopt;
  } else {
    std::size_t best = r;
    double best_mag = -1;
    for (std::size_t i = r; i < m.rows(); ++i) {
      double g = magnitude(m(i, c));
      if (g > best_mag) {
        best_mag = g;
        best = i;
      }
    }
    if (best_mag < 0 || best_mag <= tolerance()) return std::nullopt;
    return best;
  }
}

template <class F>
void swap_rows(Mat<F>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

/// Reduced row echelon form together with the pivot columns.
template <class F>
struct Echelon {
  Mat<F> reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss–Jordan elimination restricted to the first `ncols` columns (all by default).
template <class F>
Echelon<F> rref(Mat<F> m, std::size_t ncols = static_cast<std::size_t>(-1)) {
  ncols = std::min(ncols, m.cols());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    auto p = detail::find_pivot(m, r, c);
    if (!p) {
      if constexpr (!is_exact_v<F>)
        for (std::size_t i = r; i < m.rows(); ++i) m(i, c) = F(0);
      continue;
    }
    detail::swap_rows(m, r, *p);
    F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == F(0)) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      m(i, c) = F(0);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Rank. Exact fields use fraction-free (Bareiss) elimination; float fields
/// use fully pivoted elimination with pivots at or below ε treated as zero.
template <class F>
std::size_t rank(Mat<F> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if constexpr (is_exact_v<F>) {
    F prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      auto p = detail::find_pivot(m, r, c);
      if (!p) continue;
      detail::swap_rows(m, r, *p);
      for (std::size_t i = r + 1; i < rows; ++i) {
        for (std::size_t j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
        m(i, c) = F(0);
      }
      prev = m(r, c);
      ++r;
    }
    return r;
  } else {
    std::vector<std::size_t> colidx(cols);
    for (std::size_t j = 0; j < cols; ++j) colidx[j] = j;
    std::size_t r = 0;
    while (r < rows && r < cols) {
      double best = -1;
      std::size_t bi = r, bj = r;
      for (std::size_t i = r; i < rows; ++i)
        for (std::size_t j = r; j < cols; ++j) {
          double g = magnitude(m(i, colidx[j]));
          if (g > best) {
            best = g;
            bi = i;
            bj = j;
          }
        }
      if (best <= tolerance()) break;
      detail::swap_rows(m, r, bi);
      std::swap(colidx[r], colidx[bj]);
      const std::size_t pc = colidx[r];
      for (std::size_t i = r + 1; i < rows; ++i) {
        F f = m(i, pc) / m(r, pc);
        for (std::size_t j = r; j < cols; ++j) m(i, colidx[j]) -= f * m(r, colidx[j]);
      }
      ++r;
    }
    return r;
  }
}

/// Basis of ker(m) as column vectors; empty when the kernel is trivial.
template <class F>
std::vector<Vec<F>> nullspace(const Mat<F>& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Kernel of a complex matrix; the same kernel as nullspace, named for intent.
template <RealField T>
std::vector<Vec<Complex<T>>> complex_nullspace(const Mat<Complex<T>>& m) {
  if (!m.is_square()) throw DimensionError("complex_nullspace expects a square matrix");
  return nullspace(m);
}

/// A particular solution of m·x = rhs, or nullopt when inconsistent.
template <class F>
std::optional<Mat<F>> solve_linear(const Mat<F>& m, const Mat<F>& rhs) {
  if (m.rows() != rhs.rows()) throw DimensionError("solve_linear: row count mismatch");
  Mat<F> aug(m.rows(), m.cols() + rhs.cols());
  aug.set_block(0, 0, m);
  aug.set_block(0, m.cols(), rhs);
  auto [red, pivots] = rref(std::move(aug), m.cols());
  for (std::size_t i = pivots.size(); i < red.rows(); ++i)
    for (std::size_t j = m.cols(); j < red.cols(); ++j)
      if (!is_zero(red(i, j))) return std::nullopt;
  Mat<F> x(m.cols(), rhs.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(pivots[k], j) = red(k, m.cols() + j);
  return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_linear(m, Mat<F>::identity(m.rows()));
}

/// Dimension of the span of a list of vectors.
template <class F>
std::size_t span_dim(const std::vector<Vec<F>>& vs, std::size_t len) {
  if (vs.empty()) return 0;
  return rank(from_columns(vs, len));
}

/// Whether two lists of vectors span the same subspace.
template <class F>
bool same_span(const std::vector<Vec<F>>& a, const std::vector<Vec<F>>& b, std::size_t len) {
  std::size_t da = span_dim(a, len), db = span_dim(b, len);
  if (da != db) return false;
  std::vector<Vec<F>> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return span_dim(all, len) == da;
}

}  // namespace gencx
