#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "gencx/error.hpp"
#include "gencx/scalar.hpp"

namespace gencx {

template <class F>
using Vec = std::vector<F>;

/// Dense row-major matrix over one scalar field.
template <class F>
class Mat {
 public:
  using value_type = F;

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<F> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix data length does not match shape");
  }
  Mat(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Mat zeros(std::size_t r, std::size_t c) { return Mat(r, c); }
  static Mat column(const Vec<F>& v) { return Mat(v.size(), 1, v); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::span<const F> data() const { return data_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<F> col(std::size_t j) const {
    Vec<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<F> row(std::size_t i) const { return Vec<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Mat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat& operator+=(const Mat& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Mat operator*(Mat a, const F& s) { return a *= s; }
  friend Mat operator*(const F& s, Mat a) { return a *= s; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik == F(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vec<F> operator*(const Mat& a, const Vec<F>& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    Vec<F> out(a.rows_, F(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  /// Exact structural equality (bitwise for doubles).
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << "]\n";
    }
    return os;
  }

 private:
  void same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Largest entry magnitude (residual norm).
template <class F>
double max_abs(const Mat<F>& m) {
  double r = 0;
  for (const auto& x : m.data()) r = std::max(r, magnitude(x));
  return r;
}

template <class F>
double max_abs(const Vec<F>& v) {
  double r = 0;
  for (const auto& x : v) r = std::max(r, magnitude(x));
  return r;
}

/// Zero test: exact in exact mode, max-entry ≤ ε in float mode.
template <class F>
bool is_zero(const Mat<F>& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const F& x) { return is_zero(x); });
}

template <class F>
bool is_zero(const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& x) { return is_zero(x); });
}

template <class F>
bool approx_equal(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero(a - b);
}

/// Block matrix [[a, b], [c, d]].
template <class F>
Mat<F> block2x2(const Mat<F>& a, const Mat<F>& b, const Mat<F>& c, const Mat<F>& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
    throw DimensionError("block2x2 shape mismatch");
  Mat<F> m(a.rows() + c.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  m.set_block(a.rows(), 0, c);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

template <class G, class F, class Fn>
Mat<G> map_entries(const Mat<F>& m, Fn&& fn) {
  std::vector<G> out;
  out.reserve(m.data().size());
  for (const auto& x : m.data()) out.push_back(fn(x));
  return Mat<G>(m.rows(), m.cols(), std::move(out));
}

/// Converts a real matrix to another real field (Rational → double is lossy).
template <RealField T, RealField S>
Mat<T> convert(const Mat<S>& m) {
  return map_entries<T>(m, [](const S& x) { return convert<T>(x); });
}

template <RealField T>
Mat<Complex<T>> complexify(const Mat<T>& m) {
  return map_entries<Complex<T>>(m, [](const T& x) { return Complex<T>(x); });
}

template <class T>
Mat<Complex<T>> conj(const Mat<Complex<T>>& m) {
  return map_entries<Complex<T>>(m, [](const Complex<T>& z) { return conj(z); });
}

template <class T>
Vec<Complex<T>> conj(const Vec<Complex<T>>& v) {
  Vec<Complex<T>> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = conj(v[i]);
  return out;
}

template <class F>
Mat<F> from_columns(const std::vector<Vec<F>>& cols, std::size_t rows) {
  Mat<F> m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

template <class F>
bool is_skew(const Mat<F>& m) {
  return m.is_square() && is_zero(m + m.transpose());
}

}  // namespace gencx
