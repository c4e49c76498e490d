#pragma once

// Shared helpers for the test suites: deterministic random generators for
// rational matrices and structures.

#include <random>
#include <string>

#include "gencx/gencx.hpp"

namespace gencx::testing {

using R = Rational;
using CR = Complex<Rational>;

inline R q(const std::string& s) { return parse_rational(s); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261018);
  return gen;
}

inline int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Mat<R> random_int_matrix(std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  Mat<R> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = R(rand_int(lo, hi));
  return m;
}

inline Mat<R> random_skew(std::size_t n, int lo = -2, int hi = 2) {
  Mat<R> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = R(rand_int(lo, hi));
      m(j, i) = -m(i, j);
    }
  return m;
}

/// Product of random elementary matrices: integer entries, determinant ±1.
inline Mat<R> random_unimodular(std::size_t n, int steps = 6) {
  Mat<R> g = Mat<R>::identity(n);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = rand_int(0, static_cast<int>(n) - 1);
    std::size_t j = rand_int(0, static_cast<int>(n) - 1);
    if (i == j) {
      for (std::size_t k = 0; k < n; ++k) g(i, k) = -g(i, k);
      continue;
    }
    R f(rand_int(-1, 1));
    for (std::size_t k = 0; k < n; ++k) g(i, k) += f * g(j, k);
  }
  return g;
}

/// Matrix of rank `rk`: product of random (r×rk) and (rk×c) factors, then
/// rows/cols mixed by unimodular matrices so the rank is exactly `rk`.
inline Mat<R> random_rank_matrix(std::size_t r, std::size_t c, std::size_t rk) {
  Mat<R> a(r, c);
  for (std::size_t k = 0; k < rk; ++k) a(k, k) = R(rand_int(1, 3));
  return random_unimodular(r) * a * random_unimodular(c);
}

/// Standard complex structure on R^{2n}: e_{2k} ↦ e_{2k+1} ↦ −e_{2k}.
inline Mat<R> standard_j(std::size_t dim) {
  Mat<R> j(dim, dim);
  for (std::size_t k = 0; k + 1 < dim; k += 2) {
    j(k + 1, k) = 1;
    j(k, k + 1) = -1;
  }
  return j;
}

/// Standard symplectic form Σ e^{2k} ∧ e^{2k+1} (components).
inline Mat<R> standard_omega(std::size_t dim) {
  Mat<R> w(dim, dim);
  for (std::size_t k = 0; k + 1 < dim; k += 2) {
    w(k, k + 1) = 1;
    w(k + 1, k) = -1;
  }
  return w;
}

}  // namespace gencx::testing

namespace gencx::testing {

/// Verified structure on R^m of type k: complex on the first 2k coordinates,
/// symplectic on the rest, then scrambled by random B-, β- and GL(V)-actions.
/// β-transforms change the type, so `k` is the seed type only when
/// `with_beta` is false.
inline GenStructure<R> random_structure(std::size_t m, std::size_t k, bool with_beta = true) {
  GenStructure<R> s = [&] {
    if (k == 0) return from_symplectic(TwoForm<R>(standard_omega(m)));
    if (2 * k == m) return from_complex(standard_j(m));
    return direct_sum(from_complex(standard_j(2 * k)), from_symplectic(TwoForm<R>(standard_omega(m - 2 * k))));
  }();
  s = gl_transform(s, random_unimodular(m, 4));
  s = b_transform(s, TwoForm<R>(random_skew(m, -1, 1)));
  if (with_beta) s = beta_transform(s, Bivector<R>(random_skew(m, -1, 1)));
  s = gl_transform(s, random_unimodular(m, 3));
  return s;
}

}  // namespace gencx::testing
