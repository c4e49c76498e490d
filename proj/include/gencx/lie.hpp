#pragma once

// Lie algebras by structure constants, the cotangent double g ⋉ g* with its
// invariant pairing, and Nijenhuis tensors of left-invariant structures.
//
// Conventions: [e_i, e_j] = Σ_k c^k_ij e_k, equivalently
// de^k = −Σ_{i<j} c^k_ij e^i ∧ e^j.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gencx/gcs.hpp"

namespace gencx {

template <RealField T>
class LieAlgebra {
 public:
  /// Builds from c[k][i][j] = c^k_ij after checking antisymmetry and Jacobi.
  static LieAlgebra from_constants(std::size_t n, std::vector<T> c, std::vector<std::string> names = {}) {
    if (c.size() != n * n * n) throw DimensionError("structure constants must have dim^3 entries");
    if (names.empty())
      for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    if (names.size() != n) throw DimensionError("basis names do not match the dimension");
    LieAlgebra g(n, std::move(c), std::move(names));
    g.check_axioms();
    return g;
  }
  static LieAlgebra abelian(std::size_t n) { return from_constants(n, std::vector<T>(n * n * n, T(0))); }

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const T& constant(std::size_t k, std::size_t i, std::size_t j) const { return c_[(k * n_ + i) * n_ + j]; }

  bool is_abelian() const {
    for (const auto& x : c_)
      if (!is_zero(x)) return false;
    return true;
  }

  /// [e_i, e_j] as a coefficient vector.
  Vec<T> bracket_basis(std::size_t i, std::size_t j) const {
    Vec<T> out(n_, T(0));
    for (std::size_t k = 0; k < n_; ++k) out[k] = constant(k, i, j);
    return out;
  }

  template <class F>
  Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionError("bracket: dimension mismatch");
    Vec<F> out(n_, F(0));
    for (std::size_t i = 0; i < n_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (is_zero(y[j])) continue;
        F xy = x[i] * y[j];
        for (std::size_t k = 0; k < n_; ++k)
          if (!is_zero(constant(k, i, j))) out[k] += xy * F(constant(k, i, j));
      }
    }
    return out;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  LieAlgebra(std::size_t n, std::vector<T> c, std::vector<std::string> names)
      : n_(n), c_(std::move(c)), names_(std::move(names)) {}

  void check_axioms() const {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
          if (!is_zero(constant(k, i, j) + constant(k, j, i)))
            throw VerificationError("structure constants are not antisymmetric");
    // Σ_m c^m_ij c^l_mk + c^m_jk c^l_mi + c^m_ki c^l_mj = 0
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k)
          for (std::size_t l = 0; l < n_; ++l) {
            T s(0);
            for (std::size_t m = 0; m < n_; ++m)
              s += constant(m, i, j) * constant(l, m, k) + constant(m, j, k) * constant(l, m, i) +
                   constant(m, k, i) * constant(l, m, j);
            if (!is_zero(s)) throw VerificationError("Jacobi identity fails (d^2 != 0)");
          }
  }

  std::size_t n_;
  std::vector<T> c_;
  std::vector<std::string> names_;
};

/// One structure equation de^k = Σ_{i<j} b_ij e^i ∧ e^j.
template <RealField T>
struct StructureEquation {
  std::size_t index;
  TwoForm<T> form;
};

template <RealField T>
LieAlgebra<T> from_structure_equations(std::size_t n, const std::vector<StructureEquation<T>>& eqs,
                                       std::vector<std::string> names = {}) {
  std::vector<T> c(n * n * n, T(0));
  std::vector<bool> seen(n, false);
  for (const auto& eq : eqs) {
    if (eq.index >= n || eq.form.dim_v() != n) throw ParameterError("structure equation index or size out of range");
    if (seen[eq.index]) throw ParameterError("structure equation given twice for one index");
    seen[eq.index] = true;
    const auto& b = eq.form.matrix();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c[(eq.index * n + i) * n + j] = -b(i, j);
  }
  return LieAlgebra<T>::from_constants(n, std::move(c), std::move(names));
}

/// Parses lines such as "d e3 = - e1^e2 + 2 e0^e3". Basis symbols are a
/// letter prefix followed by an index; `index_base` is subtracted from each
/// index. Blank lines and lines starting with '#' are skipped.
template <RealField T>
std::vector<StructureEquation<T>> parse_structure_equations(std::string_view text, std::size_t n,
                                                            std::size_t index_base = 0) {
  std::vector<StructureEquation<T>> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    std::size_t p = 0;
    auto fail = [&](const std::string& what) {
      throw ParseError("structure equation line " + std::to_string(lineno) + ": " + what);
    };
    auto skip_ws = [&] {
      while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    };
    auto symbol = [&]() -> std::size_t {
      skip_ws();
      std::size_t start = p;
      while (p < line.size() && std::isalpha(static_cast<unsigned char>(line[p]))) ++p;
      if (p == start) fail("expected a basis symbol");
      std::size_t dstart = p;
      while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p]))) ++p;
      if (p == dstart) fail("basis symbol without index");
      std::size_t idx = std::stoul(line.substr(dstart, p - dstart));
      if (idx < index_base || idx - index_base >= n) fail("index out of range");
      return idx - index_base;
    };

    skip_ws();
    if (p == line.size() || line[p] == '#') continue;
    if (line[p] != 'd') fail("expected 'd'");
    ++p;
    std::size_t k = symbol();
    skip_ws();
    if (p == line.size() || line[p] != '=') fail("expected '='");
    ++p;
    Mat<T> b(n, n);
    skip_ws();
    if (line.compare(p, std::string::npos, "0") == 0) {
      out.push_back({k, TwoForm<T>(b)});
      continue;
    }
    bool first = true;
    while (true) {
      skip_ws();
      if (p == line.size()) break;
      T sign(1);
      if (line[p] == '+' || line[p] == '-') {
        if (line[p] == '-') sign = T(-1);
        ++p;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      T coeff(1);
      std::size_t cstart = p;
      while (p < line.size() && (std::isdigit(static_cast<unsigned char>(line[p])) || line[p] == '/' || line[p] == '.'))
        ++p;
      if (p > cstart) {
        if constexpr (is_exact_v<T>) coeff = parse_rational(line.substr(cstart, p - cstart));
        else coeff = to_double(parse_rational(line.substr(cstart, p - cstart)));
        skip_ws();
        if (p < line.size() && line[p] == '*') ++p;
      }
      std::size_t i = symbol();
      skip_ws();
      if (p == line.size() || line[p] != '^') fail("expected '^'");
      ++p;
      std::size_t j = symbol();
      if (i == j) continue;  // e^i ∧ e^i = 0
      b(i, j) += sign * coeff;
      b(j, i) -= sign * coeff;
    }
    out.push_back({k, TwoForm<T>(b)});
  }
  return out;
}

/// g ⋉ g* with [(X,α),(Y,β)] = ([X,Y], −β∘ad_X + α∘ad_Y); basis order
/// (e_0, …, e_{n−1}, e^0, …, e^{n−1}).
template <RealField T>
struct DoubleAlgebra {
  LieAlgebra<T> base;
  LieAlgebra<T> algebra;

  std::size_t dim() const { return algebra.dim(); }
};

template <RealField T>
DoubleAlgebra<T> cotangent_double(const LieAlgebra<T>& g) {
  const std::size_t n = g.dim(), d = 2 * n;
  std::vector<T> c(d * d * d, T(0));
  auto at = [&](std::size_t k, std::size_t i, std::size_t j) -> T& { return c[(k * d + i) * d + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        at(l, i, j) = g.constant(l, i, j);
        // [e_i, e^j] = −Σ_l c^j_il e^l
        at(n + l, i, n + j) = -g.constant(j, i, l);
        at(n + l, n + j, i) = g.constant(j, i, l);
      }
  std::vector<std::string> names = g.names();
  for (std::size_t i = 0; i < n; ++i) names.push_back(g.names()[i] + "*");
  return {g, LieAlgebra<T>::from_constants(d, std::move(c), std::move(names))};
}

/// Values N(u, v, w) on basis triples, indexed (u·d + v)·d + w.
template <RealField T>
struct NijenhuisTensor {
  std::size_t dim = 0;
  std::vector<T> values;

  const T& operator()(std::size_t u, std::size_t v, std::size_t w) const { return values[(u * dim + v) * dim + w]; }
  bool vanishes() const {
    for (const auto& x : values)
      if (!is_zero(x)) return false;
    return true;
  }
  double max_abs() const {
    double m = 0;
    for (const auto& x : values) m = std::max(m, magnitude(x));
    return m;
  }
};

/// N(U,V,W) = ⟨[𝓘U,𝓘V] − 𝓘[𝓘U,V] − 𝓘[U,𝓘V] − [U,V], W⟩ with the neutral
/// pairing of the double; total skew-symmetry is checked before returning.
template <RealField T>
NijenhuisTensor<T> nijenhuis(const DoubleAlgebra<T>& d, const GenStructure<T>& s) {
  const std::size_t dim = d.dim();
  if (s.mat().rows() != dim) throw DimensionError("nijenhuis: structure does not act on the double");
  const Mat<T>& mi = s.mat();
  const Mat<T> q = PairingMatrix<T>::make(dim / 2).q;
  const auto& g = d.algebra;

  auto unit = [dim](std::size_t k) {
    Vec<T> e(dim, T(0));
    e[k] = T(1);
    return e;
  };
  std::vector<Vec<T>> img(dim);
  for (std::size_t u = 0; u < dim; ++u) img[u] = mi.col(u);

  NijenhuisTensor<T> out{dim, std::vector<T>(dim * dim * dim, T(0))};
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = u + 1; v < dim; ++v) {
      Vec<T> iu_v = g.bracket(img[u], unit(v));
      Vec<T> u_iv = g.bracket(unit(u), img[v]);
      Vec<T> sum(dim, T(0));
      for (std::size_t k = 0; k < dim; ++k) sum[k] = iu_v[k] + u_iv[k];
      Vec<T> n_uv = g.bracket(img[u], img[v]);
      Vec<T> isum = mi * sum;
      Vec<T> uv = g.bracket_basis(u, v);
      for (std::size_t k = 0; k < dim; ++k) n_uv[k] -= isum[k] + uv[k];
      Vec<T> paired = q * n_uv;
      for (std::size_t w = 0; w < dim; ++w) {
        out.values[(u * dim + v) * dim + w] = paired[w];
        out.values[(v * dim + u) * dim + w] = -paired[w];
      }
    }
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = 0; v < dim; ++v)
      for (std::size_t w = 0; w < dim; ++w) {
        const T& a = out(u, v, w);
        if (!is_zero(a + out(u, w, v)) || !is_zero(a - out(v, w, u)))
          throw VerificationError("Nijenhuis tensor is not totally skew");
      }
  return out;
}

template <RealField T>
bool is_integrable(const DoubleAlgebra<T>& d, const GenStructure<T>& s) {
  return nijenhuis(d, s).vanishes();
}

/// dB = 0 with dB(X,Y,Z) = −B([X,Y],Z) − B([Y,Z],X) − B([Z,X],Y).
template <RealField T>
bool closed_2form_check(const LieAlgebra<T>& g, const TwoForm<T>& b) {
  const std::size_t n = g.dim();
  if (b.dim_v() != n) throw DimensionError("closed_2form_check: dimension mismatch");
  const Mat<T>& bm = b.matrix();
  auto bval = [&](const Vec<T>& x, std::size_t z) {
    T s(0);
    for (std::size_t k = 0; k < n; ++k) s += x[k] * bm(k, z);
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        T db = -bval(g.bracket_basis(i, j), k) - bval(g.bracket_basis(j, k), i) - bval(g.bracket_basis(k, i), j);
        if (!is_zero(db)) return false;
      }
  return true;
}

}  // namespace gencx
