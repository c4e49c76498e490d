#pragma once

// The λ-chart of a hypercomplex family, the (1,0)-basis X − λȲ, Y + λX̄, the
// cubic integrability certificate and pointwise twistor types.

#include <array>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "gencx/hyper.hpp"
#include "gencx/lie.hpp"

namespace gencx {

/// St(x + iy) = ((1 − |λ|²), 2y, 2x) / (1 + |λ|²).
template <RealField T>
std::array<T, 3> stereographic(const Complex<T>& lam) {
  T n2 = lam.re * lam.re + lam.im * lam.im;
  T den = T(1) + n2;
  return {T((T(1) - n2) / den), T(T(2) * lam.im / den), T(T(2) * lam.re / den)};
}

/// Inverse of St; nullopt stands for λ = ∞ (the point −𝓘).
template <RealField T>
std::optional<Complex<T>> inverse_stereographic(const T& a, const T& b, const T& c) {
  T den = T(1) + a;
  if (is_zero(den)) return std::nullopt;
  return Complex<T>(T(c / den), T(b / den));
}

template <RealField T>
struct LambdaChart {
  SphereFamily<T> family;
};

/// 𝓘_λ = evaluate(family, St(λ)); λ = nullopt means ∞ and gives −𝓘.
template <RealField T>
GenStructure<T> lambda_structure(const LambdaChart<T>& chart, const std::type_identity_t<std::optional<Complex<T>>>& lam) {
  if (!lam) return -chart.family.i;
  auto [a, b, c] = stereographic(*lam);
  return evaluate(chart.family, a, b, c);
}

/// Basis (X_1, Y_1, …) of the +i-eigenspace of 𝓘 with 𝓙′X_k = Ȳ_k and 𝓙′Y_k = −X̄_k.
template <RealField T>
std::vector<Vec<Complex<T>>> adapted_basis(const SphereFamily<T>& f) {
  using C = Complex<T>;
  const std::size_t n = f.i.mat().rows(), m = f.dim_v();
  auto l = complex_nullspace(Mat<C>(complexify(f.i.mat()) - Mat<C>::identity(n) * C::i()));
  if (l.size() != m) throw VerificationError("adapted basis: +i-eigenspace of I is not maximal");
  const Mat<C> jc = complexify(f.j.mat());
  std::vector<Vec<C>> out;
  for (const auto& x : l) {
    if (out.size() == m) break;
    auto trial = out;
    trial.push_back(x);
    if (span_dim(trial, n) != trial.size()) continue;
    Vec<C> y = conj(Vec<C>(jc * x));
    trial.push_back(y);
    if (span_dim(trial, n) != trial.size()) throw VerificationError("adapted basis: J' does not pair the eigenspace");
    out = std::move(trial);
  }
  if (out.size() != m) throw VerificationError("adapted basis: could not complete the quaternionic basis");
  return out;
}

/// X_k − λȲ_k and Y_k + λX̄_k for an adapted basis at λ = 0.
template <RealField T>
std::vector<Vec<Complex<T>>> deform_basis(const std::vector<Vec<Complex<T>>>& adapted, const Complex<T>& lam) {
  using C = Complex<T>;
  std::vector<Vec<C>> out;
  for (std::size_t k = 0; k + 1 < adapted.size(); k += 2) {
    const auto& x = adapted[k];
    const auto& y = adapted[k + 1];
    Vec<C> xl(x.size()), yl(y.size());
    for (std::size_t r = 0; r < x.size(); ++r) {
      xl[r] = x[r] - lam * conj(y[r]);
      yl[r] = y[r] + lam * conj(x[r]);
    }
    out.push_back(std::move(xl));
    out.push_back(std::move(yl));
  }
  return out;
}

template <RealField T>
std::vector<Vec<Complex<T>>> holomorphic_basis(const LambdaChart<T>& chart, const Complex<T>& lam) {
  return deform_basis(adapted_basis(chart.family), lam);
}

namespace detail {

// N(u, v, w) extended complex-trilinearly from the real basis values.
template <RealField T>
Complex<T> contract(const NijenhuisTensor<T>& n, const Vec<Complex<T>>& u, const Vec<Complex<T>>& v,
                    const Vec<Complex<T>>& w) {
  Complex<T> s(0);
  const std::size_t d = n.dim;
  for (std::size_t a = 0; a < d; ++a) {
    if (is_zero(u[a])) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (is_zero(v[b])) continue;
      Complex<T> uv = u[a] * v[b];
      for (std::size_t c = 0; c < d; ++c) {
        const T& x = n(a, b, c);
        if (is_zero(x) || is_zero(w[c])) continue;
        s += uv * w[c] * Complex<T>(x);
      }
    }
  }
  return s;
}

}  // namespace detail

/// Coefficients of N_λ(U_λ, V_λ, W_λ) = N₀ + N₁λ + N₂λ² + N₃λ³ for one triple of generators.
template <RealField T>
struct CertificateEntry {
  std::size_t i, j, k;
  std::array<Complex<T>, 4> coeffs;
  Complex<T> check_value;     // N_λ at the control point
  Complex<T> check_predicted; // polynomial evaluated there
};

template <RealField T>
struct PolynomialCertificate {
  std::vector<CertificateEntry<T>> entries;
  std::array<int, 4> nodes{1, 2, 3, 5};
  int control = 7;

  bool all_zero() const {
    for (const auto& e : entries)
      for (const auto& c : e.coeffs)
        if (!is_zero(c)) return false;
    return true;
  }
  bool consistent() const {
    for (const auto& e : entries)
      if (!is_zero(Complex<T>(e.check_value - e.check_predicted))) return false;
    return true;
  }
  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& e : entries)
      for (const auto& c : e.coeffs) n += !is_zero(c);
    return n;
  }
};

/// Evaluates N_λ on every triple i < j < k of holomorphic generators at
/// λ ∈ {1, 2, 3, 5}, solves the Vandermonde system for the cubic's
/// coefficients and checks the fit at λ = 7.
template <RealField T>
PolynomialCertificate<T> polynomial_certificate(const DoubleAlgebra<T>& d, const LambdaChart<T>& chart) {
  using C = Complex<T>;
  if (d.dim() != chart.family.i.mat().rows()) throw DimensionError("polynomial_certificate: family does not act on the double");
  PolynomialCertificate<T> cert;
  const auto adapted = adapted_basis(chart.family);
  const std::size_t m = adapted.size();

  std::vector<int> lams(cert.nodes.begin(), cert.nodes.end());
  lams.push_back(cert.control);
  // values[l][triple]
  std::vector<std::vector<C>> values;
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) triples.push_back({i, j, k});
  for (int lv : lams) {
    C lam(T(lv), T(0));
    auto s = lambda_structure(chart, std::optional<C>(lam));
    auto tensor = nijenhuis(d, s);
    auto gens = deform_basis(adapted, lam);
    std::vector<C> vals;
    for (const auto& t : triples) vals.push_back(detail::contract(tensor, gens[t[0]], gens[t[1]], gens[t[2]]));
    values.push_back(std::move(vals));
  }

  Mat<C> vander(4, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    C pw(1);
    for (std::size_t c = 0; c < 4; ++c) {
      vander(r, c) = pw;
      pw *= C(T(cert.nodes[r]), T(0));
    }
  }
  auto vinv = inverse(vander);
  if (!vinv) throw VerificationError("polynomial_certificate: singular Vandermonde system");
  for (std::size_t t = 0; t < triples.size(); ++t) {
    Vec<C> rhs{values[0][t], values[1][t], values[2][t], values[3][t]};
    Vec<C> coef = *vinv * rhs;
    CertificateEntry<T> e{triples[t][0], triples[t][1], triples[t][2], {coef[0], coef[1], coef[2], coef[3]}, values[4][t], C(0)};
    C pw(1), pred(0);
    for (std::size_t c = 0; c < 4; ++c) {
      pred += coef[c] * pw;
      pw *= C(T(cert.control), T(0));
    }
    e.check_predicted = pred;
    cert.entries.push_back(std::move(e));
  }
  return cert;
}

// ---------------------------------------------------------------------------

struct TwistorSample {
  double a = 0, b = 0, c = 0;
  std::size_t fiber_type = 0;
  std::size_t twistor_type = 0;
};

struct TwistorReport {
  std::size_t dim_v = 0;
  bool s2_symplectic = false;
  std::vector<TwistorSample> samples;
  std::size_t min_twistor_type = 0, max_twistor_type = 0;
  std::size_t min_fiber_type = 0, max_fiber_type = 0;
  std::string regime;
};

/// Twistor type = fiber type + 1 (complex S² factor) or + 0 (symplectic S²
/// factor). Regime: every fiber of maximal type m/2 is the B-twisted
/// hypercomplex case, some fiber of type 0 the hypersymplectic case.
template <RealField T>
TwistorReport twistor_type_report(const SphereFamily<T>& f, std::size_t grid, bool s2_symplectic = false) {
  auto tm = family_typemap(f, grid);
  TwistorReport r;
  r.dim_v = f.dim_v();
  r.s2_symplectic = s2_symplectic;
  const std::size_t offset = s2_symplectic ? 0 : 1;
  for (const auto& s : tm.samples) r.samples.push_back({s.a, s.b, s.c, s.type, s.type + offset});
  r.min_fiber_type = tm.min_type();
  r.max_fiber_type = tm.max_type();
  r.min_twistor_type = r.min_fiber_type + offset;
  r.max_twistor_type = r.max_fiber_type + offset;
  if (2 * r.min_fiber_type == r.dim_v) r.regime = "B-twisted hypercomplex";
  else if (r.min_fiber_type == 0) r.regime = "hypersymplectic";
  else r.regime = "intermediate";
  return r;
}

}  // namespace gencx
