#pragma once

// Mixed forms in Λ•V* ⊗ ℂ and the Clifford action of V ⊕ V* on them.
//
// A form is stored densely: coefficient k belongs to the basis monomial
// e^{i₁} ∧ … ∧ e^{i_d} with i₁ < … < i_d the set bits of k.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "gencx/gcs.hpp"

namespace gencx {

inline constexpr std::size_t kMaxSpinorDim = 12;

namespace detail {

inline int popcount(std::uint32_t x) { return std::popcount(x); }

// (−1)^{#elements of s below bit k}
inline bool odd_below(std::uint32_t s, std::size_t k) { return popcount(s & ((1u << k) - 1u)) & 1; }

// Sign of e^s ∧ e^t (disjoint) relative to e^{s∪t}: one swap per pair i ∈ s, j ∈ t with i > j.
inline bool odd_merge(std::uint32_t s, std::uint32_t t) {
  int swaps = 0;
  for (std::uint32_t rest = t; rest; rest &= rest - 1) {
    std::size_t j = std::countr_zero(rest);
    swaps += popcount(s >> (j + 1));
  }
  return swaps & 1;
}

}  // namespace detail

template <RealField T>
class MixedForm {
 public:
  using C = Complex<T>;

  explicit MixedForm(std::size_t m) : m_(m) {
    if (m > kMaxSpinorDim) throw DimensionError("mixed forms are limited to dim_v <= 12");
    c_.assign(std::size_t{1} << m, C(0));
  }

  static MixedForm scalar(std::size_t m, C value) {
    MixedForm f(m);
    f.c_[0] = std::move(value);
    return f;
  }
  static MixedForm monomial(std::size_t m, std::uint32_t subset, C value = C(1)) {
    MixedForm f(m);
    f.at(subset) = std::move(value);
    return f;
  }

  std::size_t dim_v() const { return m_; }
  std::size_t size() const { return c_.size(); }
  const C& operator[](std::uint32_t subset) const { return c_[subset]; }
  C& at(std::uint32_t subset) {
    if (subset >= c_.size()) throw DimensionError("subset outside the exterior algebra");
    return c_[subset];
  }
  const std::vector<C>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& z : c_)
      if (!gencx::is_zero(z)) return false;
    return true;
  }

  /// Lowest degree carrying a nonzero coefficient; nullopt for the zero form.
  std::optional<std::size_t> lowest_degree() const {
    std::optional<std::size_t> best;
    for (std::uint32_t k = 0; k < c_.size(); ++k)
      if (!gencx::is_zero(c_[k])) {
        std::size_t d = detail::popcount(k);
        if (!best || d < *best) best = d;
      }
    return best;
  }

  MixedForm& operator+=(const MixedForm& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  MixedForm& operator-=(const MixedForm& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  MixedForm& operator*=(const C& s) {
    for (auto& z : c_) z *= s;
    return *this;
  }
  friend MixedForm operator+(MixedForm a, const MixedForm& b) { return a += b; }
  friend MixedForm operator-(MixedForm a, const MixedForm& b) { return a -= b; }
  friend MixedForm operator*(MixedForm a, const C& s) { return a *= s; }
  friend MixedForm operator*(const C& s, MixedForm a) { return a *= s; }
  friend bool operator==(const MixedForm& a, const MixedForm& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

 private:
  void check(const MixedForm& o) const {
    if (o.m_ != m_) throw DimensionError("mixed forms of different dimension");
  }

  std::size_t m_;
  std::vector<C> c_;
};

template <RealField T>
MixedForm<T> conj(const MixedForm<T>& f) {
  MixedForm<T> out(f.dim_v());
  for (std::uint32_t k = 0; k < f.size(); ++k) out.at(k) = conj(f[k]);
  return out;
}

template <RealField T>
MixedForm<T> wedge(const MixedForm<T>& a, const MixedForm<T>& b) {
  if (a.dim_v() != b.dim_v()) throw DimensionError("wedge: dimension mismatch");
  MixedForm<T> out(a.dim_v());
  for (std::uint32_t s = 0; s < a.size(); ++s) {
    if (is_zero(a[s])) continue;
    for (std::uint32_t t = 0; t < b.size(); ++t) {
      if ((s & t) || is_zero(b[t])) continue;
      auto term = a[s] * b[t];
      if (detail::odd_merge(s, t)) out.at(s | t) -= term;
      else out.at(s | t) += term;
    }
  }
  return out;
}

/// X + ξ acting as ι_X + ξ∧, with complex components.
template <RealField T>
struct CliffordElement {
  Vec<Complex<T>> vec;
  Vec<Complex<T>> covec;

  /// Splits a vector of V ⊕ V* (block order V, V*).
  static CliffordElement from_vector(const Vec<Complex<T>>& v) {
    if (v.size() % 2) throw DimensionError("element of V + V* must have even length");
    const std::size_t m = v.size() / 2;
    return {Vec<Complex<T>>(v.begin(), v.begin() + m), Vec<Complex<T>>(v.begin() + m, v.end())};
  }
  std::size_t dim_v() const { return vec.size(); }
};

template <RealField T>
MixedForm<T> clifford_act(const CliffordElement<T>& e, const MixedForm<T>& rho) {
  const std::size_t m = rho.dim_v();
  if (e.vec.size() != m || e.covec.size() != m) throw DimensionError("clifford_act: dimension mismatch");
  MixedForm<T> out(m);
  for (std::uint32_t s = 0; s < rho.size(); ++s) {
    const auto& r = rho[s];
    if (is_zero(r)) continue;
    for (std::size_t k = 0; k < m; ++k) {
      const std::uint32_t bit = 1u << k;
      if (s & bit) {
        if (is_zero(e.vec[k])) continue;
        auto term = e.vec[k] * r;
        if (detail::odd_below(s, k)) out.at(s ^ bit) -= term;
        else out.at(s ^ bit) += term;
      } else {
        if (is_zero(e.covec[k])) continue;
        auto term = e.covec[k] * r;
        if (detail::odd_below(s, k)) out.at(s | bit) -= term;
        else out.at(s | bit) += term;
      }
    }
  }
  return out;
}

namespace detail {

// Multiplies ρ by (1 + c·op) where op maps e^s to ±e^{f(s)} or 0; used for
// the factorized exponentials of 2-forms and bivectors.
template <RealField T>
MixedForm<T> wedge_pair(const MixedForm<T>& rho, std::size_t i, std::size_t j, const Complex<T>& c) {
  MixedForm<T> out = rho;
  const std::uint32_t pair = (1u << i) | (1u << j);
  for (std::uint32_t s = 0; s < rho.size(); ++s) {
    if ((s & pair) || is_zero(rho[s])) continue;
    // e^i ∧ e^j ∧ e^s
    bool odd = odd_merge(pair, s);
    auto term = c * rho[s];
    if (odd) out.at(s | pair) -= term;
    else out.at(s | pair) += term;
  }
  return out;
}

template <RealField T>
MixedForm<T> contract_pair(const MixedForm<T>& rho, std::size_t i, std::size_t j, const Complex<T>& c) {
  MixedForm<T> out = rho;
  const std::uint32_t pair = (1u << i) | (1u << j);
  for (std::uint32_t s = 0; s < rho.size(); ++s) {
    if ((s & pair) != pair || is_zero(rho[s])) continue;
    // ι_{e_j} ι_{e_i} e^s
    std::uint32_t t = s ^ (1u << i);
    bool odd = odd_below(s, i) != odd_below(t, j);
    auto term = c * rho[s];
    if (odd) out.at(s ^ pair) -= term;
    else out.at(s ^ pair) += term;
  }
  return out;
}

}  // namespace detail

/// The 2-form Σ_{i<j} b_ij e^i ∧ e^j as a mixed form.
template <RealField T>
MixedForm<T> two_form(const Mat<Complex<T>>& b) {
  if (!b.is_square()) throw DimensionError("two_form: matrix must be square");
  MixedForm<T> out(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i + 1; j < b.rows(); ++j) out.at((1u << i) | (1u << j)) = b(i, j);
  return out;
}

/// e^B = Σ B^k/k!, computed as Π_{i<j} (1 + b_ij e^i∧e^j) since the factors commute and square to zero.
template <RealField T>
MixedForm<T> exp_two_form(const Mat<Complex<T>>& b) {
  if (!b.is_square()) throw DimensionError("exp_two_form: matrix must be square");
  auto out = MixedForm<T>::scalar(b.rows(), Complex<T>(1));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i + 1; j < b.rows(); ++j)
      if (!is_zero(b(i, j))) out = detail::wedge_pair(out, i, j, b(i, j));
  return out;
}

template <RealField T>
MixedForm<T> exp_two_form(const TwoForm<T>& b) {
  return exp_two_form<T>(complexify(b.matrix()));
}

/// ι_{e^β} ρ with ι_β = Σ_{i<j} β^{ij} ι_{e_j} ι_{e_i}.
template <RealField T>
MixedForm<T> beta_on_spinor(const Bivector<T>& beta, const MixedForm<T>& rho) {
  if (beta.dim_v() != rho.dim_v()) throw DimensionError("beta_on_spinor: dimension mismatch");
  MixedForm<T> out = rho;
  const auto& bm = beta.matrix();
  for (std::size_t i = 0; i < bm.rows(); ++i)
    for (std::size_t j = i + 1; j < bm.rows(); ++j)
      if (!is_zero(bm(i, j))) out = detail::contract_pair(out, i, j, Complex<T>(bm(i, j)));
  return out;
}

/// Basis of L_ρ = {v : v·ρ = 0} as vectors of (V ⊕ V*) ⊗ ℂ.
template <RealField T>
std::vector<Vec<Complex<T>>> annihilator(const MixedForm<T>& rho) {
  if (rho.is_zero()) throw ParameterError("annihilator of the zero form");
  const std::size_t m = rho.dim_v();
  Mat<Complex<T>> act(rho.size(), 2 * m);
  for (std::size_t k = 0; k < 2 * m; ++k) {
    CliffordElement<T> e{Vec<Complex<T>>(m, Complex<T>(0)), Vec<Complex<T>>(m, Complex<T>(0))};
    (k < m ? e.vec[k] : e.covec[k - m]) = Complex<T>(1);
    auto img = clifford_act(e, rho);
    for (std::uint32_t s = 0; s < rho.size(); ++s) act(s, k) = img[s];
  }
  auto basis = nullspace(act);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      if (!is_zero(pairing(basis[a], basis[b]))) throw VerificationError("annihilator is not isotropic");
  return basis;
}

template <RealField T>
bool is_pure(const MixedForm<T>& rho) {
  return annihilator(rho).size() == rho.dim_v();
}

/// (σ(r1) ∧ r2)_top with σ = (−1)^{d(d−1)/2} on degree d.
template <RealField T>
Complex<T> mukai_pairing(const MixedForm<T>& r1, const MixedForm<T>& r2) {
  if (r1.dim_v() != r2.dim_v()) throw DimensionError("mukai_pairing: dimension mismatch");
  const std::uint32_t top = static_cast<std::uint32_t>(r1.size() - 1);
  Complex<T> sum(0);
  for (std::uint32_t s = 0; s <= top; ++s) {
    const std::uint32_t t = top ^ s;
    if (is_zero(r1[s]) || is_zero(r2[t])) continue;
    const int d = detail::popcount(s);
    bool odd = ((d * (d - 1) / 2) & 1) != detail::odd_merge(s, t);
    auto term = r1[s] * r2[t];
    if (odd) sum -= term;
    else sum += term;
  }
  return sum;
}

/// Basis of the +i-eigenspace L of a structure.
template <RealField T>
std::vector<Vec<Complex<T>>> plus_i_eigenspace(const GenStructure<T>& s) {
  const std::size_t n = s.mat().rows();
  return complex_nullspace(Mat<Complex<T>>(complexify(s.mat()) - Mat<Complex<T>>::identity(n) * Complex<T>::i()));
}

namespace detail {

// Scale so the first nonzero coefficient of lowest degree is 1. In float mode
// "nonzero" is relative to the largest coefficient.
template <RealField T>
MixedForm<T> normalize_line(MixedForm<T> rho) {
  double scale = 0;
  if constexpr (!is_exact_v<T>) {
    for (const auto& z : rho.coeffs()) scale = std::max(scale, magnitude(z));
    if (scale > 0)
      for (std::uint32_t k = 0; k < rho.size(); ++k)
        if (magnitude(rho[k]) <= tolerance() * scale) rho.at(k) = Complex<T>(0);
  }
  auto low = rho.lowest_degree();
  if (!low) throw VerificationError("canonical line: zero generator");
  for (std::uint32_t k = 0; k < rho.size(); ++k)
    if (static_cast<std::size_t>(popcount(k)) == *low && !is_zero(rho[k])) {
      Complex<T> inv = Complex<T>(1) / rho[k];
      rho *= inv;
      break;
    }
  return rho;
}

}  // namespace detail

/// Generator of the pure line annihilated by L. The product v₁⋯v_m of a
/// basis of L (mutually anticommuting, square zero) maps every form into that
/// line, so it is applied to a generic form and, failing that, to each
/// monomial until the image is nonzero.
template <RealField T>
MixedForm<T> canonical_line(const GenStructure<T>& s) {
  const std::size_t m = s.dim_v();
  if (m > kMaxSpinorDim) throw DimensionError("spinor operations are limited to dim_v <= 12");
  auto basis = plus_i_eigenspace(s);
  if (basis.size() != m) throw VerificationError("canonical line: +i-eigenspace is not maximal");
  std::vector<CliffordElement<T>> gens;
  for (const auto& v : basis) gens.push_back(CliffordElement<T>::from_vector(v));

  auto apply_all = [&](MixedForm<T> phi) {
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) phi = clifford_act(*it, phi);
    return phi;
  };
  auto nonzero = [](const MixedForm<T>& f) {
    if constexpr (is_exact_v<T>) {
      return !f.is_zero();
    } else {
      double mx = 0;
      for (const auto& z : f.coeffs()) mx = std::max(mx, magnitude(z));
      return mx > tolerance();
    }
  };

  MixedForm<T> generic(m);
  for (std::uint32_t k = 0; k < generic.size(); ++k) generic.at(k) = Complex<T>(T(static_cast<int>(k % 7) + 1));
  MixedForm<T> rho = apply_all(generic);
  for (std::uint32_t k = 0; !nonzero(rho) && k < generic.size(); ++k) rho = apply_all(MixedForm<T>::monomial(m, k));
  if (!nonzero(rho)) throw VerificationError("canonical line: no annihilated form found");
  rho = detail::normalize_line(std::move(rho));

  for (const auto& g : gens) {
    auto r = clifford_act(g, rho);
    bool killed = true;
    if constexpr (is_exact_v<T>) killed = r.is_zero();
    else
      for (const auto& z : r.coeffs()) killed = killed && magnitude(z) <= std::sqrt(tolerance());
    if (!killed) throw VerificationError("canonical line: generator is not annihilated by L");
  }
  auto mk = mukai_pairing(rho, conj(rho));
  if (is_zero(mk)) throw VerificationError("canonical line: Mukai pairing (rho, conj rho) vanishes");
  return rho;
}

/// Type read off the spinor: the lowest degree of the canonical line.
template <RealField T>
std::size_t spinor_type(const GenStructure<T>& s) {
  return *canonical_line(s).lowest_degree();
}

/// Whether two forms span the same complex line.
template <RealField T>
bool proportional(const MixedForm<T>& a, const MixedForm<T>& b) {
  if (a.dim_v() != b.dim_v()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  std::uint32_t k = 0;
  while (is_zero(a[k])) ++k;
  if (is_zero(b[k])) return false;
  Complex<T> ratio = b[k] / a[k];
  for (std::uint32_t s = 0; s < a.size(); ++s)
    if (!is_zero(b[s] - ratio * a[s])) return false;
  return true;
}

}  // namespace gencx
