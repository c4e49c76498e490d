#pragma once

// Linear generalized complex structures on V ⊕ V*.
//
// Block order is (V, V*): a structure on an m-dimensional V is a 2m×2m matrix
// whose first m coordinates are vector components and last m are covector
// components. A 2-form B is stored by its components b_ij = B(e_i, e_j); as a
// map V → V* this is X ↦ B(·, X). A bivector β is stored by β^{ij}.

#include <cstddef>
#include <string>

#include "gencx/linalg.hpp"

namespace gencx {

/// Neutral pairing ⟨X+ξ, Y+η⟩ = ½(ξ(Y) + η(X)) as the matrix [[0, ½I], [½I, 0]].
template <RealField T>
struct PairingMatrix {
  std::size_t dim_v = 0;
  Mat<T> q;

  static PairingMatrix make(std::size_t m) {
    PairingMatrix p{m, Mat<T>(2 * m, 2 * m)};
    const T half = T(1) / T(2);
    for (std::size_t i = 0; i < m; ++i) {
      p.q(i, m + i) = half;
      p.q(m + i, i) = half;
    }
    return p;
  }
};

/// ⟨u, v⟩ for u, v ∈ V ⊕ V* (complex-bilinear when F is complex).
template <class F>
F pairing(const Vec<F>& u, const Vec<F>& v) {
  if (u.size() != v.size() || u.size() % 2) throw DimensionError("pairing: bad vector length");
  const std::size_t m = u.size() / 2;
  F s(0);
  for (std::size_t i = 0; i < m; ++i) s += u[m + i] * v[i] + v[m + i] * u[i];
  return s * F(real_of_t<F>(1) / real_of_t<F>(2));
}

template <RealField T>
class TwoForm {
 public:
  explicit TwoForm(Mat<T> b) : b_(std::move(b)) {
    if (!is_skew(b_)) throw ParameterError("2-form matrix must be skew-symmetric");
  }
  static TwoForm zero(std::size_t m) { return TwoForm(Mat<T>(m, m)); }

  std::size_t dim_v() const { return b_.rows(); }
  const Mat<T>& matrix() const { return b_; }
  TwoForm operator-() const { return TwoForm(-b_); }

 private:
  Mat<T> b_;
};

template <RealField T>
class Bivector {
 public:
  explicit Bivector(Mat<T> beta) : beta_(std::move(beta)) {
    if (!is_skew(beta_)) throw ParameterError("bivector matrix must be skew-symmetric");
  }
  static Bivector zero(std::size_t m) { return Bivector(Mat<T>(m, m)); }

  std::size_t dim_v() const { return beta_.rows(); }
  const Mat<T>& matrix() const { return beta_; }
  Bivector operator-() const { return Bivector(-beta_); }

 private:
  Mat<T> beta_;
};

/// Outcome of the two defining checks, with residuals (max-entry norms).
struct StructureReport {
  bool squares_to_minus_id = false;
  bool orthogonal = false;
  double square_residual = 0;
  double orthogonality_residual = 0;

  bool ok() const { return squares_to_minus_id && orthogonal; }
};

template <RealField T>
StructureReport is_generalized_complex(const Mat<T>& mat) {
  if (!mat.is_square() || mat.rows() % 2) throw DimensionError("structure matrix must be square of even size");
  const std::size_t n = mat.rows();
  const auto q = PairingMatrix<T>::make(n / 2).q;
  Mat<T> sq = mat * mat + Mat<T>::identity(n);
  Mat<T> orth = mat.transpose() * q * mat - q;
  StructureReport r;
  r.square_residual = max_abs(sq);
  r.orthogonality_residual = max_abs(orth);
  r.squares_to_minus_id = is_zero(sq);
  r.orthogonal = is_zero(orth);
  return r;
}

/// A square matrix on V ⊕ V*; `verified()` records that both defining
/// identities were checked when it was built.
template <RealField T>
class GenStructure {
 public:
  static GenStructure candidate(Mat<T> mat) {
    if (!mat.is_square() || mat.rows() % 2) throw DimensionError("structure matrix must be square of even size");
    return GenStructure(std::move(mat), false);
  }
  static GenStructure verified(Mat<T> mat) {
    auto rep = is_generalized_complex(mat);
    if (!rep.ok()) {
      std::string why = !rep.squares_to_minus_id ? "square check failed" : "pairing orthogonality failed";
      throw VerificationError("not a generalized complex structure: " + why);
    }
    return GenStructure(std::move(mat), true);
  }

  std::size_t dim_v() const { return mat_.rows() / 2; }
  const Mat<T>& mat() const { return mat_; }
  bool is_verified() const { return verified_; }

  /// Upper-right m×m block: the Poisson bivector of the structure.
  Mat<T> poisson_block() const { return mat_.block(0, dim_v(), dim_v(), dim_v()); }

  GenStructure operator-() const { return GenStructure(-mat_, verified_); }

  friend bool operator==(const GenStructure& a, const GenStructure& b) { return a.mat_ == b.mat_; }

 private:
  GenStructure(Mat<T> mat, bool verified) : mat_(std::move(mat)), verified_(verified) {}

  Mat<T> mat_;
  bool verified_ = false;
};

/// diag(J, −J*) for a complex structure J on V.
template <RealField T>
GenStructure<T> from_complex(const Mat<T>& j) {
  if (!j.is_square()) throw DimensionError("complex structure must be square");
  if (!is_zero(j * j + Mat<T>::identity(j.rows()))) throw ParameterError("J does not square to -Id");
  const std::size_t m = j.rows();
  return GenStructure<T>::verified(block2x2(j, Mat<T>(m, m), Mat<T>(m, m), Mat<T>(-j.transpose())));
}

/// [[0, −ω⁻¹], [ω, 0]] for a symplectic form ω.
template <RealField T>
GenStructure<T> from_symplectic(const TwoForm<T>& w) {
  auto inv = inverse(w.matrix());
  if (!inv) throw ParameterError("symplectic form is degenerate");
  const std::size_t m = w.dim_v();
  return GenStructure<T>::verified(block2x2(Mat<T>(m, m), Mat<T>(-*inv), w.matrix(), Mat<T>(m, m)));
}

/// Ad(exp B)·𝓘 = [[1, 0], [B, 1]] · 𝓘 · [[1, 0], [−B, 1]].
template <RealField T>
GenStructure<T> b_transform(const GenStructure<T>& s, const TwoForm<T>& b) {
  const std::size_t m = s.dim_v();
  if (b.dim_v() != m) throw DimensionError("b_transform: dimension mismatch");
  const auto id = Mat<T>::identity(m);
  const Mat<T> zero(m, m);
  Mat<T> out = block2x2(id, zero, b.matrix(), id) * s.mat() * block2x2(id, zero, Mat<T>(-b.matrix()), id);
  return s.is_verified() ? GenStructure<T>::verified(std::move(out)) : GenStructure<T>::candidate(std::move(out));
}

/// [[1, −β], [0, 1]] · 𝓘 · [[1, β], [0, 1]]; the image of the +i-eigenspace
/// is {X − βξ + ξ}, which is the annihilator of ι_{e^β}ρ.
template <RealField T>
GenStructure<T> beta_transform(const GenStructure<T>& s, const Bivector<T>& beta) {
  const std::size_t m = s.dim_v();
  if (beta.dim_v() != m) throw DimensionError("beta_transform: dimension mismatch");
  const auto id = Mat<T>::identity(m);
  const Mat<T> zero(m, m);
  Mat<T> out = block2x2(id, Mat<T>(-beta.matrix()), zero, id) * s.mat() * block2x2(id, beta.matrix(), zero, id);
  return s.is_verified() ? GenStructure<T>::verified(std::move(out)) : GenStructure<T>::candidate(std::move(out));
}

/// Action of g ∈ GL(V) on V ⊕ V*: conjugation by diag(g, g^{-T}).
template <RealField T>
GenStructure<T> gl_transform(const GenStructure<T>& s, const Mat<T>& g) {
  const std::size_t m = s.dim_v();
  auto ginv = inverse(g);
  if (g.rows() != m || !ginv) throw ParameterError("gl_transform: g must be invertible of size dim_v");
  const Mat<T> zero(m, m);
  Mat<T> conj_by = block2x2(g, zero, zero, Mat<T>(ginv->transpose()));
  Mat<T> conj_inv = block2x2(*ginv, zero, zero, g.transpose());
  Mat<T> out = conj_by * s.mat() * conj_inv;
  return s.is_verified() ? GenStructure<T>::verified(std::move(out)) : GenStructure<T>::candidate(std::move(out));
}

/// Structure on V₁ ⊕ V₂ from structures on each factor, in block order (V₁, V₂, V₁*, V₂*).
template <RealField T>
GenStructure<T> direct_sum(const GenStructure<T>& a, const GenStructure<T>& b) {
  const std::size_t m1 = a.dim_v(), m2 = b.dim_v(), m = m1 + m2;
  // position of each factor coordinate in the combined block order
  auto pos_a = [&](std::size_t i) { return i < m1 ? i : m + (i - m1); };
  auto pos_b = [&](std::size_t i) { return i < m2 ? m1 + i : m + m1 + (i - m2); };
  Mat<T> out(2 * m, 2 * m);
  for (std::size_t i = 0; i < 2 * m1; ++i)
    for (std::size_t j = 0; j < 2 * m1; ++j) out(pos_a(i), pos_a(j)) = a.mat()(i, j);
  for (std::size_t i = 0; i < 2 * m2; ++i)
    for (std::size_t j = 0; j < 2 * m2; ++j) out(pos_b(i), pos_b(j)) = b.mat()(i, j);
  return (a.is_verified() && b.is_verified()) ? GenStructure<T>::verified(std::move(out))
                                              : GenStructure<T>::candidate(std::move(out));
}

/// Type = m/2 − rank(P)/2 with P the Poisson block.
template <RealField T>
std::size_t type_of(const GenStructure<T>& s) {
  const std::size_t r = rank(s.poisson_block());
  const std::size_t m = s.dim_v();
  if (r > m) throw VerificationError("Poisson block rank exceeds dim V");
  return (m - r) / 2;
}

template <RealField T, RealField S>
GenStructure<T> convert(const GenStructure<S>& s) {
  Mat<T> m = convert<T>(s.mat());
  return s.is_verified() ? GenStructure<T>::verified(std::move(m)) : GenStructure<T>::candidate(std::move(m));
}

}  // namespace gencx
