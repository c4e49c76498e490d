#pragma once

// Generalized hypercomplex families: two anticommuting-up-to-scalar
// structures 𝓘₁, 𝓘₂ span the sphere {a𝓘 + b𝓙′ + c𝓚}. Also the verifiers for
// the symplectic-pair (A/D) system, maximal-type detection and B-transformed
// holomorphic symplectic pairs.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "gencx/gcs.hpp"

namespace gencx {

/// How 𝓘₁𝓘₂ + 𝓘₂𝓘₁ compares with a scalar matrix.
template <RealField T>
struct AnticommutatorReport {
  bool is_scalar = false;     // anticommutator equals 2p·Id for some p
  bool in_range = false;      // |p| < 1
  std::optional<T> p;         // set whenever is_scalar
  double scalar_residual = 0; // max |{𝓘₁,𝓘₂} − 2p·Id|

  bool ok() const { return is_scalar && in_range; }
};

template <RealField T>
AnticommutatorReport<T> anticommutator_report(const GenStructure<T>& i1, const GenStructure<T>& i2) {
  if (i1.dim_v() != i2.dim_v()) throw DimensionError("anticommutator: dimension mismatch");
  const std::size_t n = i1.mat().rows();
  Mat<T> anti = i1.mat() * i2.mat() + i2.mat() * i1.mat();
  AnticommutatorReport<T> r;
  T p = anti(0, 0) / T(2);
  Mat<T> resid = anti - Mat<T>::identity(n) * T(T(2) * p);
  r.scalar_residual = max_abs(resid);
  r.is_scalar = is_zero(resid);
  if (r.is_scalar) {
    r.p = p;
    if constexpr (is_exact_v<T>) r.in_range = abs(p) < T(1);
    else r.in_range = std::abs(p) < 1 - tolerance();
  }
  return r;
}

/// p with 𝓘₁𝓘₂ + 𝓘₂𝓘₁ = 2p·Id and |p| < 1, or nullopt.
template <RealField T>
std::optional<T> anticommutator_scalar(const GenStructure<T>& i1, const GenStructure<T>& i2) {
  auto r = anticommutator_report(i1, i2);
  return r.ok() ? r.p : std::nullopt;
}

template <RealField T>
struct SphereFamily {
  GenStructure<T> i1, i2;  // inputs
  GenStructure<T> i, j, k; // orthonormal triple: 𝓘 = 𝓘₁, 𝓙′, 𝓚 = 𝓘𝓙′
  T p;

  std::size_t dim_v() const { return i.dim_v(); }
};

namespace detail {
template <RealField T>
bool anticommute(const Mat<T>& a, const Mat<T>& b) {
  return is_zero(Mat<T>(a * b + b * a));
}
}  // namespace detail

/// 𝓙′ = (𝓘₂ + p𝓘₁)/√(1−p²), 𝓚 = 𝓘₁𝓙′. In exact mode √(1−p²) must be rational.
template <RealField T>
SphereFamily<T> build_family(const GenStructure<T>& i1, const GenStructure<T>& i2) {
  if (i1.dim_v() != i2.dim_v()) throw DimensionError("build_family: dimension mismatch");
  if (i1.dim_v() % 4) throw DimensionError("build_family: dim V must be a multiple of 4");
  if (!i1.is_verified() || !i2.is_verified()) throw VerificationError("build_family: inputs must be verified structures");
  auto rep = anticommutator_report(i1, i2);
  if (!rep.is_scalar) throw VerificationError("build_family: anticommutator is not a scalar matrix");
  if (!rep.in_range) throw VerificationError("build_family: |p| >= 1");
  const T p = *rep.p;
  const T s = sqrt_field(T(T(1) - p * p));
  Mat<T> jm = (i2.mat() + i1.mat() * p) * T(T(1) / s);
  auto j = GenStructure<T>::verified(std::move(jm));
  auto k = GenStructure<T>::verified(i1.mat() * j.mat());
  if (!detail::anticommute(i1.mat(), j.mat()) || !detail::anticommute(i1.mat(), k.mat()) ||
      !detail::anticommute(j.mat(), k.mat()))
    throw VerificationError("build_family: orthonormalized triple does not anticommute");
  return {i1, i2, i1, std::move(j), std::move(k), p};
}

template <RealField T>
Mat<T> family_matrix(const SphereFamily<T>& f, const T& a, const T& b, const T& c) {
  return f.i.mat() * a + f.j.mat() * b + f.k.mat() * c;
}

template <RealField T>
GenStructure<T> evaluate(const SphereFamily<T>& f, const T& a, const T& b, const T& c) {
  T norm = a * a + b * b + c * c - T(1);
  if (!is_zero(norm)) throw ParameterError("evaluate: (a,b,c) is not a unit vector");
  return GenStructure<T>::verified(family_matrix(f, a, b, c));
}

template <RealField T, RealField S>
SphereFamily<T> convert(const SphereFamily<S>& f) {
  return {convert<T>(f.i1), convert<T>(f.i2), convert<T>(f.i), convert<T>(f.j), convert<T>(f.k), convert<T>(f.p)};
}

// ---------------------------------------------------------------------------
// Symplectic pairs: 𝓘₁ = from_symplectic(ω₁), 𝓘₂ = b_transform(from_symplectic(ω₂), B).

template <RealField T>
class HypersymplecticData {
 public:
  HypersymplecticData(TwoForm<T> w1, TwoForm<T> w2, TwoForm<T> b, T p)
      : w1_(std::move(w1)), w2_(std::move(w2)), b_(std::move(b)), p_(std::move(p)) {
    const std::size_t m = w1_.dim_v();
    if (w2_.dim_v() != m || b_.dim_v() != m) throw DimensionError("hypersymplectic data: dimension mismatch");
    auto inv2 = inverse(w2_.matrix());
    auto inv1 = inverse(w1_.matrix());
    if (!inv2 || !inv1) throw ParameterError("hypersymplectic data: omega_1 and omega_2 must be invertible");
    w1inv_ = *inv1;
    w2inv_ = *inv2;
  }

  const TwoForm<T>& w1() const { return w1_; }
  const TwoForm<T>& w2() const { return w2_; }
  const TwoForm<T>& b() const { return b_; }
  const T& p() const { return p_; }
  const Mat<T>& w1_inverse() const { return w1inv_; }
  const Mat<T>& w2_inverse() const { return w2inv_; }
  std::size_t dim_v() const { return w1_.dim_v(); }

  Mat<T> a_mat() const { return b_.matrix() * w2inv_; }
  Mat<T> d_mat() const { return w1_.matrix() * w2inv_ + Mat<T>::identity(dim_v()) * p_; }

  GenStructure<T> i1() const { return from_symplectic(w1_); }
  GenStructure<T> i2() const { return b_transform(from_symplectic(w2_), b_); }

 private:
  TwoForm<T> w1_, w2_, b_;
  T p_;
  Mat<T> w1inv_, w2inv_;
};

struct HypersymplecticReport {
  bool a2_plus_d2 = false;  // A² + D² = (p² − 1)Id
  bool ad_commute = false;  // AD = DA
  std::array<bool, 4> system{};
  bool anticommutator = false;  // 𝓘₁𝓘₂ + 𝓘₂𝓘₁ = 2p·Id computed directly
  double ad_residual = 0;
  double system_residual = 0;

  bool ad_verdict() const { return a2_plus_d2 && ad_commute; }
  bool system_verdict() const { return system[0] && system[1] && system[2] && system[3]; }
  bool verdicts_agree() const { return ad_verdict() == system_verdict() && system_verdict() == anticommutator; }
};

template <RealField T>
HypersymplecticReport check_hypersymplectic(const HypersymplecticData<T>& h) {
  const std::size_t m = h.dim_v();
  const auto id = Mat<T>::identity(m);
  const Mat<T>& w1 = h.w1().matrix();
  const Mat<T>& w2 = h.w2().matrix();
  const Mat<T>& b = h.b().matrix();
  const Mat<T>& w1i = h.w1_inverse();
  const Mat<T>& w2i = h.w2_inverse();
  const T& p = h.p();
  HypersymplecticReport r;

  Mat<T> a = h.a_mat(), d = h.d_mat();
  Mat<T> e1 = a * a + d * d - id * T(p * p - T(1));
  Mat<T> e2 = a * d - d * a;
  r.a2_plus_d2 = is_zero(e1);
  r.ad_commute = is_zero(e2);
  r.ad_residual = std::max(max_abs(e1), max_abs(e2));

  const Mat<T> two_p = id * T(T(2) * p);
  std::array<Mat<T>, 4> sys{
      Mat<T>(w2i * w1 + w1i * w2 + w1i * b * w2i * b + two_p),
      Mat<T>(w1 * w2i + w2 * w1i + b * w2i * b * w1i + two_p),
      Mat<T>(w1i * b * w2i - w2i * b * w1i),
      Mat<T>(w1 * w2i * b - b * w2i * w1),
  };
  for (std::size_t k = 0; k < 4; ++k) {
    r.system[k] = is_zero(sys[k]);
    r.system_residual = std::max(r.system_residual, max_abs(sys[k]));
  }

  auto rep = anticommutator_report(h.i1(), h.i2());
  r.anticommutator = rep.is_scalar && rep.p && is_zero(T(*rep.p - p));
  return r;
}

/// Solution data for cB = aω₂ + bω₁ (coefficients of 𝓘₁, 𝓘₂ and B).
template <RealField T>
struct HolosympData {
  T alpha, beta, gamma, theta;
  bool equation_holds = false;  // (ω₂⁻¹ω₁ + γId)² = θId
  bool theta_negative = false;
};

template <RealField T>
struct MaxTypeResult {
  std::array<T, 3> eq2;                     // (a, b, c) solving cB = aω₂ + bω₁
  std::array<T, 3> direction;               // same member in (𝓘, 𝓙′, 𝓚) coordinates, not normalized
  std::optional<std::array<T, 3>> unit;     // normalized when the norm is a square in T
  std::array<double, 3> unit_approx{};      // always available
  std::size_t type = 0;                     // post-verified with type_of
  std::optional<HolosympData<T>> holosymp;  // when c ≠ 0
};

/// Searches the family of a symplectic pair for a member of maximal type by
/// solving the projective linear condition cB = aω₂ + bω₁, then confirms the
/// candidate with type_of. Returns nullopt when no solution is maximal.
template <RealField T>
std::optional<MaxTypeResult<T>> detect_max_type(const HypersymplecticData<T>& h) {
  const std::size_t m = h.dim_v();
  auto family = build_family(h.i1(), h.i2());
  const T p = family.p;
  const T s = sqrt_field(T(T(1) - p * p));

  Mat<T> sys(m * m, 3);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      sys(i * m + j, 0) = h.w2().matrix()(i, j);
      sys(i * m + j, 1) = h.w1().matrix()(i, j);
      sys(i * m + j, 2) = -h.b().matrix()(i, j);
    }
  for (const auto& sol : nullspace(sys)) {
    // The Poisson block of a𝓘₁ + b𝓘₂ + c̃𝓚 is −aω₁⁻¹ − bω₂⁻¹ + (c̃/s)ω₁⁻¹Bω₂⁻¹, so
    // c̃ = c·s; then 𝓘₂ = s𝓙′ − p𝓘 rewrites the member in (𝓘, 𝓙′, 𝓚).
    const T &a = sol[0], &b = sol[1], &c = sol[2];
    std::array<T, 3> dir{T(a - b * p), T(b * s), T(c * s)};
    // Keep the sign convention "first nonzero coordinate positive".
    for (const auto& x : dir)
      if (!is_zero(x)) {
        if (x < T(0))
          for (auto& y : dir) y = -y;
        break;
      }
    auto member = GenStructure<T>::candidate(family_matrix(family, dir[0], dir[1], dir[2]));
    if (type_of(member) * 2 != m) continue;

    MaxTypeResult<T> res{{a, b, c}, dir, std::nullopt, {}, m / 2, std::nullopt};
    T norm2 = dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2];
    double nd = std::sqrt(to_double(norm2));
    for (std::size_t k = 0; k < 3; ++k) res.unit_approx[k] = to_double(dir[k]) / nd;
    std::optional<T> norm;
    if constexpr (is_exact_v<T>) norm = sqrt_exact(norm2);
    else norm = std::sqrt(norm2);
    if (norm) {
      res.unit = std::array<T, 3>{T(dir[0] / *norm), T(dir[1] / *norm), T(dir[2] / *norm)};
      auto unit_member = evaluate(family, (*res.unit)[0], (*res.unit)[1], (*res.unit)[2]);
      res.type = type_of(unit_member);
      if (res.type * 2 != m) throw VerificationError("detect_max_type: normalized member lost maximal type");
    }

    if (!is_zero(c)) {
      HolosympData<T> hs;
      hs.alpha = b / c;
      hs.beta = a / c;
      hs.gamma = (hs.alpha * hs.beta + p) / (hs.alpha * hs.alpha + T(1));
      hs.theta = hs.gamma * hs.gamma - (T(1) + hs.beta * hs.beta) / (T(1) + hs.alpha * hs.alpha);
      Mat<T> x = h.w2_inverse() * h.w1().matrix() + Mat<T>::identity(m) * hs.gamma;
      hs.equation_holds = is_zero(Mat<T>(x * x - Mat<T>::identity(m) * hs.theta));
      hs.theta_negative = hs.theta < T(0) && !is_zero(hs.theta);
      res.holosymp = hs;
    }
    return res;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 𝓘₁ = from_complex(J), 𝓘₂ = b_transform(from_symplectic(ω), B).

template <RealField T>
struct BHolosympReport {
  std::array<bool, 4> system{};  // the four equations of the anticommutation system
  bool reduced = false;          // J*B + BJ = 2pω
  std::optional<T> p;            // read off the third equation
  bool anticommutator = false;   // direct 𝓘₁𝓘₂ + 𝓘₂𝓘₁ = 2p·Id
  std::size_t k_rank = 0;        // rank of the upper-right block of [𝓘₁, 𝓘₂]
  bool k_maximal = false;

  bool all_hold() const { return system[0] && system[1] && system[2] && system[3] && reduced && anticommutator; }
  bool b_transformed_holomorphic_symplectic() const { return all_hold() && k_maximal; }
  std::vector<std::string> failures() const {
    static const char* names[] = {"omega J = J* omega", "second equation", "J w^-1 B + w^-1 B J = 2p Id",
                                  "J* B w^-1 + B w^-1 J* = 2p Id"};
    std::vector<std::string> out;
    for (std::size_t k = 0; k < 4; ++k)
      if (!system[k]) out.emplace_back(names[k]);
    if (!reduced) out.emplace_back("J* B + B J = 2p omega");
    if (!anticommutator) out.emplace_back("anticommutator is 2p Id");
    if (!k_maximal) out.emplace_back("rank of K upper-right block is maximal");
    return out;
  }
};

template <RealField T>
BHolosympReport<T> check_b_holosymplectic(const Mat<T>& j, const TwoForm<T>& w, const TwoForm<T>& b) {
  const std::size_t m = j.rows();
  if (!j.is_square() || w.dim_v() != m || b.dim_v() != m) throw DimensionError("check_b_holosymplectic: dimension mismatch");
  const auto id = Mat<T>::identity(m);
  if (!is_zero(Mat<T>(j * j + id))) throw ParameterError("check_b_holosymplectic: J does not square to -Id");
  auto wi_opt = inverse(w.matrix());
  if (!wi_opt) throw ParameterError("check_b_holosymplectic: omega is degenerate");
  const Mat<T>& wm = w.matrix();
  const Mat<T>& bm = b.matrix();
  const Mat<T>& wi = *wi_opt;
  const Mat<T> js = j.transpose();

  BHolosympReport<T> r;
  Mat<T> e3 = j * wi * bm + wi * bm * j;
  T p = e3(0, 0) / T(2);
  const Mat<T> two_p = id * T(T(2) * p);
  r.system[0] = is_zero(Mat<T>(wm * j - js * wm));
  r.system[1] = is_zero(Mat<T>(wm * j - js * wm + bm * wi * bm * j - js * bm * wi * bm));
  r.system[2] = is_zero(Mat<T>(e3 - two_p));
  r.system[3] = is_zero(Mat<T>(js * bm * wi + bm * wi * js - two_p));
  if (r.system[2]) r.p = p;
  r.reduced = r.system[2] && is_zero(Mat<T>(js * bm + bm * j - wm * T(T(2) * p)));

  auto i1 = from_complex(j);
  auto i2 = b_transform(from_symplectic(w), b);
  auto rep = anticommutator_report(i1, i2);
  r.anticommutator = rep.is_scalar && r.p && is_zero(T(*rep.p - p)) && rep.in_range;
  Mat<T> comm = i1.mat() * i2.mat() - i2.mat() * i1.mat();
  r.k_rank = rank(comm.block(0, m, m, m));
  r.k_maximal = r.k_rank == m;
  return r;
}

// ---------------------------------------------------------------------------
// Type maps over the sphere.

struct TypeSample {
  double a = 0, b = 0, c = 0;
  std::size_t type = 0;
  bool exact = false;  // computed in exact arithmetic
};

struct TypeMap {
  std::size_t dim_v = 0;
  std::vector<TypeSample> samples;

  std::size_t min_type() const {
    std::size_t t = samples.empty() ? 0 : samples.front().type;
    for (const auto& s : samples) t = std::min(t, s.type);
    return t;
  }
  std::size_t max_type() const {
    std::size_t t = 0;
    for (const auto& s : samples) t = std::max(t, s.type);
    return t;
  }
  std::size_t count(std::size_t type) const {
    std::size_t n = 0;
    for (const auto& s : samples) n += s.type == type;
    return n;
  }
};

/// Unit vectors of the sample: the six axis points, then a Fibonacci sphere
/// of grid² points.
inline std::vector<std::array<double, 3>> sphere_samples(std::size_t grid) {
  if (grid < 2) throw ParameterError("grid must be at least 2");
  std::vector<std::array<double, 3>> pts{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  const std::size_t n = grid * grid;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < n; ++k) {
    double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = golden * static_cast<double>(k);
    pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return pts;
}

/// Type of every sample point. Axis points are evaluated in the family's own
/// field (exactly for rational families); the rest in double with ε.
template <RealField T>
TypeMap family_typemap(const SphereFamily<T>& f, std::size_t grid) {
  auto pts = sphere_samples(grid);
  TypeMap out{f.dim_v(), {}};
  out.samples.reserve(pts.size());
  auto ff = convert<double>(f);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto& [a, b, c] = pts[k];
    TypeSample s{a, b, c, 0, false};
    if (k < 6) {
      s.type = type_of(evaluate(f, T(static_cast<int>(a)), T(static_cast<int>(b)), T(static_cast<int>(c))));
      s.exact = is_exact_v<T>;
    } else {
      s.type = type_of(evaluate(ff, a, b, c));
    }
    out.samples.push_back(s);
  }
  return out;
}

}  // namespace gencx
