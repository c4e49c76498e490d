#pragma once

// The flat-torus hypersymplectic family and the Kodaira–Thurston family on the
// cotangent double of H3 x R, with their verification reports.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gencx/hyper.hpp"
#include "gencx/lie.hpp"
#include "gencx/report.hpp"
#include "gencx/twistor.hpp"

namespace gencx {

// ---------------------------------------------------------------------------
// Torus: basis (e_1, f_1, e_2, f_2) of each block of four, n blocks.

template <RealField T>
struct TorusExample {
  std::vector<T> lambdas, mus;

  std::size_t n() const { return lambdas.size(); }
  std::size_t dim_v() const { return 4 * n(); }

  void validate() const {
    if (lambdas.empty()) throw ParameterError("torus: need at least one (lambda, mu) pair");
    if (lambdas.size() != mus.size()) throw ParameterError("torus: lambda and mu lists differ in length");
    for (std::size_t i = 0; i < n(); ++i)
      if (!is_zero(T(lambdas[i] * lambdas[i] + mus[i] * mus[i] - T(1))))
        throw ParameterError("torus: lambda_" + std::to_string(i + 1) + "^2 + mu_" + std::to_string(i + 1) +
                             "^2 != 1");
  }

  /// True when every block carries the same (λ, μ).
  bool equal_parameters() const {
    for (std::size_t i = 1; i < n(); ++i)
      if (!is_zero(T(lambdas[i] - lambdas[0])) || !is_zero(T(mus[i] - mus[0]))) return false;
    return true;
  }
};

template <RealField T>
struct TorusBuild {
  TwoForm<T> w1, w2, b;
  HypersymplecticData<T> data;
  SphereFamily<T> family;
  DoubleAlgebra<T> double_algebra;
};

namespace detail {

template <RealField T>
void add_wedge(Mat<T>& m, std::size_t i, std::size_t j, const T& coeff) {
  m(i, j) += coeff;
  m(j, i) -= coeff;
}

// The displayed 4×4 block [[0,0,−x,0],[0,0,0,−x],[x,0,0,0],[0,x,0,0]] repeated.
template <RealField T>
Mat<T> torus_block_display(const std::vector<T>& xs) {
  Mat<T> m(4 * xs.size(), 4 * xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::size_t o = 4 * i;
    m(o, o + 2) = -xs[i];
    m(o + 1, o + 3) = -xs[i];
    m(o + 2, o) = xs[i];
    m(o + 3, o + 1) = xs[i];
  }
  return m;
}

}  // namespace detail

/// ω₂ = Σ e^{2i−1}∧f^{2i−1} − e^{2i}∧f^{2i}, ω₁ = Σ λᵢ(e^{2i−1}∧f^{2i} + e^{2i}∧f^{2i−1}),
/// B the same with μᵢ; p = 0.
template <RealField T>
TorusBuild<T> build_torus(const TorusExample<T>& e) {
  e.validate();
  const std::size_t m = e.dim_v();
  Mat<T> w1(m, m), w2(m, m), b(m, m);
  for (std::size_t i = 0; i < e.n(); ++i) {
    const std::size_t o = 4 * i;  // e_{2i-1}, f_{2i-1}, e_{2i}, f_{2i}
    detail::add_wedge(w2, o, o + 1, T(1));
    detail::add_wedge(w2, o + 2, o + 3, T(-1));
    detail::add_wedge(w1, o, o + 3, e.lambdas[i]);
    detail::add_wedge(w1, o + 2, o + 1, e.lambdas[i]);
    detail::add_wedge(b, o, o + 3, e.mus[i]);
    detail::add_wedge(b, o + 2, o + 1, e.mus[i]);
  }
  TwoForm<T> tw1(w1), tw2(w2), tb(b);
  HypersymplecticData<T> data(tw1, tw2, tb, T(0));
  auto family = build_family(data.i1(), data.i2());
  return {tw1, tw2, tb, data, std::move(family), cotangent_double(LieAlgebra<T>::abelian(m))};
}

template <RealField T>
Mat<T> torus_a_display(const TorusExample<T>& e) {
  return detail::torus_block_display(e.mus);
}

template <RealField T>
Mat<T> torus_d_display(const TorusExample<T>& e) {
  return detail::torus_block_display(e.lambdas);
}

// ---------------------------------------------------------------------------
// Kodaira–Thurston. The displayed 8×8 arrays are read row-wise: row i lists the
// image of E_{i+1}, so the operator is the transpose of the array.

template <RealField T>
struct KodairaThurstonExample {
  T b1, b2;

  void validate() const {
    if (is_zero(b2)) throw ParameterError("kt: b2 must be nonzero");
  }
};

template <RealField T>
LieAlgebra<T> heisenberg_times_r() {
  return from_structure_equations<T>(4, parse_structure_equations<T>("d e0 = 0\nd e1 = 0\nd e2 = 0\nd e3 = - e1^e2", 4));
}

template <RealField T>
Mat<T> kt_i_display() {
  Mat<T> m(8, 8);
  m(0, 1) = -1;
  m(1, 0) = 1;
  m(2, 7) = 1;
  m(3, 6) = -1;
  m(4, 5) = -1;
  m(5, 4) = 1;
  m(6, 3) = 1;
  m(7, 2) = -1;
  return m;
}

template <RealField T>
Mat<T> kt_j_display(const T& b1, const T& b2) {
  const T t = T(3) / b2;
  const T z(0), o(1);
  return Mat<T>{
      {o, -o, z, z, z, z, b1, b2},
      {-o, -o, -b2, b1, z, z, z, z},
      {z, t, o, z, -b1, z, z, -o},
      {z, z, z, o, -b2, z, o, z},
      {z, z, z, t, -o, o, z, z},
      {z, z, z, z, o, o, -t, z},
      {z, z, z, o, z, b2, -o, z},
      {-t, z, -o, z, z, -b1, z, -o},
  };
}

/// The displayed array for the member (a, b, c) of the family.
template <RealField T>
Mat<T> kt_family_display(const T& a, const T& b, const T& c, const T& b1, const T& b2) {
  const T z(0);
  const T c2 = T(2) * c;
  return Mat<T>{
      {T(b + c2), T(-a - b + c2), T(c2 * b2), T(-c2 * b1), z, z, T(b * b1), T(b * b2)},
      {T(a - b + c2), T(-b - c2), T(-b * b2), T(b * b1), z, z, T(c2 * b1), T(c2 * b2)},
      {T(T(-6) * c / b2), T(T(3) * b / b2), T(b - c2), z, T(-b * b1), T(-c2 * b1), z, T(a - b - c2)},
      {z, z, z, T(b - c2), T(-b * b2), T(-c2 * b2), T(-a + b + c2), z},
      {z, z, z, T(T(3) * b / b2), T(-b - c2), T(-a + b - c2), T(T(6) * c / b2), z},
      {z, z, z, T(T(6) * c / b2), T(a + b - c2), T(b + c2), T(T(-3) * b / b2), z},
      {z, z, z, T(a + b + c2), T(-c2 * b2), T(b * b2), T(-b + c2), z},
      {T(T(-3) * b / b2), T(T(-6) * c / b2), T(-a - b - c2), z, T(c2 * b1), T(-b * b1), z, T(-b + c2)},
  };
}

template <RealField T>
struct KtBuild {
  DoubleAlgebra<T> double_algebra;
  GenStructure<T> i, j;  // candidates; verified in the report
  std::optional<SphereFamily<T>> family;
};

template <RealField T>
KtBuild<T> build_kt(const KodairaThurstonExample<T>& e) {
  e.validate();
  auto d = cotangent_double(heisenberg_times_r<T>());
  auto i = GenStructure<T>::candidate(kt_i_display<T>().transpose());
  auto j = GenStructure<T>::candidate(kt_j_display(e.b1, e.b2).transpose());
  std::optional<SphereFamily<T>> family;
  if (is_generalized_complex(i.mat()).ok() && is_generalized_complex(j.mat()).ok())
    family = build_family(GenStructure<T>::verified(i.mat()), GenStructure<T>::verified(j.mat()));
  return {std::move(d), std::move(i), std::move(j), std::move(family)};
}

// ---------------------------------------------------------------------------
// Reports.

namespace detail {

template <RealField T>
Json to_json_scalar(const T& x) {
  if constexpr (is_exact_v<T>) return to_string(x);
  else return x;
}

template <RealField T>
Json to_json_matrix(const Mat<T>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <RealField T>
void check_matrix_zero(Report& rep, const std::string& name, const Mat<T>& residual) {
  rep.check(name, is_zero(residual), max_abs(residual), first_nonzero_entry(residual));
}

template <RealField T>
void check_structure(Report& rep, const std::string& label, const Mat<T>& s) {
  const std::size_t n = s.rows();
  const auto q = PairingMatrix<T>::make(n / 2).q;
  check_matrix_zero(rep, label + "^2 = -Id", Mat<T>(s * s + Mat<T>::identity(n)));
  check_matrix_zero(rep, label + " orthogonal for the neutral pairing", Mat<T>(s.transpose() * q * s - q));
}

template <RealField T>
std::string nijenhuis_entries(const NijenhuisTensor<T>& n, std::size_t limit = 6) {
  std::string out;
  std::size_t shown = 0, total = 0;
  for (std::size_t u = 0; u < n.dim; ++u)
    for (std::size_t v = u + 1; v < n.dim; ++v)
      for (std::size_t w = v + 1; w < n.dim; ++w) {
        if (is_zero(n(u, v, w))) continue;
        ++total;
        if (shown < limit) {
          if (!out.empty()) out += "; ";
          out += "N(E" + std::to_string(u + 1) + ",E" + std::to_string(v + 1) + ",E" + std::to_string(w + 1) +
                 ") = " + to_string(n(u, v, w));
          ++shown;
        }
      }
  if (total > shown) out += "; ... " + std::to_string(total) + " nonzero entries";
  return out;
}

template <RealField T>
void check_integrable(Report& rep, const std::string& name, const DoubleAlgebra<T>& d, const GenStructure<T>& s) {
  try {
    auto n = nijenhuis(d, s);
    rep.check(name, n.vanishes(), n.max_abs(), nijenhuis_entries(n));
  } catch (const VerificationError& e) {
    rep.check(name, false, 0, e.what());
  }
}

template <RealField T>
void check_certificate(Report& rep, const DoubleAlgebra<T>& d, const SphereFamily<T>& f) {
  auto cert = polynomial_certificate(d, LambdaChart<T>{f});
  double worst = 0;
  for (const auto& e : cert.entries)
    for (const auto& c : e.coeffs) worst = std::max(worst, magnitude(c));
  rep.check("polynomial certificate vanishes", cert.all_zero(), worst,
            cert.all_zero() ? "" : std::to_string(cert.nonzero_count()) + " nonzero coefficients");
  rep.check("certificate reproduces N at the control point", cert.consistent());
  rep.data["certificate"] = Json{{"triples", cert.entries.size()},
                                 {"nodes", cert.nodes},
                                 {"control", cert.control},
                                 {"nonzero_coefficients", cert.nonzero_count()}};
}

inline Json typemap_summary(const TypeMap& tm) {
  Json counts = Json::object();
  for (std::size_t t = 0; t <= tm.dim_v / 2; ++t) counts[std::to_string(t)] = tm.count(t);
  return Json{{"samples", tm.samples.size()},
              {"min_type", tm.min_type()},
              {"max_type", tm.max_type()},
              {"type_counts", std::move(counts)}};
}

}  // namespace detail

template <RealField T>
Report verify_torus(const TorusExample<T>& e, std::size_t grid = 64) {
  auto tb = build_torus(e);
  const std::size_t m = e.dim_v();
  Report rep;
  rep.subject = "torus";
  rep.conventions = convention_block<T>();
  {
    Json ls = Json::array(), ms = Json::array();
    for (std::size_t i = 0; i < e.n(); ++i) {
      ls.push_back(detail::to_json_scalar(e.lambdas[i]));
      ms.push_back(detail::to_json_scalar(e.mus[i]));
    }
    rep.params = Json{{"n", e.n()}, {"lambda", ls}, {"mu", ms}, {"grid", grid}};
  }

  // B is closed automatically on the abelian algebra; checked anyway.
  rep.check("B closed", closed_2form_check(tb.double_algebra.base, tb.b));
  detail::check_matrix_zero(rep, "A = B w2^-1 matches display", Mat<T>(tb.data.a_mat() - torus_a_display(e)));
  detail::check_matrix_zero(rep, "D = w1 w2^-1 + p Id matches display", Mat<T>(tb.data.d_mat() - torus_d_display(e)));

  auto hs = check_hypersymplectic(tb.data);
  rep.check("A^2 + D^2 = (p^2 - 1) Id", hs.a2_plus_d2, hs.ad_residual);
  rep.check("AD = DA", hs.ad_commute, hs.ad_residual);
  rep.check("symplectic pair system", hs.system_verdict(), hs.system_residual);
  rep.check("verdicts agree", hs.verdicts_agree());
  rep.check("anticommutator is 2p Id with p = 0", is_zero(tb.family.p));

  detail::check_integrable(rep, "I integrable", tb.double_algebra, tb.family.i);
  detail::check_integrable(rep, "J' integrable", tb.double_algebra, tb.family.j);
  detail::check_certificate(rep, tb.double_algebra, tb.family);

  auto mt = detect_max_type(tb.data);
  auto tm = family_typemap(tb.family, grid);
  rep.data["typemap"] = detail::typemap_summary(tm);
  if (e.equal_parameters()) {
    rep.check("maximal type present (equal parameters)", mt.has_value() && mt->type * 2 == m);
    if (mt) {
      Json dir = Json::array();
      for (const auto& x : mt->direction) dir.push_back(detail::to_json_scalar(x));
      rep.data["max_type"] = Json{{"direction", dir}, {"unit_approx", mt->unit_approx}, {"type", mt->type}};
      if (mt->unit) {
        Json u = Json::array();
        for (const auto& x : *mt->unit) u.push_back(detail::to_json_scalar(x));
        rep.data["max_type"]["unit"] = u;
      }
      if (mt->holosymp) {
        const auto& h = *mt->holosymp;
        rep.data["max_type"]["gamma"] = detail::to_json_scalar(h.gamma);
        rep.data["max_type"]["theta"] = detail::to_json_scalar(h.theta);
        rep.check("(w2^-1 w1 + gamma Id)^2 = theta Id", h.equation_holds);
        rep.check("theta < 0", h.theta_negative);
      }
    }
  } else {
    rep.data["max_type"] = "none";
    rep.check("no maximal type", !mt.has_value());
    rep.check("max_type < " + std::to_string(m / 2), 2 * tm.max_type() < m);
  }
  rep.check("generic member of symplectic type", 2 * tm.count(0) > tm.samples.size(),
            0, std::to_string(tm.count(0)) + " of " + std::to_string(tm.samples.size()) + " samples have type 0");
  return rep;
}

template <RealField T>
Report verify_kt(const KodairaThurstonExample<T>& e, std::size_t grid = 16) {
  auto kb = build_kt(e);
  Report rep;
  rep.subject = "kt";
  rep.conventions = convention_block<T>();
  rep.conventions["kt_matrices"] = "row i of each displayed array is the image of E_{i+1} (operator = transpose)";
  rep.params = Json{{"b1", detail::to_json_scalar(e.b1)}, {"b2", detail::to_json_scalar(e.b2)}, {"grid", grid}};

  const Mat<T>& im = kb.i.mat();
  const Mat<T>& jm = kb.j.mat();
  detail::check_structure(rep, "I", im);
  detail::check_structure(rep, "J", jm);
  detail::check_matrix_zero(rep, "IJ + JI = 0", Mat<T>(im * jm + jm * im));
  detail::check_integrable(rep, "I integrable", kb.double_algebra, kb.i);
  detail::check_integrable(rep, "J integrable", kb.double_algebra, kb.j);
  rep.check("family built", kb.family.has_value());

  if (kb.family) {
    const auto& f = *kb.family;
    rep.check("member (0,1,0) equals J", evaluate(f, T(0), T(1), T(0)) == kb.j);
    detail::check_certificate(rep, kb.double_algebra, f);
    auto tm = family_typemap(f, grid);
    rep.data["typemap"] = detail::typemap_summary(tm);
    rep.check("all_types_equal_1", tm.min_type() == 1 && tm.max_type() == 1, 0,
              "types range over [" + std::to_string(tm.min_type()) + ", " + std::to_string(tm.max_type()) + "]");
  }

  // Audit: the literal column reading of the same arrays, and the displayed
  // family array against a I + b J + c K. Informational only.
  Json audit;
  {
    auto ic = GenStructure<T>::candidate(kt_i_display<T>());
    auto jc = GenStructure<T>::candidate(kt_j_display(e.b1, e.b2));
    Report col;
    detail::check_structure(col, "I", ic.mat());
    detail::check_structure(col, "J", jc.mat());
    detail::check_matrix_zero(col, "IJ + JI = 0", Mat<T>(ic.mat() * jc.mat() + jc.mat() * ic.mat()));
    detail::check_integrable(col, "I integrable", kb.double_algebra, ic);
    detail::check_integrable(col, "J integrable", kb.double_algebra, jc);
    Json failing = Json::array();
    for (const auto& a : col.assertions)
      if (!a.pass) failing.push_back(Json{{"name", a.name}, {"detail", a.detail}});
    audit["column_reading"] = Json{{"all_hold", col.passed()}, {"failures", failing}};
  }
  {
    const T z(0), o(1);
    auto pa = kt_family_display(o, z, z, e.b1, e.b2);
    auto pb = kt_family_display(z, o, z, e.b1, e.b2);
    auto pc = kt_family_display(z, z, o, e.b1, e.b2);
    auto compare = [&](const Mat<T>& i, const Mat<T>& j) {
      Mat<T> k = i * j;
      // Smallest-index nonzero entry of K fixes the only possible rescaling of c.
      std::optional<T> factor;
      for (std::size_t r = 0; r < 8 && !factor; ++r)
        for (std::size_t c = 0; c < 8 && !factor; ++c)
          if (!is_zero(k(r, c))) factor = pc(r, c) / k(r, c);
      bool a_ok = is_zero(Mat<T>(pa - i)), b_ok = is_zero(Mat<T>(pb - j));
      bool scaled = factor && is_zero(Mat<T>(pc - k * *factor));
      Json out{{"a_coefficient_matches", a_ok},
               {"b_coefficient_matches", b_ok},
               {"c_coefficient_matches_K", is_zero(Mat<T>(pc - k))},
               {"c_coefficient_residual", max_abs(Mat<T>(pc - k))}};
      out["c_coefficient_equals_multiple_of_K"] = scaled ? Json(detail::to_json_scalar(*factor)) : Json(nullptr);
      return out;
    };
    // As arrays (column reading) and as transposed operators (row reading).
    audit["family_display"] = Json{
        {"column_reading", compare(kt_i_display<T>(), kt_j_display(e.b1, e.b2))},
    };
    pa = pa.transpose();
    pb = pb.transpose();
    pc = pc.transpose();
    audit["family_display"]["row_reading"] = compare(im, jm);
  }
  rep.audit = std::move(audit);
  return rep;
}

/// Parameters by name: "lambda", "mu" for the torus; "b1", "b2" for kt.
template <RealField T>
using ExampleParams = std::map<std::string, std::vector<T>>;

template <RealField T>
Report verify_example(const std::string& name, const ExampleParams<T>& params, std::optional<std::size_t> grid = {}) {
  auto get = [&](const std::string& key) -> const std::vector<T>& {
    auto it = params.find(key);
    if (it == params.end()) throw ParameterError(name + ": missing parameter '" + key + "'");
    return it->second;
  };
  if (name == "torus") return verify_torus(TorusExample<T>{get("lambda"), get("mu")}, grid.value_or(64));
  if (name == "kt") {
    const auto& b1 = get("b1");
    const auto& b2 = get("b2");
    if (b1.size() != 1 || b2.size() != 1) throw ParameterError("kt: b1 and b2 take one value each");
    return verify_kt(KodairaThurstonExample<T>{b1[0], b2[0]}, grid.value_or(16));
  }
  throw ParameterError("unknown example '" + name + "'");
}

}  // namespace gencx
