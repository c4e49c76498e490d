#pragma once

// JSON and CSV encodings of structures, forms, algebras, type maps and
// twistor reports. Exact scalars are written as "p/q" strings; on input,
// strings, integers and decimal numbers are all accepted.

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "gencx/gcs.hpp"
#include "gencx/hyper.hpp"
#include "gencx/lie.hpp"
#include "gencx/report.hpp"
#include "gencx/spinor.hpp"
#include "gencx/twistor.hpp"

namespace gencx {

// ---------------------------------------------------------------------------
// Scalars and matrices.

/// A JSON number or string as an exact rational. Floating-point numbers are
/// read through their shortest round-trip decimal, so 0.6 means 3/5.
inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
  if (j.is_number_float()) {
    double d = j.get<double>();
    if (!std::isfinite(d)) throw ParseError("non-finite number");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, d);
    std::string s(buf, res.ptr);
    if (s.find_first_of("eE") != std::string::npos) return Rational(d);
    return parse_rational(s);
  }
  throw ParseError("expected a number or a rational string, got " + std::string(j.type_name()));
}

template <RealField T>
T scalar_from_json(const Json& j) {
  if constexpr (is_exact_v<T>) {
    return rational_from_json(j);
  } else {
    if (j.is_number()) return j.get<double>();
    return to_double(rational_from_json(j));
  }
}

template <RealField T>
Json scalar_to_json(const T& x) {
  if constexpr (is_exact_v<T>) return to_string(x);
  else return x;
}

template <RealField T>
Mat<T> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ParseError("expected " + std::to_string(rows) + " matrix rows");
  Mat<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json<T>(row[c]);
  }
  return m;
}

template <RealField T>
Json matrix_to_json(const Mat<T>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t require_size(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Structures and forms: {"dim_v": m, "entries": [[...], ...]}.

/// Reads a structure matrix without verifying it.
template <RealField T>
GenStructure<T> structure_from_json(const Json& j) {
  const std::size_t m = detail::require_size(j, "dim_v");
  return GenStructure<T>::candidate(matrix_from_json<T>(detail::require(j, "entries"), 2 * m, 2 * m));
}

template <RealField T>
Json to_json(const GenStructure<T>& s) {
  return Json{{"dim_v", s.dim_v()}, {"entries", matrix_to_json(s.mat())}};
}

template <RealField T>
TwoForm<T> two_form_from_json(const Json& j) {
  const std::size_t m = detail::require_size(j, "dim_v");
  try {
    return TwoForm<T>(matrix_from_json<T>(detail::require(j, "entries"), m, m));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

template <RealField T>
Json to_json(const TwoForm<T>& b) {
  return Json{{"dim_v", b.dim_v()}, {"entries", matrix_to_json(b.matrix())}};
}

template <RealField T>
Bivector<T> bivector_from_json(const Json& j) {
  const std::size_t m = detail::require_size(j, "dim_v");
  try {
    return Bivector<T>(matrix_from_json<T>(detail::require(j, "entries"), m, m));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

template <RealField T>
Json to_json(const Bivector<T>& b) {
  return Json{{"dim_v", b.dim_v()}, {"entries", matrix_to_json(b.matrix())}};
}

// ---------------------------------------------------------------------------
// Mixed forms: {"dim_v": m, "terms": [{"subset": [1, 3], "re": .., "im": ..}]},
// subsets 1-based.

template <RealField T>
MixedForm<T> mixed_form_from_json(const Json& j) {
  const std::size_t m = detail::require_size(j, "dim_v");
  MixedForm<T> f(m);
  for (const auto& term : detail::require(j, "terms")) {
    std::uint32_t mask = 0;
    for (const auto& idx : detail::require(term, "subset")) {
      if (!idx.is_number_integer()) throw ParseError("subset entries must be integers");
      long long k = idx.get<long long>();
      if (k < 1 || static_cast<std::size_t>(k) > m) throw ParseError("subset index out of range");
      std::uint32_t bit = std::uint32_t{1} << (k - 1);
      if (mask & bit) throw ParseError("repeated index in subset");
      mask |= bit;
    }
    T re = term.contains("re") ? scalar_from_json<T>(term["re"]) : T(0);
    T im = term.contains("im") ? scalar_from_json<T>(term["im"]) : T(0);
    f.at(mask) += Complex<T>(re, im);
  }
  return f;
}

template <RealField T>
Json to_json(const MixedForm<T>& f) {
  Json terms = Json::array();
  // Ordered by degree, then by subset bits, for a stable listing.
  for (std::size_t deg = 0; deg <= f.dim_v(); ++deg)
    for (std::uint32_t mask = 0; mask < f.size(); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != deg || is_zero(f[mask])) continue;
      Json subset = Json::array();
      for (std::size_t k = 0; k < f.dim_v(); ++k)
        if (mask >> k & 1u) subset.push_back(k + 1);
      terms.push_back(Json{{"subset", subset}, {"re", scalar_to_json(f[mask].re)}, {"im", scalar_to_json(f[mask].im)}});
    }
  return Json{{"dim_v", f.dim_v()}, {"terms", terms}};
}

// ---------------------------------------------------------------------------
// Lie algebras: {"dim": n, "brackets": [{"i": a, "j": b, "result": [{"k": c, "coeff": s}]}]}
// with 0-based indices, or {"dim": n, "equations": "d e3 = - e1^e2", "index_base": 0}.

template <RealField T>
LieAlgebra<T> lie_algebra_from_json(const Json& j) {
  const std::size_t n = detail::require_size(j, "dim");
  if (j.contains("equations")) {
    const Json& eq = j["equations"];
    std::string text;
    if (eq.is_string()) {
      text = eq.get<std::string>();
    } else if (eq.is_array()) {
      for (const auto& line : eq) text += line.get<std::string>() + "\n";
    } else {
      throw ParseError("'equations' must be a string or an array of strings");
    }
    std::size_t base = j.contains("index_base") ? detail::require_size(j, "index_base") : 0;
    try {
      return from_structure_equations<T>(n, parse_structure_equations<T>(text, n, base));
    } catch (const ParameterError& e) {
      throw ParseError(e.what());
    }
  }
  std::vector<T> c(n * n * n, T(0));
  std::vector<bool> seen(n * n, false);
  for (const auto& br : detail::require(j, "brackets")) {
    std::size_t a = detail::require_size(br, "i"), b = detail::require_size(br, "j");
    if (a >= n || b >= n) throw ParseError("bracket index out of range");
    if (a == b) throw ParseError("bracket of a basis vector with itself is zero and cannot be listed");
    if (seen[a * n + b] || seen[b * n + a]) throw ParseError("bracket listed twice");
    seen[a * n + b] = true;
    for (const auto& term : detail::require(br, "result")) {
      std::size_t k = detail::require_size(term, "k");
      if (k >= n) throw ParseError("bracket result index out of range");
      T coeff = scalar_from_json<T>(detail::require(term, "coeff"));
      c[(k * n + a) * n + b] += coeff;
      c[(k * n + b) * n + a] -= coeff;
    }
  }
  return LieAlgebra<T>::from_constants(n, std::move(c));
}

template <RealField T>
Json to_json(const LieAlgebra<T>& g) {
  const std::size_t n = g.dim();
  Json brackets = Json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Json result = Json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(g.constant(k, a, b))) result.push_back(Json{{"k", k}, {"coeff", scalar_to_json(g.constant(k, a, b))}});
      if (!result.empty()) brackets.push_back(Json{{"i", a}, {"j", b}, {"result", result}});
    }
  return Json{{"dim", n}, {"brackets", brackets}};
}

/// Structure-equation text "d e3 = - e1^e2", one line per nonzero de^k, 0-based.
template <RealField T>
std::string structure_equations_text(const LieAlgebra<T>& g) {
  const std::size_t n = g.dim();
  std::ostringstream out;
  for (std::size_t k = 0; k < n; ++k) {
    std::string rhs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        T b = -g.constant(k, i, j);  // de^k = −Σ c^k_ij e^i∧e^j
        if (is_zero(b)) continue;
        bool neg = b < T(0);
        T mag = neg ? T(-b) : b;
        rhs += rhs.empty() ? (neg ? "- " : "") : (neg ? " - " : " + ");
        if (!is_zero(T(mag - T(1)))) rhs += to_string(mag) + " ";
        rhs += "e" + std::to_string(i) + "^e" + std::to_string(j);
      }
    if (!rhs.empty()) out << "d e" << k << " = " << rhs << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Type maps and twistor reports.

inline std::string format_coordinate(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

inline std::string typemap_csv(const TypeMap& tm) {
  std::string out = "a,b,c,type\n";
  for (const auto& s : tm.samples)
    out += format_coordinate(s.a) + "," + format_coordinate(s.b) + "," + format_coordinate(s.c) + "," +
           std::to_string(s.type) + "\n";
  return out;
}

inline Json to_json(const TypeMap& tm) {
  Json samples = Json::array();
  for (const auto& s : tm.samples)
    samples.push_back(Json{{"a", s.a}, {"b", s.b}, {"c", s.c}, {"type", s.type}, {"exact", s.exact}});
  Json counts = Json::object();
  for (std::size_t t = 0; t <= tm.dim_v / 2; ++t) counts[std::to_string(t)] = tm.count(t);
  return Json{{"dim_v", tm.dim_v},
              {"samples", samples},
              {"summary", {{"min_type", tm.min_type()}, {"max_type", tm.max_type()}, {"type_counts", counts}}}};
}

inline std::string twistor_csv(const TwistorReport& r) {
  std::string out = "a,b,c,fiber_type,twistor_type\n";
  for (const auto& s : r.samples)
    out += format_coordinate(s.a) + "," + format_coordinate(s.b) + "," + format_coordinate(s.c) + "," +
           std::to_string(s.fiber_type) + "," + std::to_string(s.twistor_type) + "\n";
  return out;
}

inline Json to_json(const TwistorReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back(Json{{"a", s.a}, {"b", s.b}, {"c", s.c}, {"fiber_type", s.fiber_type}, {"twistor_type", s.twistor_type}});
  return Json{{"samples", samples},
              {"summary",
               {{"min_twistor_type", r.min_twistor_type},
                {"max_twistor_type", r.max_twistor_type},
                {"regime", r.regime},
                {"min_fiber_type", r.min_fiber_type},
                {"max_fiber_type", r.max_fiber_type},
                {"dim_v", r.dim_v},
                {"twistor_type_rule", r.s2_symplectic ? "fiber type + 0" : "fiber type + 1"}}}};
}

// ---------------------------------------------------------------------------
// Bundles.
//
// verify:  {"structure": S, "pair": [S1, S2], "algebra": G}; every key optional
//          but at least one of "structure" and "pair" required. Structures act
//          on g ⊕ g* where g is the algebra (abelian when absent).
// typemap: {"pair": [S1, S2]} or {"family": {"i1": S1, "i2": S2}}.

template <RealField T>
struct Bundle {
  std::optional<GenStructure<T>> structure;
  std::optional<std::pair<GenStructure<T>, GenStructure<T>>> pair;
  std::optional<LieAlgebra<T>> algebra;
};

template <RealField T>
Bundle<T> bundle_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("bundle must be a JSON object");
  Bundle<T> b;
  if (j.contains("structure")) b.structure = structure_from_json<T>(j["structure"]);
  const Json* pj = nullptr;
  Json pair_storage;
  if (j.contains("pair")) {
    pj = &j["pair"];
  } else if (j.contains("family")) {
    const Json& f = j["family"];
    pair_storage = Json::array({detail::require(f, "i1"), detail::require(f, "i2")});
    pj = &pair_storage;
  }
  if (pj) {
    if (!pj->is_array() || pj->size() != 2) throw ParseError("'pair' must list exactly two structures");
    b.pair.emplace(structure_from_json<T>((*pj)[0]), structure_from_json<T>((*pj)[1]));
  }
  if (j.contains("algebra")) b.algebra = lie_algebra_from_json<T>(j["algebra"]);
  if (!b.structure && !b.pair) throw ParseError("bundle needs a 'structure' or a 'pair'");
  return b;
}

/// Checks every item of a bundle; the report fails if any check fails.
template <RealField T>
Report verify_bundle(const Bundle<T>& b) {
  Report rep;
  rep.subject = "verify";
  rep.conventions = convention_block<T>();

  std::optional<std::size_t> dim;
  auto note_dim = [&](std::size_t m) {
    if (dim && *dim != m) throw DimensionError("bundle items act on different spaces");
    dim = m;
  };
  if (b.structure) note_dim(b.structure->dim_v());
  if (b.pair) {
    note_dim(b.pair->first.dim_v());
    note_dim(b.pair->second.dim_v());
  }
  std::optional<DoubleAlgebra<T>> dbl;
  if (b.algebra) {
    if (b.algebra->dim() != *dim) throw DimensionError("algebra dimension does not match the structures");
    dbl = cotangent_double(*b.algebra);
  }

  auto check_one = [&](const std::string& label, const GenStructure<T>& s) {
    auto r = is_generalized_complex(s.mat());
    rep.check(label + ": square", r.squares_to_minus_id, r.square_residual,
              r.squares_to_minus_id ? "" : "square check failed");
    rep.check(label + ": orthogonality", r.orthogonal, r.orthogonality_residual,
              r.orthogonal ? "" : "pairing orthogonality failed");
    if (!r.ok()) return;
    rep.data[label] = Json{{"type", type_of(s)}};
    if (dbl) {
      auto n = nijenhuis(*dbl, s);
      rep.check(label + ": integrable", n.vanishes(), n.max_abs());
    }
  };
  if (b.structure) check_one("structure", *b.structure);
  if (b.pair) {
    check_one("pair[0]", b.pair->first);
    check_one("pair[1]", b.pair->second);
    auto ar = anticommutator_report(b.pair->first, b.pair->second);
    std::string detail;
    if (!ar.is_scalar) detail = "anticommutator is not a scalar matrix";
    else if (!ar.in_range) detail = "|p| >= 1";
    rep.check("pair: anticommutator 2p Id with |p| < 1", ar.ok(), ar.scalar_residual, detail);
    if (ar.p) rep.data["pair"] = Json{{"p", scalar_to_json(*ar.p)}};
  }
  return rep;
}

}  // namespace gencx
