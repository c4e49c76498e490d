#pragma once

// Named pass/fail assertions with residuals, assembled into a JSON report.

#include <string>
#include <vector>

#include <json.hpp>

#include "gencx/matrix.hpp"
#include "gencx/scalar.hpp"

namespace gencx {

using Json = nlohmann::ordered_json;

struct Assertion {
  std::string name;
  bool pass = false;
  double residual = 0;
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<Assertion> assertions;
  Json params = Json::object();
  Json data = Json::object();
  Json audit = Json::object();
  Json conventions = Json::object();

  void check(std::string name, bool pass, double residual = 0, std::string detail = {}) {
    assertions.push_back({std::move(name), pass, residual, std::move(detail)});
  }

  bool passed() const {
    for (const auto& a : assertions)
      if (!a.pass) return false;
    return true;
  }

  const Assertion* find(const std::string& name) const {
    for (const auto& a : assertions)
      if (a.name == name) return &a;
    return nullptr;
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& a : assertions)
      if (!a.pass) out.push_back(a.name);
    return out;
  }

  Json to_json() const {
    Json j;
    j["subject"] = subject;
    j["passed"] = passed();
    j["params"] = params;
    Json as = Json::array();
    for (const auto& a : assertions) {
      Json e{{"name", a.name}, {"pass", a.pass}, {"residual", a.residual}};
      if (!a.detail.empty()) e["detail"] = a.detail;
      as.push_back(std::move(e));
    }
    j["assertions"] = std::move(as);
    if (!data.empty()) j["data"] = data;
    if (!audit.empty()) j["audit"] = audit;
    j["conventions"] = conventions;
    return j;
  }
};

/// "(r, c) = value" for the first nonzero entry, or an empty string.
template <class F>
std::string first_nonzero_entry(const Mat<F>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) return "(" + std::to_string(r) + ", " + std::to_string(c) + ") = " + to_string(m(r, c));
  return {};
}

template <RealField T>
constexpr const char* mode_name() {
  return is_exact_v<T> ? "exact" : "float";
}

/// Conventions every report carries.
template <RealField T>
Json convention_block(bool s2_symplectic = false) {
  return Json{
      {"mode", mode_name<T>()},
      {"epsilon", tolerance()},
      {"block_order", "(V, V*), pairing <X+a, Y+b> = (a(Y) + b(X))/2"},
      {"complex_type", "from_complex(J) = diag(J, -J^T)"},
      {"symplectic_type", "from_symplectic(w) = [[0, -w^-1], [w, 0]]"},
      {"two_form_components", "b_ij = B(e_i, e_j)"},
      {"b_transform", "[[1,0],[B,1]] I [[1,0],[-B,1]]"},
      {"nijenhuis", "N(U,V,W) = <[IU,IV] - I[IU,V] - I[U,IV] - [U,V], W>"},
      {"s2_factor", s2_symplectic ? "symplectic (twistor type = fiber type)" : "complex (twistor type = fiber type + 1)"},
  };
}

}  // namespace gencx
