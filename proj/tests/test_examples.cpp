#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace gencx;
using namespace gencx::testing;

namespace {

bool passes(const Report& r, const std::string& name) {
  const auto* a = r.find(name);
  return a && a->pass;
}

}  // namespace

TEST_CASE("torus report with distinct parameters") {
  auto r = verify_example<R>("torus", {{"lambda", {q("3/5"), R(1)}}, {"mu", {q("4/5"), R(0)}}}, 16);
  INFO(r.to_json().dump(2));
  CHECK(r.passed());
  CHECK(passes(r, "max_type < 4"));
  CHECK(passes(r, "no maximal type"));
  CHECK(passes(r, "A^2 + D^2 = (p^2 - 1) Id"));
  CHECK(passes(r, "verdicts agree"));
  CHECK(passes(r, "polynomial certificate vanishes"));
  CHECK(r.data["max_type"] == "none");
  CHECK(r.conventions["mode"] == "exact");
}

TEST_CASE("torus report with equal parameters") {
  auto r = verify_torus(TorusExample<R>{{q("3/5"), q("3/5")}, {q("4/5"), q("4/5")}}, 8);
  INFO(r.to_json().dump(2));
  CHECK(r.passed());
  CHECK(passes(r, "maximal type present (equal parameters)"));
  CHECK(passes(r, "theta < 0"));
  CHECK(r.data["max_type"]["theta"] == "-9/25");
  CHECK(r.data["max_type"]["unit"] == Json::array({"0", "4/5", "3/5"}));
}

TEST_CASE("torus parameters are validated") {
  CHECK_THROWS_AS(verify_example<R>("torus", {{"lambda", {R(1), R(1)}}, {"mu", {R(1), R(0)}}}), ParameterError);
  CHECK_THROWS_AS(verify_example<R>("torus", {{"lambda", {R(1)}}}), ParameterError);
}

TEST_CASE("Kodaira-Thurston report") {
  for (auto [b1, b2] : {std::pair{0, 1}, std::pair{1, 2}}) {
    auto r = verify_example<R>("kt", {{"b1", {R(b1)}}, {"b2", {R(b2)}}});
    INFO(r.to_json().dump(2));
    CHECK(r.passed());
    for (const char* name : {"I^2 = -Id", "J^2 = -Id", "IJ + JI = 0", "I orthogonal for the neutral pairing",
                             "J orthogonal for the neutral pairing", "I integrable", "J integrable", "family built",
                             "member (0,1,0) equals J", "all_types_equal_1", "polynomial certificate vanishes"})
      CHECK(passes(r, name));
    const auto& col = r.audit["column_reading"];
    CHECK(col["all_hold"] == (b1 == 0));
    const auto& fam = r.audit["family_display"]["column_reading"];
    CHECK(fam["a_coefficient_matches"] == true);
    CHECK(fam["b_coefficient_matches"] == true);
    CHECK(fam["c_coefficient_matches_K"] == false);
    CHECK(fam["c_coefficient_equals_multiple_of_K"] == "2");
  }
  // Under the column reading with b1 ≠ 0, only the integrability of J fails.
  auto r = verify_kt(KodairaThurstonExample<R>{R(1), R(2)});
  const auto& failures = r.audit["column_reading"]["failures"];
  REQUIRE(failures.size() == 1);
  CHECK(failures[0]["name"] == "J integrable");
  CHECK(failures[0]["detail"].get<std::string>().find("N(E") != std::string::npos);

  CHECK_THROWS_AS(verify_example<R>("kt", {{"b1", {R(0)}}, {"b2", {R(0)}}}), ParameterError);
  CHECK_THROWS_AS(verify_example<R>("klein", {}), ParameterError);
}

TEST_CASE("float mode reports") {
  auto r = verify_example<double>("kt", {{"b1", {0.5}}, {"b2", {-3.0}}});
  CHECK(r.passed());
  CHECK(r.conventions["mode"] == "float");
  auto t = verify_example<double>("torus", {{"lambda", {0.6, 1.0}}, {"mu", {0.8, 0.0}}}, 8);
  CHECK(t.passed());
}
