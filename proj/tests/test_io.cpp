#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace gencx;
using namespace gencx::testing;

TEST_CASE("scalars from JSON") {
  CHECK(rational_from_json(Json("3/5")) == q("3/5"));
  CHECK(rational_from_json(Json(-4)) == R(-4));
  CHECK(rational_from_json(Json(0.6)) == q("3/5"));
  CHECK(rational_from_json(Json("-1.25")) == q("-5/4"));
  CHECK(scalar_from_json<double>(Json("1/4")) == 0.25);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json(true)), ParseError);
}

TEST_CASE("structures and forms round-trip") {
  for (int trial = 0; trial < 5; ++trial) {
    auto s = random_structure(4, rand_int(0, 2));
    auto back = structure_from_json<R>(Json::parse(to_json(s).dump()));
    CHECK(back == s);
    auto b = TwoForm<R>(random_skew(5));
    CHECK(two_form_from_json<R>(to_json(b)).matrix() == b.matrix());
    auto beta = Bivector<R>(random_skew(3));
    CHECK(bivector_from_json<R>(to_json(beta)).matrix() == beta.matrix());
  }
  CHECK_THROWS_AS(structure_from_json<R>(Json{{"dim_v", 1}, {"entries", {{0, 1}}}}), ParseError);
  CHECK_THROWS_AS(structure_from_json<R>(Json{{"entries", {{0}}}}), ParseError);
  CHECK_THROWS_AS(two_form_from_json<R>(Json{{"dim_v", 2}, {"entries", {{0, 1}, {1, 0}}}}), ParseError);
}

TEST_CASE("mixed forms round-trip with 1-based subsets") {
  auto j = Json::parse(R"({"dim_v": 3, "terms": [{"subset": [], "re": 1}, {"subset": [1, 3], "re": "1/2", "im": -2}]})");
  auto f = mixed_form_from_json<R>(j);
  CHECK(f[0] == CR(1));
  CHECK(f[0b101] == CR(q("1/2"), R(-2)));
  auto again = to_json(f);
  CHECK(again["terms"][1]["subset"] == Json::array({1, 3}));
  CHECK(mixed_form_from_json<R>(again) == f);
  CHECK_THROWS_AS(mixed_form_from_json<R>(Json::parse(R"({"dim_v": 2, "terms": [{"subset": [3]}]})")), ParseError);
  CHECK_THROWS_AS(mixed_form_from_json<R>(Json::parse(R"({"dim_v": 2, "terms": [{"subset": [1, 1]}]})")), ParseError);
}

TEST_CASE("Lie algebras in both encodings") {
  auto h = lie_algebra_from_json<R>(Json{{"dim", 4}, {"equations", "d e3 = - e1^e2"}});
  CHECK(h.constant(3, 1, 2) == R(1));
  auto j = to_json(h);
  CHECK(j["brackets"].size() == 1);
  CHECK(lie_algebra_from_json<R>(j) == h);
  CHECK(structure_equations_text(h) == "d e3 = - e1^e2\n");
  auto text_again = lie_algebra_from_json<R>(Json{{"dim", 4}, {"equations", structure_equations_text(h)}});
  CHECK(text_again == h);

  auto d = cotangent_double(h);
  auto d_text = structure_equations_text(d.algebra);
  CHECK(lie_algebra_from_json<R>(Json{{"dim", 8}, {"equations", d_text}}) == d.algebra);
  auto one_based = lie_algebra_from_json<R>(
      Json{{"dim", 8}, {"equations", Json::array({"dE4 = -E2^E3", "dE6 = -E3^E8", "dE7 = E2^E8"})}, {"index_base", 1}});
  CHECK(one_based == d.algebra);

  CHECK_THROWS_AS(lie_algebra_from_json<R>(Json::parse(R"({"dim": 2, "brackets": [{"i": 0, "j": 0, "result": []}]})")),
                  ParseError);
  CHECK_THROWS_AS(lie_algebra_from_json<R>(Json::parse(R"({"dim": 2, "brackets": [{"i": 0, "j": 5, "result": []}]})")),
                  ParseError);
}

TEST_CASE("type map and twistor encodings") {
  auto f = build_family(from_complex(standard_j(4)), from_symplectic(TwoForm<R>(Mat<R>{
                                                         {0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}})));
  auto tm = family_typemap(f, 3);
  auto csv = typemap_csv(tm);
  CHECK(csv.rfind("a,b,c,type\n1.000000000000,0.000000000000,0.000000000000,2\n", 0) == 0);
  CHECK(csv.find("-0.000000000000") == std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(tm.samples.size() + 1));
  auto j = to_json(tm);
  CHECK(j["summary"]["type_counts"]["2"] == 2);

  auto tr = twistor_type_report(f, 3);
  auto tj = to_json(tr);
  CHECK(tj["summary"]["min_twistor_type"] == 1);
  CHECK(tj["summary"]["max_twistor_type"] == 3);
  CHECK(tj["samples"][0]["twistor_type"] == 3);
  CHECK(twistor_csv(tr).rfind("a,b,c,fiber_type,twistor_type\n", 0) == 0);
}

TEST_CASE("verify bundles") {
  auto sym = from_symplectic(TwoForm<R>(standard_omega(4)));
  auto ok = verify_bundle(bundle_from_json<R>(Json{{"structure", to_json(sym)}}));
  CHECK(ok.passed());

  auto id = Json{{"structure", {{"dim_v", 1}, {"entries", {{1, 0}, {0, 1}}}}}};
  auto bad = verify_bundle(bundle_from_json<R>(id));
  CHECK_FALSE(bad.passed());
  CHECK(bad.to_json().dump().find("square check failed") != std::string::npos);

  auto kt = build_kt(KodairaThurstonExample<R>{R(0), R(1)});
  Json kj{{"pair", {to_json(kt.i), to_json(kt.j)}}, {"algebra", {{"dim", 4}, {"equations", "d e3 = - e1^e2"}}}};
  auto kr = verify_bundle(bundle_from_json<R>(Json::parse(kj.dump())));
  CHECK(kr.passed());
  CHECK(kr.find("pair[1]: integrable")->pass);

  CHECK_THROWS_AS(bundle_from_json<R>(Json::object()), ParseError);
  CHECK_THROWS_AS(bundle_from_json<R>(Json{{"pair", {to_json(sym)}}}), ParseError);
  auto mismatch = bundle_from_json<R>(Json{{"structure", to_json(sym)}, {"algebra", {{"dim", 3}, {"equations", ""}}}});
  CHECK_THROWS_AS(verify_bundle(mismatch), DimensionError);
}
