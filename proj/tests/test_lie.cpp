#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace gencx;
using namespace gencx::testing;

namespace {

LieAlgebra<R> h3r() { return from_structure_equations<R>(4, parse_structure_equations<R>("d e3 = - e1^e2", 4)); }

LieAlgebra<R> so3() {
  return from_structure_equations<R>(3, parse_structure_equations<R>("d e0 = - e1^e2\nd e1 = - e2^e0\nd e2 = - e0^e1", 3));
}

LieAlgebra<R> sl2() {
  // [h,x] = 2x, [h,y] = −2y, [x,y] = h with (h, x, y) = (e0, e1, e2)
  return from_structure_equations<R>(3,
                                     parse_structure_equations<R>("d e0 = - e1^e2\nd e1 = -2 e0^e1\nd e2 = 2 e0^e2", 3));
}

Mat<R> form_matrix(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> terms) {
  Mat<R> b(n, n);
  for (auto [i, j] : terms) {
    b(i, j) += 1;
    b(j, i) -= 1;
  }
  return b;
}

}  // namespace

TEST_CASE("abelian algebras") {
  auto g = from_structure_equations<R>(3, parse_structure_equations<R>("d e0 = 0\nd e1 = 0\n\n# comment\nd e2 = 0", 3));
  CHECK(g.is_abelian());
  CHECK(g == LieAlgebra<R>::abelian(3));
  CHECK(cotangent_double(g).algebra.is_abelian());
}

TEST_CASE("H3 x R from its structure equation") {
  auto g = h3r();
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        R expected(0);
        if (k == 3 && i == 1 && j == 2) expected = 1;
        if (k == 3 && i == 2 && j == 1) expected = -1;
        CHECK(g.constant(k, i, j) == expected);
      }
  CHECK(g.bracket_basis(1, 2) == Vec<R>{0, 0, 0, 1});
}

TEST_CASE("structure equation parser") {
  auto eqs = parse_structure_equations<R>("dE4 = -E2^E3 + 3/2 E1^E5\n  d E6=2*E3^E8", 8, 1);
  REQUIRE(eqs.size() == 2);
  CHECK(eqs[0].index == 3);
  CHECK(eqs[0].form.matrix()(1, 2) == R(-1));
  CHECK(eqs[0].form.matrix()(0, 4) == R(3, 2));
  CHECK(eqs[0].form.matrix()(4, 0) == R(-3, 2));
  CHECK(eqs[1].index == 5);
  CHECK(eqs[1].form.matrix()(2, 7) == R(2));
  CHECK_THROWS_AS(parse_structure_equations<R>("d e4 = e1^e2", 4), ParseError);
  CHECK_THROWS_AS(parse_structure_equations<R>("x e1 = e1^e2", 4), ParseError);
  CHECK_THROWS_AS(parse_structure_equations<R>("d e1 = e1 e2", 4), ParseError);
  CHECK_THROWS_AS(parse_structure_equations<R>("d e1 = e1^e2 e0^e3", 4), ParseError);
  CHECK_THROWS_AS(parse_structure_equations<R>("d e0 = e1^e2", 4, 1), ParseError);
}

TEST_CASE("Jacobi and antisymmetry are enforced") {
  // d(de³) = de⁰ ∧ e¹ = e²∧e³∧e¹ ≠ 0
  CHECK_THROWS_AS(from_structure_equations<R>(4, parse_structure_equations<R>("d e3 = e0^e1\nd e0 = e2^e3", 4)),
                  VerificationError);
  std::vector<R> c(8, R(0));
  c[(0 * 2 + 0) * 2 + 1] = 1;  // c^0_01 = 1 without c^0_10 = −1
  CHECK_THROWS_AS(LieAlgebra<R>::from_constants(2, c), VerificationError);
  CHECK_THROWS_AS(from_structure_equations<R>(2, parse_structure_equations<R>("d e0 = 0\nd e0 = 0", 2)),
                  ParameterError);
  CHECK_NOTHROW(so3());
  CHECK_NOTHROW(sl2());
}

TEST_CASE("cotangent double of H3 x R matches the eight-dimensional structure equations") {
  auto d = cotangent_double(h3r());
  CHECK(d.dim() == 8);
  // E1..E8 = (e0, e1, e2, e3, e^0, e^1, e^2, e^3)
  auto expected = from_structure_equations<R>(
      8, parse_structure_equations<R>("dE4 = -E2^E3\ndE6 = -E3^E8\ndE7 = E2^E8", 8, 1));
  CHECK(d.algebra == expected);
}

TEST_CASE("pairing on the double is ad-invariant") {
  for (const auto& g : {h3r(), so3(), sl2()}) {
    auto d = cotangent_double(g);
    const std::size_t n = d.dim();
    auto q = PairingMatrix<R>::make(n / 2).q;
    auto pair = [&](const Vec<R>& a, std::size_t w) {
      R s(0);
      for (std::size_t k = 0; k < n; ++k) s += a[k] * q(k, w);
      return s;
    };
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
          CHECK(pair(d.algebra.bracket_basis(u, v), w) + pair(d.algebra.bracket_basis(u, w), v) == R(0));
  }
}

TEST_CASE("Nijenhuis tensor on an abelian double vanishes") {
  auto d = cotangent_double(LieAlgebra<R>::abelian(4));
  for (int trial = 0; trial < 5; ++trial) {
    auto s = random_structure(4, rand_int(0, 2));
    auto n = nijenhuis(d, s);
    CHECK(n.vanishes());
    CHECK(is_integrable(d, s));
  }
  CHECK_THROWS_AS(nijenhuis(d, from_complex(standard_j(2))), DimensionError);
}

TEST_CASE("symplectic structures on H3 x R are integrable exactly when closed") {
  auto g = h3r();
  auto d = cotangent_double(g);
  Mat<R> closed = form_matrix(4, {{0, 1}, {2, 3}});
  Mat<R> open = form_matrix(4, {{0, 3}, {1, 2}});
  CHECK(closed_2form_check(g, TwoForm<R>(closed)));
  CHECK_FALSE(closed_2form_check(g, TwoForm<R>(open)));
  CHECK(is_integrable(d, from_symplectic(TwoForm<R>(closed))));
  auto bad = nijenhuis(d, from_symplectic(TwoForm<R>(open)));
  CHECK_FALSE(bad.vanishes());
  CHECK(bad.max_abs() > 0);

  int seen_closed = 0, seen_open = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Mat<R> w = random_skew(4);
    if (!inverse(w)) continue;
    TwoForm<R> wf(w);
    bool c = closed_2form_check(g, wf);
    (c ? seen_closed : seen_open)++;
    auto s = from_symplectic(wf);
    CHECK(is_integrable(d, s) == c);
    CHECK(is_integrable(d, -s) == is_integrable(d, s));
  }
  CHECK(seen_closed > 0);
  CHECK(seen_open > 0);
}

TEST_CASE("B-transforms by closed forms preserve integrability") {
  auto g = h3r();
  auto d = cotangent_double(g);
  auto s = from_symplectic(TwoForm<R>(form_matrix(4, {{0, 1}, {2, 3}})));
  CHECK(is_integrable(d, b_transform(s, TwoForm<R>(form_matrix(4, {{1, 2}})))));
  CHECK(is_integrable(d, b_transform(s, TwoForm<R>(form_matrix(4, {{0, 1}, {1, 3}})))));
  // e³∧e⁰ is not closed on H3 x R.
  TwoForm<R> open(form_matrix(4, {{3, 0}}));
  CHECK_FALSE(closed_2form_check(g, open));
  CHECK_FALSE(is_integrable(d, b_transform(s, open)));
}

TEST_CASE("closed_2form_check") {
  auto ab = LieAlgebra<R>::abelian(4);
  for (int trial = 0; trial < 5; ++trial) CHECK(closed_2form_check(ab, TwoForm<R>(random_skew(4))));
  auto g = h3r();
  CHECK(closed_2form_check(g, TwoForm<R>(form_matrix(4, {{1, 2}}))));
  CHECK_FALSE(closed_2form_check(g, TwoForm<R>(form_matrix(4, {{3, 0}}))));
}

TEST_CASE("Nijenhuis tensor is totally skew for arbitrary structures") {
  auto so3r = from_structure_equations<R>(
      4, parse_structure_equations<R>("d e0 = - e1^e2\nd e1 = - e2^e0\nd e2 = - e0^e1", 4));
  auto sl2r = from_structure_equations<R>(
      4, parse_structure_equations<R>("d e0 = - e1^e2\nd e1 = -2 e0^e1\nd e2 = 2 e0^e2", 4));
  for (const auto& g : {h3r(), so3r, sl2r}) {
    auto d = cotangent_double(g);
    for (int trial = 0; trial < 6; ++trial) {
      auto s = random_structure(4, rand_int(0, 2));
      auto n = nijenhuis(d, s);  // throws unless totally skew
      CHECK(n.dim == 8);
      CHECK(is_integrable(d, -s) == n.vanishes());
    }
  }
}
