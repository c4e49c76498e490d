#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace gencx;
using namespace gencx::testing;

namespace {

using Form = MixedForm<R>;
using CE = CliffordElement<R>;

CR ci(int re, int im) { return CR(R(re), R(im)); }

Vec<CR> random_cvec(std::size_t n) {
  Vec<CR> v(n);
  for (auto& z : v) z = ci(rand_int(-2, 2), rand_int(-2, 2));
  return v;
}

Form random_form(std::size_t m) {
  Form f(m);
  for (std::uint32_t k = 0; k < f.size(); ++k) f.at(k) = ci(rand_int(-2, 2), rand_int(-1, 1));
  return f;
}

// Independent route to the pure line: kernel of the stacked system
// "v·ρ = 0 for every v in a basis of L" over the whole exterior algebra.
Form line_by_linear_solve(const GenStructure<R>& s) {
  const std::size_t m = s.dim_v();
  auto basis = plus_i_eigenspace(s);
  const std::size_t n = std::size_t{1} << m;
  Mat<CR> sys(basis.size() * n, n);
  for (std::uint32_t k = 0; k < n; ++k) {
    auto mono = Form::monomial(m, k);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto img = clifford_act(CE::from_vector(basis[b]), mono);
      for (std::uint32_t r = 0; r < n; ++r) sys(b * n + r, k) = img[r];
    }
  }
  auto ker = nullspace(sys);
  REQUIRE(ker.size() == 1);
  Form f(m);
  for (std::uint32_t k = 0; k < n; ++k) f.at(k) = ker[0][k];
  return f;
}

Mat<CR> i_times(const Mat<R>& w) {
  return map_entries<CR>(w, [](const R& x) { return CR(R(0), x); });
}

}  // namespace

TEST_CASE("clifford_act basics") {
  CE x{{ci(1, 0), ci(0, 0)}, {ci(0, 0), ci(0, 0)}};
  CHECK(clifford_act(x, Form::scalar(2, ci(3, 0))).is_zero());
  CE xi{{ci(0, 0), ci(0, 0)}, {ci(2, 0), ci(0, -1)}};
  auto one_form = clifford_act(xi, Form::scalar(2, CR(1)));
  CHECK(one_form[0b01] == ci(2, 0));
  CHECK(one_form[0b10] == ci(0, -1));
  CHECK(one_form[0b00] == CR(0));
  // ι_{e_2}(e^1∧e^2) = −e^1
  CE e2{{ci(0, 0), ci(1, 0)}, {ci(0, 0), ci(0, 0)}};
  CHECK(clifford_act(e2, Form::monomial(2, 0b11))[0b01] == ci(-1, 0));
}

TEST_CASE("Clifford relation v·v·ρ = <v,v> ρ") {
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t m = rand_int(1, 5);
    auto v = random_cvec(2 * m);
    auto rho = random_form(m);
    auto e = CE::from_vector(v);
    CHECK(clifford_act(e, clifford_act(e, rho)) == rho * pairing(v, v));
  }
}

TEST_CASE("anticommutator of Clifford generators is twice the pairing") {
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t m = rand_int(1, 4);
    auto u = random_cvec(2 * m), v = random_cvec(2 * m);
    auto rho = random_form(m);
    auto eu = CE::from_vector(u), ev = CE::from_vector(v);
    auto lhs = clifford_act(eu, clifford_act(ev, rho)) + clifford_act(ev, clifford_act(eu, rho));
    CHECK(lhs == rho * (CR(2) * pairing(u, v)));
  }
}

TEST_CASE("wedge and exponentials") {
  // e^1 ∧ e^0 = −e^0 ∧ e^1
  CHECK(wedge(Form::monomial(2, 0b10), Form::monomial(2, 0b01))[0b11] == CR(-1));
  Mat<R> w = standard_omega(4);
  auto expw = exp_two_form(TwoForm<R>(w));
  auto omega = two_form<R>(complexify(w));
  // e^ω = 1 + ω + ω∧ω/2
  auto series = Form::scalar(4, CR(1)) + omega + wedge(omega, omega) * CR(R(1, 2));
  CHECK(expw == series);
  CHECK(expw[0b1111] == CR(1));
}

TEST_CASE("annihilator of e^{iω} is the graph of iω") {
  for (std::size_t m : {2, 4}) {
    Mat<R> w = standard_omega(m);
    auto rho = exp_two_form<R>(i_times(w));
    auto ann = annihilator(rho);
    CHECK(ann.size() == m);
    // X + iω(·, X); worked out by contracting e^{iω} by hand.
    std::vector<Vec<CR>> expected;
    for (std::size_t k = 0; k < m; ++k) {
      Vec<CR> v(2 * m, CR(0));
      v[k] = CR(1);
      for (std::size_t r = 0; r < m; ++r) v[m + r] = CR(R(0), w(r, k));
      expected.push_back(v);
    }
    CHECK(same_span(ann, expected, 2 * m));
    CHECK(is_pure(rho));
  }
}

TEST_CASE("annihilator of dz is V^{0,1} + V*^{1,0}") {
  Form dz(2);
  dz.at(0b01) = CR(1);
  dz.at(0b10) = ci(0, 1);
  std::vector<Vec<CR>> expected{{CR(1), ci(0, 1), CR(0), CR(0)}, {CR(0), CR(0), CR(1), ci(0, 1)}};
  CHECK(same_span(annihilator(dz), expected, 4));

  auto dz12 = wedge(Form(dz), Form(dz));
  CHECK(dz12.is_zero());
  Form dz1(4), dz2(4);
  dz1.at(0b0001) = CR(1);
  dz1.at(0b0010) = ci(0, 1);
  dz2.at(0b0100) = CR(1);
  dz2.at(0b1000) = ci(0, 1);
  auto omega = wedge(dz1, dz2);
  std::vector<Vec<CR>> exp4{{CR(1), ci(0, 1), CR(0), CR(0), CR(0), CR(0), CR(0), CR(0)},
                            {CR(0), CR(0), CR(1), ci(0, 1), CR(0), CR(0), CR(0), CR(0)},
                            {CR(0), CR(0), CR(0), CR(0), CR(1), ci(0, 1), CR(0), CR(0)},
                            {CR(0), CR(0), CR(0), CR(0), CR(0), CR(0), CR(1), ci(0, 1)}};
  CHECK(same_span(annihilator(omega), exp4, 8));
}

TEST_CASE("annihilator edge cases") {
  auto ann = annihilator(Form::scalar(3, CR(1)));
  CHECK(ann.size() == 3);
  for (const auto& v : ann)
    for (std::size_t k = 3; k < 6; ++k) CHECK(v[k] == CR(0));
  CHECK_THROWS_AS(annihilator(Form(3)), ParameterError);
  CHECK_THROWS_AS(Form(13), DimensionError);
}

TEST_CASE("purity") {
  Form f(4);
  f.at(0b0001) = CR(1);
  f.at(0b0111) = CR(1);
  // dx¹ + dx¹∧dx²∧dx³ = dx¹ ∧ exp(dx²∧dx³) is a B-transform of a
  // decomposable form, so its annihilator is maximal.
  CHECK(annihilator(f).size() == 4);
  CHECK(is_pure(f));
  CHECK(proportional(f, wedge(Form::monomial(4, 0b0001), exp_two_form<R>(complexify(Mat<R>{
                                                              {0, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}})))));
  // 1 + vol: contraction must vanish on vol and wedging on 1, so only 0 survives.
  auto g = Form::scalar(4, CR(1)) + Form::monomial(4, 0b1111);
  CHECK(annihilator(g).empty());
  CHECK_FALSE(is_pure(g));
  CHECK(is_pure(Form::monomial(4, 0b1111, ci(2, 1))));
  CHECK(is_pure(Form::monomial(6, 0b111111)));
}

TEST_CASE("mukai_pairing") {
  CHECK(mukai_pairing(Form::monomial(4, 0b0001), Form::monomial(4, 0b0110)) == CR(0));
  CHECK(mukai_pairing(Form::scalar(3, CR(1)), Form::monomial(3, 0b111, ci(5, -2))) == ci(5, -2));
  // σ(1 + iω) ∧ (1 − iω) on R², computed by hand: top coefficient −2i.
  auto rho = exp_two_form<R>(i_times(standard_omega(2)));
  CHECK(mukai_pairing(rho, conj(rho)) == ci(0, -2));
  for (std::size_t m : {4, 6}) {
    auto r = exp_two_form<R>(i_times(standard_omega(m)));
    CHECK_FALSE(is_zero(mukai_pairing(r, conj(r))));
  }
  // σ sign on degree 2 and degree 3 pieces: (e^0, σ(e^{12})) vs swapped order.
  auto a = Form::monomial(3, 0b001), b = Form::monomial(3, 0b110);
  CHECK(mukai_pairing(a, b) == CR(1));
  CHECK(mukai_pairing(b, a) == CR(-1));
}

TEST_CASE("canonical line of the standard examples") {
  auto sym = canonical_line(from_symplectic(TwoForm<R>(standard_omega(2))));
  // e^{−iω} = 1 − i e^0∧e^1 under the 2-form convention in use.
  CHECK(sym[0b00] == CR(1));
  CHECK(sym[0b11] == ci(0, -1));
  CHECK(proportional(sym, exp_two_form<R>(i_times(-standard_omega(2)))));
  CHECK(proportional(canonical_line(from_symplectic(TwoForm<R>(standard_omega(6)))),
                     exp_two_form<R>(i_times(-standard_omega(6)))));

  auto cx = canonical_line(from_complex(standard_j(2)));
  CHECK(cx[0b01] == CR(1));
  CHECK(cx[0b10] == ci(0, -1));
  CHECK(cx[0b00] == CR(0));

  CHECK(spinor_type(from_symplectic(TwoForm<R>(standard_omega(4)))) == 0);
  CHECK(spinor_type(from_complex(standard_j(4))) == 2);
}

TEST_CASE("canonical line of a B-transform is e^B ∧ ρ") {
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t m = 2 * rand_int(1, 3);
    auto s = random_structure(m, rand_int(0, static_cast<int>(m / 2)));
    TwoForm<R> b(random_skew(m));
    auto rho = canonical_line(s);
    auto lhs = canonical_line(b_transform(s, b));
    CHECK(proportional(lhs, wedge(exp_two_form(b), rho)));
  }
}

TEST_CASE("canonical line agrees with the stacked linear solve") {
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t m = 2 * rand_int(1, 2);
    auto s = random_structure(m, rand_int(0, static_cast<int>(m / 2)));
    CHECK(proportional(canonical_line(s), line_by_linear_solve(s)));
  }
}

TEST_CASE("beta_on_spinor") {
  auto rho = canonical_line(from_complex(standard_j(4)));
  CHECK(beta_on_spinor(Bivector<R>::zero(4), rho) == rho);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_structure(4, rand_int(0, 2));
    Bivector<R> beta(random_skew(4));
    auto r = canonical_line(s);
    auto moved = beta_on_spinor(beta, r);
    // Push L_ρ through [[1, −β], [0, 1]] and compare spans.
    auto push = complexify(block2x2(Mat<R>::identity(4), Mat<R>(-beta.matrix()), Mat<R>(4, 4), Mat<R>::identity(4)));
    std::vector<Vec<CR>> pushed;
    for (const auto& v : annihilator(r)) pushed.push_back(push * v);
    CHECK(same_span(annihilator(moved), pushed, 8));
    CHECK(proportional(moved, canonical_line(beta_transform(s, beta))));
    std::size_t top = 0;
    for (std::uint32_t k = 0; k < r.size(); ++k)
      if (!is_zero(r[k])) top = std::max<std::size_t>(top, std::popcount(k));
    for (std::uint32_t k = 0; k < moved.size(); ++k)
      if (static_cast<std::size_t>(std::popcount(k)) > top) CHECK(moved[k] == CR(0));
  }
}

TEST_CASE("spinor invariants on random structures") {
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t m = 2 * rand_int(1, 4);
    auto s = random_structure(m, rand_int(0, static_cast<int>(m / 2)));
    auto rho = canonical_line(s);
    CHECK(spinor_type(s) == type_of(s));
    CHECK_FALSE(is_zero(mukai_pairing(rho, conj(rho))));
    if (m <= 6) CHECK(same_span(annihilator(rho), plus_i_eigenspace(s), 2 * m));
  }
}

TEST_CASE("float spinor type agrees with exact type") {
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t m = 2 * rand_int(1, 3);
    auto s = random_structure(m, rand_int(0, static_cast<int>(m / 2)));
    CHECK(spinor_type(convert<double>(s)) == type_of(s));
  }
}
