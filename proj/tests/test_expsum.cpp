#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "pfkit/expsum.hpp"

using namespace pfkit;

namespace {

MPoly univariate(std::initializer_list<long> coeffs) {
  MPoly f(1);
  std::uint32_t i = 0;
  for (long c : coeffs) f.add_term({i++}, Rational(c));
  return f;
}

CharacterDesc standard(u64 p) { return CharacterDesc::standard(build_extension(p, 1)); }

}  // namespace

TEST_SUITE("expsum") {
  TEST_CASE("exp_sum examples") {
    const PointSystem line{1, {}};
    for (u64 p : {5ULL, 7ULL, 101ULL}) {
      CHECK(std::abs(exp_sum(line, univariate({0, 1}), standard(p))) < 1e-9);
      const auto c = exp_sum(line, univariate({3}), standard(p));
      CHECK(std::abs(c - std::complex<double>(p) * angle_to_complex(Angle(3, p))) < 1e-9);
    }
    CHECK(std::abs(std::abs(exp_sum(line, univariate({0, 0, 1}), standard(7))) - 2.6457513) < 1e-7);
  }

  TEST_CASE("gauss sums match direct summation") {
    for (u64 p : primes_in(1000)) {
      if (p == 2) continue;
      const auto r = weil_check(univariate({0, 0, 1}), standard(p));
      CHECK(std::abs(r.normalized - 1) <= 1e-9);
      const auto ref = oracle::exp_sum({0, 0, 1}, p);
      CHECK(std::abs(r.magnitude - static_cast<double>(std::abs(ref))) < 1e-9);
    }
  }

  TEST_CASE("weil examples") {
    CHECK(weil_check(univariate({0, 0, 0, 1}), standard(7)).pass);
    CHECK(weil_check(univariate({0, 0, 0, 1}), standard(7)).magnitude <= 2 * std::sqrt(7.0));
    const auto lin = weil_check(univariate({5, 3}), standard(11));
    CHECK(lin.magnitude < 1e-9);
    CHECK(lin.pass);
    CHECK_THROWS_WITH(weil_check(univariate({0, 0, 0, 1}), standard(3)),
                      doctest::Contains("wild degree; bound not applicable"));
    CHECK_THROWS(weil_check(univariate({7, 0, 7}), standard(7)));
    CHECK_THROWS(weil_check(univariate({0, 1}), standard(11), UnitRootTable(13)));
  }

  TEST_CASE("univariate kernel matches the oracle") {
    const UnitRootTable t(211);
    const std::vector<u64> f{4, 9, 0, 17, 3, 1};
    const auto got = exp_sum_univariate(f, 1, t);
    const auto ref = oracle::exp_sum(f, 211);
    CHECK(std::abs(got - std::complex<double>(ref.real(), ref.imag())) < 1e-10);
  }

  TEST_CASE("extension field sums") {
    // sum over F_9 of Psi_9(x^2) against the schoolbook field
    const auto desc = build_extension(3, 2);
    const oracle::NaiveField N{3, desc.modulus};
    std::complex<long double> ref = 0;
    for (u64 i = 0; i < 9; ++i) {
      const auto x = N.element(i);
      ref += oracle::unit(N.trace(N.mul(x, x)), 3);
    }
    const auto got = exp_sum(PointSystem{1, {}}, univariate({0, 0, 1}), CharacterDesc::standard(desc));
    CHECK(std::abs(got - std::complex<double>(ref.real(), ref.imag())) < 1e-9);
    CHECK(std::abs(std::abs(got) - 3) < 1e-9);
  }

  TEST_CASE("axiom3 sup") {
    LaurentPoly h(1);
    h.add_term({1}, {1, 0});
    h.add_term({-1}, {1, 0});
    const PointSystem line{1, {}};
    for (u64 p : {5ULL, 101ULL}) {
      // x = 0 is a point of A^1, so the sup is attained at 2 exactly
      const auto r = axiom3_sup(line, h, p);
      CHECK(r.sup == doctest::Approx(2.0).epsilon(1e-12));
      CHECK(r.points == p);
      CHECK(r.pass);
    }
    const auto zero = axiom3_sup(line, LaurentPoly(1), 7);
    CHECK(zero.sup == 0);
    CHECK(zero.pass);

    LaurentPoly complex_h(1);
    complex_h.add_term({1}, {1, 0});
    CHECK_THROWS(axiom3_sup(line, complex_h, 7));
    LaurentPoly with_constant(1);
    with_constant.add_term({0}, {1, 0});
    CHECK_THROWS(axiom3_sup(line, with_constant, 7));

    // parabola (x, x^2) with h = z1 z2 + conj
    const auto x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    LaurentPoly h2(2);
    h2.add_term({1, 1}, {1, 0});
    h2.add_term({-1, -1}, {1, 0});
    const auto r = axiom3_sup(PointSystem{2, {y - x * x}}, h2, 101);
    CHECK(r.points == 101);
    CHECK(r.sup >= -r.tolerance);
  }

  TEST_CASE("laurent term parsing") {
    const auto [m, c] = parse_laurent_term("2,-1:1/2:3");
    CHECK(m == LaurentExponents{2, -1});
    CHECK(c.re == Rational(1, 2));
    CHECK(c.im == Rational(3));
    CHECK_THROWS(parse_laurent_term("1,2"));
  }

  TEST_CASE("hyperplane search") {
    const auto x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    const auto one = MPoly::constant(2, Rational(1));
    const auto two = MPoly::constant(2, Rational(2));
    const auto five = MPoly::constant(2, Rational(5));

    const auto line = hyperplane_height_test(PointSystem{2, {y - two * x - one}}, 3);
    REQUIRE(line);
    CHECK(line->coeffs == std::vector<std::int64_t>{-2, 1});
    CHECK(line->height == 2);
    REQUIRE(line->constant);
    CHECK(*line->constant == 1);

    const auto sum = hyperplane_height_test(PointSystem{2, {x + y - five}}, 2);
    REQUIRE(sum);
    CHECK(sum->coeffs == std::vector<std::int64_t>{1, 1});
    CHECK(sum->height == 1);

    CHECK_FALSE(hyperplane_height_test(PointSystem{2, {y - x * x}}, 10));
    // no points at all
    CHECK_THROWS_WITH(hyperplane_height_test(PointSystem{2, {one}}, 2), doctest::Contains("insufficient samples"));
  }

  TEST_CASE("box counts") {
    const u64 p = 101;
    const auto half = box_count(PointSystem{1, {}}, p, PointBox{{{0, (p + 1) / 2}}}, 1);
    CHECK(std::abs(half.fraction - 0.5) <= 1.0 / p);

    const auto x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    const u64 q = 10007;
    const PointBox quad{{{0, (q + 1) / 2}, {0, (q + 1) / 2}}};
    const auto parabola = box_count(PointSystem{2, {y - x * x}}, q, quad, 1, 1);
    CHECK(std::abs(parabola.fraction - 0.25) <= 5 / std::sqrt(double(q)));
    CHECK_FALSE(parabola.hyperplane);
    const auto axis = box_count(PointSystem{2, {x}}, q, quad, 1, 1);
    CHECK(std::abs(axis.fraction - 0.5) <= 1.0 / q);
    REQUIRE(axis.hyperplane);
    CHECK(axis.hyperplane->coeffs == std::vector<std::int64_t>{1, 0});

    // brute-force count and monotonicity in the box
    u64 want = 0;
    for (u64 a = 0; a < 30; ++a) want += (a * a) % p < 40;
    CHECK(box_count(PointSystem{2, {y - x * x}}, p, PointBox{{{0, 30}, {0, 40}}}, 1).count == want);
    u64 last = 0;
    for (u64 w = 1; w <= p; w += 10) {
      const auto c = box_count(PointSystem{2, {y - x * x}}, p, PointBox{{{0, w}, {0, w}}}, 1).count;
      CHECK(c >= last);
      last = c;
    }
  }
}
