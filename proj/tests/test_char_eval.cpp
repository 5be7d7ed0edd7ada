#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "pfkit/character.hpp"

using namespace pfkit;

TEST_SUITE("char_eval") {
  TEST_CASE("psi_p examples") {
    CHECK(psi_p(0, 7) == Angle(0, 1));
    CHECK(psi_p(1, 7) == Angle(1, 7));
    const Angle half = psi_p(3, 5);
    CHECK(half == Angle(3, 5));
    CHECK((half - Angle(1, 2)) == Angle(1, 10));
    CHECK_THROWS(psi_p(7, 7));
  }

  TEST_CASE("psi_q examples") {
    const auto f4 = build_extension(2, 2);
    const auto ch4 = CharacterDesc::standard(f4);
    CHECK(psi_q(FqElem{{0, 1}}, ch4) == Angle(1, 2));
    CHECK(psi_q(FqElem{{0, 0}}, ch4).is_zero());
    const auto f9 = build_extension(3, 2);
    REQUIRE(f9.modulus == std::vector<u64>{1, 0, 1});
    CHECK(psi_q(FqElem{{0, 1}}, CharacterDesc::standard(f9)).is_zero());
  }

  TEST_CASE("angle_to_complex examples") {
    CHECK(angle_to_complex(Angle(0, 1)) == std::complex<double>(1, 0));
    CHECK(angle_to_complex(Angle(1, 2)) == std::complex<double>(-1, 0));
    CHECK(angle_to_complex(Angle(1, 4)) == std::complex<double>(0, 1));
    const auto z = angle_to_complex(Angle(1, 8));
    CHECK(std::abs(z.real() - std::sqrt(2.0) / 2) <= 1e-15);
    CHECK(std::abs(z.imag() - std::sqrt(2.0) / 2) <= 1e-15);
  }

  TEST_CASE("angle_to_complex against long double polar") {
    const double eps = std::numeric_limits<double>::epsilon();
    for (u64 den : {3ULL, 7ULL, 12ULL, 97ULL, 1009ULL, 65537ULL}) {
      for (u64 k = 0; k < std::min<u64>(den, 500); ++k) {
        const auto got = angle_to_complex(Angle(k, den));
        const auto ref = oracle::unit(k, den);
        CHECK(std::abs(got.real() - static_cast<double>(ref.real())) <= 4 * eps);
        CHECK(std::abs(got.imag() - static_cast<double>(ref.imag())) <= 4 * eps);
        const auto neg = angle_to_complex(-Angle(k, den));
        CHECK(neg.real() == got.real());
        CHECK(neg.imag() == -got.imag());
      }
    }
    const UnitRootTable t(101);
    for (u64 k = 0; k < 101; ++k) CHECK(t[k] == angle_to_complex(Angle(k, 101)));
  }

  TEST_CASE("angle arithmetic") {
    CHECK((Angle(5, 7) - Angle(2, 3)) == Angle(1, 21));
    CHECK((Angle(1, 2) + Angle(1, 2)).is_zero());
    CHECK(Angle(3, 6) == Angle(1, 2));
    CHECK(Angle(1, 3).times(-1) == Angle(2, 3));
    CHECK(Angle::from_signed(-1, 4) == Angle(3, 4));
    CHECK(Angle::parse("4/6") == Angle(2, 3));
    CHECK(Angle::parse("3") == Angle(0, 1));
    CHECK(Angle(0, 5).str() == "0/1");
    CHECK(Angle(2, 6).str() == "1/3");
    CHECK(Angle(1, 3) < Angle(1, 2));
    CHECK_THROWS(Angle(1, 0));
    CHECK_THROWS(Angle::parse("1/x"));
  }

  TEST_CASE("characters are homomorphisms with orthogonality") {
    for (auto [p, e] : {std::pair<u64, unsigned>{2, 2}, {3, 2}, {5, 2}, {2, 3}, {7, 2}}) {
      const auto desc = build_extension(p, e);
      const ExtField F(desc);
      const u64 q = F.order();
      for (u64 ci = 1; ci < q; ++ci) {
        const auto ch = CharacterDesc::twisted(desc, F.element(ci));
        std::complex<double> total = 0;
        for (u64 i = 0; i < q; ++i) {
          const auto x = F.element(i);
          total += angle_to_complex(psi_q(x, ch));
          const auto y = F.element((i * 7 + 3) % q);
          CHECK(psi_q(F.add(x, y), ch) == psi_q(x, ch) + psi_q(y, ch));
        }
        CHECK(std::abs(total) < 1e-9);
      }
    }
  }

  TEST_CASE("twists give distinct characters") {
    // every character of F_q is x -> Psi_q(c x) for exactly one c
    for (auto [p, e] : {std::pair<u64, unsigned>{3, 2}, {2, 3}, {7, 2}}) {
      const auto desc = build_extension(p, e);
      const ExtField F(desc);
      const u64 q = F.order();
      std::vector<std::vector<Angle>> seen;
      for (u64 ci = 0; ci < q; ++ci) {
        const auto ch = ci == 0 ? CharacterDesc::trivial(desc) : CharacterDesc::twisted(desc, F.element(ci));
        std::vector<Angle> values;
        for (u64 i = 0; i < q; ++i) values.push_back(psi_q(F.element(i), ch));
        for (const auto& s : seen) CHECK(s != values);
        seen.push_back(values);
      }
    }
  }

  TEST_CASE("standard character matches the trace oracle") {
    const auto desc = build_extension(5, 3);
    const oracle::NaiveField N{5, desc.modulus};
    const ExtField F(desc);
    const auto ch = CharacterDesc::standard(desc);
    for (u64 i = 0; i < F.order(); i += 3) CHECK(psi_q(F.element(i), ch) == Angle(N.trace(N.element(i)), 5));
  }

  TEST_CASE("character construction errors") {
    const auto desc = build_extension(5, 2);
    CHECK_THROWS(CharacterDesc::twisted(desc, FqElem{{0, 0}}));
    CHECK(CharacterDesc::trivial(desc).is_trivial());
    CHECK_FALSE(CharacterDesc::standard(desc).is_trivial());
  }
}
