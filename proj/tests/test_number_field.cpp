#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pfkit/number_field.hpp"

using namespace pfkit;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  IntPoly f;
  for (long x : c) f.push_back(BigInt(x));
  return f;
}

NFElem elem(std::initializer_list<Rational> c) { return NFElem{std::vector<Rational>(c)}; }

NFElem combine(const IntMatrix& m, std::size_t row, const std::vector<NFElem>& xs, std::size_t d) {
  NFElem acc{std::vector<Rational>(d, Rational(0))};
  for (std::size_t j = 0; j < xs.size(); ++j) acc = nf_add(acc, nf_scale(xs[j], Rational(m[row][j])));
  return acc;
}

NFElem random_elem(std::mt19937_64& rng, std::size_t d) {
  NFElem x{std::vector<Rational>(d)};
  for (auto& c : x.coords) {
    const long num = static_cast<long>(rng() % 13) - 6;
    const long den = static_cast<long>(rng() % 6) + 1;
    c = Rational(num, den);
  }
  return x;
}

}  // namespace

TEST_SUITE("number_field") {
  TEST_CASE("nf_build examples") {
    const auto k2 = nf_build(ip({-2, 0, 1}));
    CHECK(k2.degree() == 2);
    CHECK(k2.disc == 8);
    CHECK_THROWS_WITH(nf_build(ip({-1, 0, 1})), doctest::Contains("factor X - 1"));
    const auto k3 = nf_build(ip({-2, 0, 0, 1}));
    CHECK(k3.disc == -108);
    CHECK_THROWS_WITH(nf_build(ip({1, 0, 0, 0, 1})), doctest::Contains("certificate not found"));
    CHECK(nf_build(ip({0, 1})).degree() == 1);
  }

  TEST_CASE("discriminants") {
    CHECK(discriminant(ip({1, 0, 1})) == -4);
    CHECK(discriminant(ip({-1, -1, 1})) == 5);
    // x^3 + a x + b: -4 a^3 - 27 b^2
    CHECK(discriminant(ip({1, -1, 0, 1})) == -23);
  }

  TEST_CASE("nf_reduce examples") {
    const auto Q = rational_field();
    CHECK(nf_reduce(elem({Rational(1, 2)}), Q, 5, 0) == 3);
    CHECK_THROWS_WITH(nf_reduce(elem({Rational(1, 5)}), Q, 5, 0), doctest::Contains("bad prime"));
    const auto K = nf_build(ip({-2, 0, 1}));
    CHECK(nf_reduce(elem({0, 1}), K, 7, 3) == 3);
    CHECK_THROWS(nf_reduce(elem({0, 1}), K, 7, 2));
  }

  TEST_CASE("nf_reduce is a ring homomorphism") {
    std::mt19937_64 rng(17);
    for (const IntPoly& f : {ip({-2, 0, 1}), ip({-2, 0, 0, 1})}) {
      const auto K = nf_build(f);
      for (u64 p : primes_in(997)) {
        if (p <= 3) continue;
        std::vector<u64> fm;
        for (const auto& c : f) fm.push_back(static_cast<u64>(((c % p) + p) % p));
        for (u64 b : oracle::scan_roots(fm, p)) {
          const auto x = random_elem(rng, K.degree()), y = random_elem(rng, K.degree());
          const u64 rx = nf_reduce(x, K, p, b), ry = nf_reduce(y, K, p, b);
          CHECK(nf_reduce(nf_add(x, y), K, p, b) == (rx + ry) % p);
          CHECK(nf_reduce(nf_mul(x, y, K), K, p, b) == oracle::mulm(rx, ry, p));
        }
      }
    }
  }

  TEST_CASE("lattice basis examples") {
    const std::vector<NFElem> q{elem({Rational(1, 2)}), elem({Rational(1, 3)}), elem({Rational(5, 6)})};
    const auto lb = lattice_basis(q);
    REQUIRE(lb.basis.size() == 1);
    CHECK(lb.basis[0] == elem({Rational(1, 6)}));
    CHECK(lb.expression == IntMatrix{{3}, {2}, {5}});

    const std::vector<NFElem> indep{elem({1, 0}), elem({0, 1})};
    const auto li = lattice_basis(indep);
    CHECK(li.basis == indep);
    CHECK(li.expression == IntMatrix{{1, 0}, {0, 1}});

    const std::vector<NFElem> dup{elem({0, 1}), elem({0, 2})};
    const auto ld = lattice_basis(dup);
    REQUIRE(ld.basis.size() == 1);
    CHECK(ld.basis[0] == elem({0, 1}));
    CHECK(ld.expression == IntMatrix{{1}, {2}});

    const std::vector<NFElem> zeros{elem({0, 0}), elem({0, 0})};
    const auto lz = lattice_basis(zeros);
    CHECK(lz.basis.empty());
    CHECK(lz.expression.size() == 2);
    for (const auto& row : lz.expression) CHECK(row.empty());
  }

  TEST_CASE("lattice round trip on seeded instances") {
    std::mt19937_64 rng(77);
    for (std::size_t d : {1u, 2u, 3u}) {
      for (int it = 0; it < 60; ++it) {
        std::vector<NFElem> xs;
        const std::size_t k = 1 + rng() % 5;
        for (std::size_t i = 0; i < k; ++i) xs.push_back(random_elem(rng, d));
        if (k > 1 && rng() % 2) xs.push_back(nf_add(xs[0], nf_scale(xs[1], Rational(2))));
        for (bool hnf : {false, true}) {
          const auto lb = hnf ? lattice_basis_hnf(xs) : lattice_basis(xs);
          for (std::size_t i = 0; i < xs.size(); ++i) CHECK(combine(lb.expression, i, lb.basis, d) == xs[i]);
          for (std::size_t j = 0; j < lb.basis.size(); ++j) CHECK(combine(lb.generators, j, xs, d) == lb.basis[j]);
          CHECK(qlin_relations(lb.basis).empty());
          CHECK(lb.basis.size() + qlin_relations(xs).size() == xs.size());
        }
      }
    }
  }

  TEST_CASE("qlin relations") {
    const std::vector<NFElem> q{elem({Rational(1, 2)}), elem({Rational(1, 3)}), elem({Rational(5, 6)})};
    const auto rel = qlin_relations(q);
    CHECK(rel.size() == 2);
    for (const auto& r : rel) {
      Rational s = 0;
      for (std::size_t i = 0; i < 3; ++i) s += Rational(r[i]) * q[i].coords[0];
      CHECK(s == 0);
    }
    // (1, 1, -1) lies in the span: det(rel_1, rel_2, (1, 1, -1)) = 0
    const auto& a = rel[0];
    const auto& b = rel[1];
    const BigInt c0 = a[1] * b[2] - a[2] * b[1], c1 = a[2] * b[0] - a[0] * b[2], c2 = a[0] * b[1] - a[1] * b[0];
    CHECK(c0 * 1 + c1 * 1 + c2 * -1 == 0);

    CHECK(qlin_relations(std::vector<NFElem>{elem({0})}) == std::vector<std::vector<BigInt>>{{1}});
    CHECK(qlin_relations(std::vector<NFElem>{elem({1, 0}), elem({0, 1})}).empty());
  }

  TEST_CASE("value sets") {
    const std::vector<NFElem> q{elem({Rational(1, 2)}), elem({Rational(1, 3)}), elem({Rational(5, 6)})};
    const auto vs = value_set(q, false);
    CHECK(vs.exponents == IntMatrix{{3}, {2}, {5}});
    CHECK_FALSE(vs.sp_mode);
    CHECK(vs.free_dimension == 1);

    const auto third = value_set(std::vector<NFElem>{elem({Rational(1, 3)})}, true);
    REQUIRE(third.annotations.size() == 1);
    const auto& br = third.annotations[0].branches;
    REQUIRE(br.size() == 2);
    CHECK(br[0].value == Angle(1, 3));
    CHECK(br[1].value == Angle(2, 3));
    CHECK(third.free_dimension == 0);

    const std::vector<NFElem> indep{elem({1, 0}), elem({0, 1})};
    const auto vi = value_set(indep, false);
    CHECK(vi.exponents == IntMatrix{{1, 0}, {0, 1}});
    CHECK(vi.free_dimension == 2);
  }

  TEST_CASE("random angles on a basis satisfy every relation") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 40; ++it) {
      std::vector<NFElem> xs;
      for (int i = 0; i < 4; ++i) xs.push_back(random_elem(rng, 2));
      xs.push_back(nf_add(xs[0], xs[1]));
      const auto vs = value_set(xs, false);
      std::vector<Angle> z;
      for (std::size_t j = 0; j < vs.lattice.basis.size(); ++j) z.push_back(Angle(rng() % 997, 997));
      std::vector<Angle> tuple;
      for (const auto& row : vs.exponents) {
        Angle a;
        for (std::size_t j = 0; j < row.size(); ++j) a = a + z[j].times(static_cast<i64>(row[j]));
        tuple.push_back(a);
      }
      for (const auto& rel : qlin_relations(xs)) {
        Angle s;
        for (std::size_t i = 0; i < rel.size(); ++i) s = s + tuple[i].times(static_cast<i64>(rel[i]));
        CHECK(s.is_zero());
      }
    }
  }
}
