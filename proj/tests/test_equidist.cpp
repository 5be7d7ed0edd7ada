#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "pfkit/equidist.hpp"
#include "pfkit/error.hpp"
#include "pfkit/number_field.hpp"
#include "pfkit/sweep.hpp"

using namespace pfkit;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  IntPoly f;
  for (long x : c) f.push_back(BigInt(x));
  return f;
}

RatPoly rp(std::initializer_list<long> c) {
  RatPoly f;
  for (long x : c) f.push_back(Rational(x));
  return f;
}

std::vector<std::pair<u64, Angle>> pairs(const SweepReport& s, u64 p) {
  std::vector<std::pair<u64, Angle>> out;
  for (const auto& x : s.samples) {
    if (x.p == p) out.push_back({x.root, x.angle});
  }
  return out;
}

}  // namespace

TEST_SUITE("equidist") {
  TEST_CASE("dfi sweep examples") {
    const auto s = dfi_sweep(ip({1, 0, 1}), 100);
    CHECK((pairs(s, 5) == std::vector<std::pair<u64, Angle>>{{2, Angle(2, 5)}, {3, Angle(3, 5)}}));
    CHECK(pairs(s, 7).empty());
    // p = 2 divides the discriminant -4
    CHECK(std::any_of(s.skipped.begin(), s.skipped.end(), [](const SkippedPrime& k) { return k.p == 2; }));
    CHECK_FALSE(s.empty);
    CHECK(s.weyl.size() == 5);

    EquidistOptions mod43;
    mod43.congruence = Congruence{4, 3};
    const auto e = dfi_sweep(ip({1, 0, 1}), 1000, mod43);
    CHECK(e.samples.empty());
    CHECK(e.empty);
    CHECK_FALSE(e.ks);
    CHECK(e.weyl.empty());
  }

  TEST_CASE("dfi errors") {
    CHECK_THROWS_WITH(dfi_sweep(ip({1, 1}), 100), doctest::Contains("degenerate: single forced root"));
    CHECK_THROWS(dfi_sweep(ip({-1, 0, 1}), 100));
  }

  TEST_CASE("dfi samples agree with scanning") {
    const IntPoly f = ip({-2, 0, 0, 1});
    const auto s = dfi_sweep(f, 1000);
    std::vector<std::pair<u64, u64>> got, want;
    for (const auto& x : s.samples) {
      got.push_back({x.p, x.root});
      CHECK(x.angle == Angle(x.root, x.p));
    }
    for (u64 p : primes_in(1000)) {
      if (p == 2 || p == 3) continue;  // disc = -108
      const std::vector<u64> fm{(p - 2) % p, 0, 0, 1};
      for (u64 r : oracle::scan_roots(fm, p)) want.push_back({p, r});
    }
    CHECK(got == want);
    CHECK(s.primes_used == primes_in(1000).size() - 2);
  }

  TEST_CASE("dfi histogram and split filter") {
    EquidistOptions o;
    o.hist_bins = 10;
    o.split_only = true;
    const auto s = dfi_sweep(ip({-2, 0, 0, 1}), 2000, o);
    u64 total = 0;
    for (u64 c : s.histogram) total += c;
    CHECK(s.histogram.size() == 10);
    CHECK(total == s.samples.size());
    CHECK(s.samples.size() % 3 == 0);
  }

  TEST_CASE("dfi extended examples") {
    const auto s = dfi_extended_sweep(ip({-2, 0, 1}), rp({0, 1}), 10);
    CHECK((pairs(s, 7) == std::vector<std::pair<u64, Angle>>{{3, Angle(3, 7)}, {4, Angle(4, 7)}}));
    const auto shifted = dfi_extended_sweep(ip({-2, 0, 1}), rp({1, 1}), 10);
    CHECK((pairs(shifted, 7) == std::vector<std::pair<u64, Angle>>{{3, Angle(4, 7)}, {4, Angle(5, 7)}}));

    const auto plain = dfi_sweep(ip({1, 0, 1}), 3000);
    const auto same = dfi_extended_sweep(ip({1, 0, 1}), rp({0, 1}), 3000);
    REQUIRE(plain.samples.size() == same.samples.size());
    for (std::size_t i = 0; i < plain.samples.size(); ++i) CHECK(plain.samples[i].angle == same.samples[i].angle);
    CHECK(plain.ks == same.ks);
    CHECK(plain.weyl == same.weyl);

    // g = X^2 is rational in Q[X]/(X^2 - 2)
    CHECK_THROWS_WITH(dfi_extended_sweep(ip({-2, 0, 1}), rp({0, 0, 1}), 100),
                      doctest::Contains("element is rational; equidistribution claim does not apply"));
    // denominators of g make their primes bad
    const RatPoly third{Rational(0), Rational(1, 3)};
    const auto d = dfi_extended_sweep(ip({-2, 0, 1}), third, 100);
    CHECK(std::any_of(d.skipped.begin(), d.skipped.end(), [](const SkippedPrime& k) { return k.p == 3; }));
  }

  TEST_CASE("multi weyl") {
    const IntPoly f = ip({-2, 0, 0, 1});
    std::mt19937_64 rng(1);
    for (int it = 0; it < 5; ++it) {
      std::vector<std::int64_t> h{std::int64_t(rng() % 7) - 3, std::int64_t(rng() % 7) - 3};
      if (h[0] == 0 && h[1] == 0) h[0] = 1;
      const auto w = multi_weyl(f, 3000, h);
      RatPoly g{Rational(0), Rational(h[0]), Rational(h[1])};
      EquidistOptions o;
      o.weyl_depth = 1;
      const auto ref = dfi_extended_sweep(f, g, 3000, o).weyl.at(0);
      CHECK(std::abs(w - ref) <= 1e-12);
    }
    CHECK_THROWS(multi_weyl(f, 100, std::vector<std::int64_t>{0, 0}));
    CHECK_THROWS(multi_weyl(f, 100, std::vector<std::int64_t>{1}));
    CHECK(std::abs(multi_weyl(f, 100000, std::vector<std::int64_t>{1, 0})) <= 0.1);
  }

  TEST_CASE("sp_check examples") {
    const auto r3 = sp_check(3, 10);
    const auto it = std::find_if(r3.begin(), r3.end(), [](const SpRecord& r) { return r.p == 7; });
    REQUIRE(it != r3.end());
    CHECK(it->inverse == 5);
    CHECK(it->distance == Angle(1, 21));
    CHECK(it->nearest == 2);
    CHECK(it->closed_form);
    CHECK(it->pairing);
    for (const auto& r : sp_check(2, 500)) {
      CHECK(r.inverse == (r.p + 1) / 2);
      CHECK(r.distance == Angle(1, 2 * r.p));
    }
    for (const auto& r : sp_check(1, 100)) {
      CHECK(r.distance == Angle(1, r.p));
      CHECK(r.closed_form);
    }
    for (u64 n = 1; n <= 12; ++n) {
      for (const auto& r : sp_check(n, 3000)) {
        CHECK(n % r.p != 0);
        CHECK(r.closed_form);
        CHECK(r.pairing);
        CHECK(oracle::mulm(r.inverse, n % r.p, r.p) == 1 % r.p);
      }
    }
  }

  TEST_CASE("ks statistic") {
    CHECK(ks_statistic(std::vector<Angle>{Angle(1, 2)}) == 0.5);
    CHECK_THROWS(ks_statistic(std::vector<Angle>{}));
    for (u64 n : {1ULL, 7ULL, 100ULL}) {
      std::vector<Angle> grid;
      for (u64 i = 0; i < n; ++i) grid.push_back(Angle(i, n));
      CHECK(ks_statistic(grid) <= 1.0 / double(n) + 1e-15);
    }
    std::mt19937_64 rng(8);
    std::vector<Angle> xs;
    std::vector<double> vs;
    for (int i = 0; i < 300; ++i) {
      xs.push_back(Angle(rng() % 1000, 1000));
      vs.push_back(xs.back().value());
    }
    CHECK(ks_statistic(xs) == doctest::Approx(oracle::ks(vs)).epsilon(1e-12));
  }

  TEST_CASE("weyl sums") {
    const auto s = dfi_sweep(ip({1, 0, 1}), 5000);
    for (std::int64_t h = 1; h <= 4; ++h) {
      CHECK(std::abs(weyl_sum(s.samples, -h) - std::conj(weyl_sum(s.samples, h))) <= 1e-15);
    }
    CHECK(weyl_sum(s.samples, 0) == std::complex<double>(1, 0));
    CHECK_THROWS(weyl_sum(std::vector<Sample>{}, 1));
  }

  TEST_CASE("sweeps do not depend on the team size") {
    EquidistOptions one, four;
    four.jobs = 4;
    const auto a = dfi_sweep(ip({-2, 0, 0, 1}), 20000, one);
    const auto b = dfi_sweep(ip({-2, 0, 0, 1}), 20000, four);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(a.samples[i].angle == b.samples[i].angle);
    CHECK(a.ks == b.ks);
    CHECK(a.weyl == b.weyl);
    const auto s1 = sp_check(7, 20000, 1), s4 = sp_check(7, 20000, 4);
    REQUIRE(s1.size() == s4.size());
    for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i].distance == s4[i].distance);
  }
}

TEST_SUITE("sweep") {
  TEST_CASE("parallel map equals the serial loop") {
    const auto ps = primes_in(50000);
    auto fn = [](u64 p) { return pow_mod(3, p - 1, p) + mix64(p) % 1000; };
    const auto a = map_primes_serial(std::span<const u64>(ps), fn);
    for (int jobs : {1, 2, 8}) CHECK(map_primes(std::span<const u64>(ps), jobs, fn) == a);
  }

  TEST_CASE("first exception in input order wins") {
    const auto ps = primes_in(1000);
    auto fn = [](u64 p) -> u64 {
      if (p == 101) throw Error("first");
      if (p == 701) throw Error("second");
      return p;
    };
    CHECK_THROWS_WITH(map_primes(std::span<const u64>(ps), 4, fn), "first");
    CHECK_THROWS_WITH(map_primes_serial(std::span<const u64>(ps), fn), "first");
  }
}
