#pragma once

// Equidistribution experiments over prime sweeps: angles nu/p of the roots
// of an irreducible integer polynomial mod p, their generalisation
// Psi_p(g(nu)), joint Weyl sums for powers of a root, and the exact SP[n]
// congruence law for Psi_p(1/n).

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pfkit/angle.hpp"
#include "pfkit/arith.hpp"
#include "pfkit/mpoly.hpp"

namespace pfkit {

struct Sample {
  u64 p = 0;
  u64 root = 0;
  Angle angle;
};

struct SkippedPrime {
  u64 p = 0;
  std::string reason;
};

struct EquidistOptions {
  std::optional<Congruence> congruence;
  /// keep only primes where f splits into deg f linear factors
  bool split_only = false;
  unsigned weyl_depth = 5;
  unsigned hist_bins = 0;
  int jobs = 1;
};

struct SweepReport {
  std::size_t degree = 0;
  u64 xlimit = 0;
  std::vector<Sample> samples;
  std::size_t primes_used = 0;
  /// absent when there are no samples
  std::optional<double> ks;
  /// W_h for h = 1..weyl_depth, absent when there are no samples
  std::vector<std::complex<double>> weyl;
  std::vector<u64> histogram;
  std::vector<SkippedPrime> skipped;
  bool empty = true;
  double wall_seconds = 0;
};

/// Angles nu/p for every root nu of f mod p, over the primes p <= xlimit not
/// dividing lc(f) disc(f). Throws for reducible f or deg f < 2.
SweepReport dfi_sweep(const IntPoly& f, u64 xlimit, const EquidistOptions& opts = {});

/// Angles of Psi_p(g(nu)) over the same roots. Throws when g(a) is rational in
/// Q[X]/(f). Primes dividing a denominator of g are skipped as well.
SweepReport dfi_extended_sweep(const IntPoly& f, const RatPoly& g, u64 xlimit, const EquidistOptions& opts = {});

/// Average over the same sample set of Psi_p(sum_i h_i nu^i), i = 1..d-1,
/// assembled as the product of the characters of the separate powers.
std::complex<double> multi_weyl(const IntPoly& f, u64 xlimit, std::span<const std::int64_t> h,
                                const EquidistOptions& opts = {});

/// W_h = N^{-1} sum over samples of exp(2 pi i h angle).
std::complex<double> weyl_sum(std::span<const Sample> samples, std::int64_t h);

/// Kolmogorov-Smirnov distance between the empirical distribution of the
/// angles in [0, 1) and the uniform distribution. Throws on empty input.
double ks_statistic(std::span<const Angle> angles);

struct SpRecord {
  u64 p = 0;
  u64 k = 0;              ///< p mod n
  u64 inverse = 0;        ///< m = n^{-1} mod p
  Angle angle;            ///< m/p
  u64 nearest = 0;        ///< t with t/n nearest to m/p (the lower on ties)
  Angle distance;         ///< |m/p - t/n| on the circle, exact
  bool closed_form = false;  ///< distance == 1/(n p)
  bool pairing = false;      ///< t k = -1 (mod n), i.e. Psi(-k/n) tends to e(1/n)
};

/// One record per prime p <= xlimit with p not dividing n.
std::vector<SpRecord> sp_check(u64 n, u64 xlimit, int jobs = 1);

}  // namespace pfkit
