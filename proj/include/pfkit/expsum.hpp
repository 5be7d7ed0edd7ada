#pragma once

// Exponential sums over affine point sets, the Weil bound on A^1, the sup
// test for mean-zero Fourier series on curves, rational hyperplane search,
// and box counts.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pfkit/angle.hpp"
#include "pfkit/character.hpp"
#include "pfkit/laurent.hpp"
#include "pfkit/mpoly.hpp"
#include "pfkit/points.hpp"

namespace pfkit {

/// sum over the points x of the system of Psi(c f(x)), c the character twist.
std::complex<double> exp_sum(const PointSystem& system, const MPoly& f, const CharacterDesc& ch,
                             const EnumOptions& opts = {});

/// Same sum over an explicit list of points of F_p^n.
std::complex<double> exp_sum_points(std::span<const std::vector<u64>> points, const MPoly& f,
                                    const CharacterDesc& ch);

/// sum_{x in F_p} exp(2 pi i twist f(x)/p) for dense f reduced mod p.
std::complex<double> exp_sum_univariate(std::span<const u64> coeffs, u64 twist, const UnitRootTable& roots);

struct WeilRecord {
  u64 p = 0;
  unsigned degree = 0;
  std::complex<double> sum;
  double magnitude = 0;
  double bound = 0;
  double normalized = 0;  ///< magnitude / sqrt(p)
  bool pass = false;
};

inline constexpr double kWeilSlack = 1e-6;

/// Checks |sum_x Psi(f(x))| <= (deg f - 1) sqrt(p) for univariate f over a
/// prime field. Throws when deg(f mod p) < 1 or when p divides the degree.
WeilRecord weil_check(const MPoly& f, const CharacterDesc& ch);
/// Same, reusing a table of exp(2 pi i k/p).
WeilRecord weil_check(const MPoly& f, const CharacterDesc& ch, const UnitRootTable& table);

struct Axiom3Result {
  u64 p = 0;
  u64 points = 0;
  double sup = 0;
  double tolerance = 0;  ///< b' sqrt(p) / |C(F_p)|, b' = sum |coefficients|
  bool pass = false;
};

/// max over x in C(F_p) of h(Psi(x_1), ..., Psi(x_n)), compared with the
/// finite-p slack. h must be real valued with no constant term.
Axiom3Result axiom3_sup(const PointSystem& curve, const LaurentPoly& h, u64 p, const EnumOptions& opts = {});

struct HyperplaneOptions {
  u64 seed = 0;
  std::size_t primes = 3;
  u64 min_prime = 1'000'000;
  /// points per prime; 0 picks 2 D + 2 (at least 12) with D the Bezout bound
  std::size_t samples = 0;
  std::int64_t height_cap = 20;
};

struct HyperplaneRelation {
  std::vector<std::int64_t> coeffs;  ///< A, last nonzero entry positive
  std::int64_t height = 0;           ///< max |A_i|
  std::vector<u64> primes;
  std::vector<u64> residues;               ///< A . x mod p on the sampled points
  std::optional<std::int64_t> constant;    ///< b when the residues agree as a small integer
};

/// Searches for a nonzero A in Z^n, |A_i| <= m, with A . x constant on the
/// curve, by sampling points over several large primes. The answer "none" is
/// probabilistic. Throws "insufficient samples" when points cannot be found.
std::optional<HyperplaneRelation> hyperplane_height_test(const PointSystem& curve, std::int64_t m,
                                                         const HyperplaneOptions& opts = {});

struct BoxCountResult {
  u64 p = 0;
  u64 count = 0;
  double fraction = 0;           ///< count / p^dim
  double expected_fraction = 0;  ///< product of box widths / p
  double expected = 0;           ///< p^dim * expected_fraction
  bool hyperplane_checked = false;
  std::optional<HyperplaneRelation> hyperplane;
};

/// Points of the system whose representatives all fall in the box.
/// `hyperplane_height` > 0 also runs the hyperplane search.
BoxCountResult box_count(const PointSystem& system, u64 p, const PointBox& box, int declared_dim,
                         std::int64_t hyperplane_height = 0, const EnumOptions& opts = {});

}  // namespace pfkit
