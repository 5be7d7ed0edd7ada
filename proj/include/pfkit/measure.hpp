#pragma once

// Finite-level pseudo-finite measures, the normalised Fourier transform on
// F_p^n and Weyl moments of pushforwards to the torus.

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pfkit/mpoly.hpp"
#include "pfkit/points.hpp"

namespace pfkit {

struct SweepOptions {
  u64 budget = kDefaultEnumerationBudget;
  int jobs = 1;
};

struct MeasureRecord {
  u64 p = 0;
  u64 count = 0;         ///< |X(F_p)|
  u64 count_other = 0;   ///< |X'(F_p)| for mu1, else 0
  double normalized = 0;
  bool skipped = false;
  std::string reason;
};

struct MeasureSeries {
  int declared_dim = 0;
  std::vector<MeasureRecord> records;
  /// least-squares slope of log count against log p; absent with < 2 usable primes
  std::optional<double> fitted_dim;
  std::vector<std::string> warnings;
};

/// |D(F_p)| / p^dim for every prime. Primes where the system does not
/// reduce or the enumeration budget is exceeded are recorded as skipped.
MeasureSeries mu0_sweep(const PointSystem& system, int declared_dim, std::span<const u64> primes,
                        const SweepOptions& opts = {});

/// p^{1/2 - dim} (|X(F_p)| - |X'(F_p)|).
MeasureSeries mu1_sweep(const PointSystem& x, const PointSystem& x_prime, int declared_dim,
                        std::span<const u64> primes, const SweepOptions& opts = {});

/// A complex value for every point of F_p^n, indexed lexicographically:
/// index(x) = sum_i x_i p^{n-1-i}.
struct ValueTable {
  u64 p = 2;
  std::size_t n = 1;
  std::vector<std::complex<double>> entries;

  ValueTable() = default;
  /// Zero table; throws BudgetExceeded when p^n > budget.
  ValueTable(u64 p, std::size_t n, u64 budget = u64{1} << 24);

  u64 size() const { return entries.size(); }
  u64 index(std::span<const u64> x) const;
  std::vector<u64> point(u64 index) const;
};

inline constexpr u64 kDefaultFourierBudget = u64{1} << 24;

struct FourierOptions {
  u64 budget = kDefaultFourierBudget;
  int jobs = 1;
};

/// F(phi)(y) = p^{-n} sum_x Psi_p(x . y) phi(x), computed one axis at a time
/// with lines shared out over an OpenMP team.
ValueTable fourier_table(const ValueTable& phi, const FourierOptions& opts = {});

/// Direct O(p^{2n}) evaluation of the same definition; the serial reference.
ValueTable fourier_table_reference(const ValueTable& phi, u64 budget = kDefaultFourierBudget);

struct WeylMoment {
  std::vector<std::int64_t> m;
  std::complex<double> value;
};

/// W_m = |D|^{-1} sum_{x in D} Psi_p(m . x) for m = 0 and all 0 < |m|_inf <= M,
/// m in lexicographic order. Throws "no points" when D(F_p) is empty.
std::vector<WeylMoment> pushforward_weyl(const PointSystem& system, u64 p, std::int64_t max_moment,
                                         const EnumOptions& opts = {});

}  // namespace pfkit
