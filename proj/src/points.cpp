#include "pfkit/points.hpp"

namespace pfkit {

namespace detail {

ReducedSystem reduce_system(const PointSystem& system, u64 p) {
  ReducedSystem rs{system.nvars, {}, std::nullopt, {}};
  const std::size_t last = system.nvars - 1;
  unsigned best = 0;
  for (const auto& eq : system.equations) {
    if (eq.nvars() != system.nvars) throw Error("equation arity does not match the system");
    rs.equations.emplace_back(eq, p);
    const unsigned d = rs.equations.back().degree_in(last);
    if (d > 0 && (!rs.pivot || d < best)) {
      rs.pivot = rs.equations.size() - 1;
      best = d;
    }
  }
  if (rs.pivot) rs.pivot_coeffs = rs.equations[*rs.pivot].coefficients_in(last);
  return rs;
}

std::vector<std::pair<u64, u64>> coordinate_ranges(std::size_t nvars, u64 q, bool prime_field,
                                                   const EnumOptions& opts) {
  std::vector<std::pair<u64, u64>> ranges(nvars, {0, q});
  if (opts.box) {
    if (!prime_field) throw Error("box requires prime field");
    if (opts.box->ranges.size() != nvars) throw Error("box dimension does not match the system");
    for (std::size_t i = 0; i < nvars; ++i) {
      auto [lo, hi] = opts.box->ranges[i];
      ranges[i] = {std::min(lo, q), std::min(hi, q)};
    }
  }
  unsigned __int128 candidates = 1;
  for (const auto& [lo, hi] : ranges) {
    candidates *= hi > lo ? hi - lo : 0;
    if (candidates > opts.budget) {
      throw BudgetExceeded("enumeration budget exceeded", opts.budget);
    }
  }
  return ranges;
}

}  // namespace detail

u64 count_points(const PrimeField& field, const PointSystem& system, const EnumOptions& opts) {
  const std::size_t n = system.nvars;
  const bool last_unboxed =
      !opts.box || (opts.box->ranges.size() == n && opts.box->ranges.back().first == 0 &&
                    opts.box->ranges.back().second >= field.order());
  if (system.equations.size() != 1 || !last_unboxed) {
    u64 count = 0;
    visit_points(field, system, opts, [&](std::span<const u64>) { ++count; });
    return count;
  }
  const auto ranges = detail::coordinate_ranges(n, field.order(), true, opts);
  for (const auto& [lo, hi] : ranges) {
    if (lo >= hi) return 0;
  }
  const auto rs = detail::reduce_system(system, field.characteristic());
  if (!rs.pivot) {
    // The single equation does not involve the last variable.
    u64 count = 0;
    visit_points(field, system, opts, [&](std::span<const u64>) { ++count; });
    return count;
  }
  const std::size_t last = n - 1;
  std::vector<u64> point(n, 0);
  for (std::size_t i = 0; i < last; ++i) point[i] = ranges[i].first;
  u64 count = 0;
  for (;;) {
    upoly::Poly<PrimeField> fibre;
    for (const auto& c : rs.pivot_coeffs) fibre.push_back(c.eval(field, std::span<const u64>(point)));
    upoly::trim(field, fibre);
    count += upoly::distinct_root_count(field, fibre);
    std::size_t k = last;
    bool done = last == 0;
    while (k > 0) {
      --k;
      if (++point[k] < ranges[k].second) break;
      point[k] = ranges[k].first;
      if (k == 0) done = true;
    }
    if (done) return count;
  }
}

}  // namespace pfkit
