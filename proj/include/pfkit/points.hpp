#pragma once

// Brute-force point enumeration for affine systems over F_q.
//
// The first n-1 coordinates are enumerated in canonical order; the last
// coordinate is obtained as the root set of one "pivot" equation restricted
// to that fibre, and the remaining equations are checked pointwise. This
// visits exactly the common zeros, in lexicographic order.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pfkit/error.hpp"
#include "pfkit/field.hpp"
#include "pfkit/mpoly.hpp"
#include "pfkit/upoly.hpp"

namespace pfkit {

inline constexpr u64 kDefaultEnumerationBudget = 1'000'000'000ULL;

/// Half-open ranges [lo, hi) of residue representatives, one per coordinate.
struct PointBox {
  std::vector<std::pair<u64, u64>> ranges;
};

struct EnumOptions {
  std::optional<PointBox> box;
  u64 budget = kDefaultEnumerationBudget;
};

namespace detail {

struct ReducedSystem {
  std::size_t nvars;
  std::vector<ReducedPoly> equations;
  std::optional<std::size_t> pivot;
  /// pivot coefficients by power of the last variable
  std::vector<ReducedPoly> pivot_coeffs;
};

ReducedSystem reduce_system(const PointSystem& system, u64 p);

/// Per-coordinate [lo, hi) index ranges; checks the budget and box rules.
std::vector<std::pair<u64, u64>> coordinate_ranges(std::size_t nvars, u64 q, bool prime_field,
                                                   const EnumOptions& opts);

}  // namespace detail

/// Calls visit(span<const Elem>) for every common zero, in lexicographic
/// order. Throws BudgetExceeded when the candidate box exceeds opts.budget and
/// BadPrime when the system does not reduce mod p.
template <FieldLike F, class Visitor>
void visit_points(const F& field, const PointSystem& system, const EnumOptions& opts, Visitor&& visit) {
  using Elem = typename F::Elem;
  const std::size_t n = system.nvars;
  if (n < 1) throw Error("point enumeration needs at least one variable");
  const bool prime_field = field.order() == field.characteristic();
  const auto ranges = detail::coordinate_ranges(n, field.order(), prime_field, opts);
  for (const auto& [lo, hi] : ranges) {
    if (lo >= hi) return;
  }
  const auto rs = detail::reduce_system(system, field.characteristic());
  const std::size_t last = n - 1;

  std::vector<u64> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = ranges[i].first;
  std::vector<Elem> point(n, field.zero());
  for (std::size_t i = 0; i < last; ++i) point[i] = field.element(idx[i]);

  auto holds = [&](std::size_t skip) {
    for (std::size_t k = 0; k < rs.equations.size(); ++k) {
      if (rs.pivot && k == skip) continue;
      if (!field.is_zero(rs.equations[k].eval(field, std::span<const Elem>(point)))) return false;
    }
    return true;
  };
  const std::size_t pivot = rs.pivot.value_or(rs.equations.size());
  const auto [last_lo, last_hi] = ranges[last];

  for (;;) {
    bool full_fibre = true;
    std::vector<Elem> candidates;
    if (rs.pivot) {
      upoly::Poly<F> fibre;
      fibre.reserve(rs.pivot_coeffs.size());
      for (const auto& c : rs.pivot_coeffs) fibre.push_back(c.eval(field, std::span<const Elem>(point)));
      upoly::trim(field, fibre);
      if (!fibre.empty()) {
        full_fibre = false;
        candidates = upoly::roots(field, fibre);
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      }
    }
    if (full_fibre) {
      for (u64 v = last_lo; v < last_hi; ++v) {
        point[last] = field.element(v);
        if (holds(pivot)) visit(std::span<const Elem>(point));
      }
    } else {
      for (const auto& r : candidates) {
        const u64 v = field.index(r);
        if (v < last_lo || v >= last_hi) continue;
        point[last] = r;
        if (holds(pivot)) visit(std::span<const Elem>(point));
      }
    }
    // odometer over the first n-1 coordinates
    std::size_t k = last;
    while (k > 0) {
      --k;
      if (++idx[k] < ranges[k].second) {
        point[k] = field.element(idx[k]);
        break;
      }
      idx[k] = ranges[k].first;
      point[k] = field.element(idx[k]);
      if (k == 0) return;
    }
    if (last == 0) return;
  }
}

/// All common zeros in lexicographic order.
template <FieldLike F>
std::vector<std::vector<typename F::Elem>> enumerate_points(const F& field, const PointSystem& system,
                                                            const EnumOptions& opts = {}) {
  std::vector<std::vector<typename F::Elem>> out;
  visit_points(field, system, opts,
               [&](std::span<const typename F::Elem> x) { out.emplace_back(x.begin(), x.end()); });
  return out;
}

/// Number of common zeros over a prime field. A single equation without a
/// box is counted fibrewise from gcd degrees, without splitting.
u64 count_points(const PrimeField& field, const PointSystem& system, const EnumOptions& opts = {});

}  // namespace pfkit
