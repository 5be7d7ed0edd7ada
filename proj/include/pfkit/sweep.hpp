#pragma once

// Prime-sharded map: fn(p) evaluated for every prime of a sweep.
//
// map_primes fans the work out over an OpenMP team; map_primes_serial is the
// plain loop kept as the reference. Both return results in input order, and
// per-prime work is sequential inside fn, so the two agree bit for bit
// whatever the team size. An exception thrown for one prime is rethrown
// after the loop (the first one in input order wins).

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "pfkit/arith.hpp"

namespace pfkit {

template <class Fn>
auto map_primes_serial(std::span<const u64> primes, Fn&& fn) {
  using R = std::invoke_result_t<Fn&, u64>;
  std::vector<R> out;
  out.reserve(primes.size());
  for (u64 p : primes) out.push_back(fn(p));
  return out;
}

template <class Fn>
auto map_primes(std::span<const u64> primes, int jobs, Fn&& fn) {
  using R = std::invoke_result_t<Fn&, u64>;
  if (jobs <= 1) return map_primes_serial(primes, fn);
  const auto n = static_cast<std::ptrdiff_t>(primes.size());
  std::vector<std::optional<R>> slots(primes.size());
  std::vector<std::exception_ptr> errors(primes.size());
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      slots[i].emplace(fn(primes[i]));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  std::vector<R> out;
  out.reserve(primes.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace pfkit
