#pragma once

// Word-size modular arithmetic and prime generation.
//
// Residues are always represented by 0..p-1. Moduli must be below 2^63 so
// that sums of two residues never wrap.

#include <cstdint>
#include <optional>
#include <vector>

namespace pfkit {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 kMaxModulus = u64{1} << 63;

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m; throws pfkit::Error when gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

/// Reduces a signed integer to its representative in [0, m).
inline u64 reduce_signed(i64 a, u64 m) {
  i64 r = static_cast<i64>(static_cast<__int128>(a) % static_cast<__int128>(m));
  return r < 0 ? static_cast<u64>(r + static_cast<i64>(m)) : static_cast<u64>(r);
}

u64 gcd_u64(u64 a, u64 b);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Smallest prime strictly greater than n.
u64 next_prime(u64 n);

/// Residue class k mod m used to filter prime sweeps.
struct Congruence {
  u64 modulus;
  u64 residue;
};

/// All primes <= limit, optionally restricted to p = k (mod m), ascending.
std::vector<u64> primes_in(u64 limit, std::optional<Congruence> congruence = std::nullopt);

/// splitmix64 finaliser; used to derive reproducible per-prime seeds.
inline u64 mix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace pfkit
