#pragma once

// Prime fields F_p and extension fields F_{p^e} = F_p[t]/(m(t)).
//
// Both field types model the FieldLike concept below so that the polynomial
// and enumeration algorithms can be written once. Elements are plain values;
// the field objects carry the modulus and are immutable after construction.

#include <compare>
#include <concepts>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "pfkit/arith.hpp"

namespace pfkit {

template <class F>
concept FieldLike = requires(const F& f, const typename F::Elem& a, u64 n, std::mt19937_64& rng) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.sub(a, a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.pow(a, n) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.from_int(n) } -> std::same_as<typename F::Elem>;
  { f.element(n) } -> std::same_as<typename F::Elem>;
  { f.index(a) } -> std::same_as<u64>;
  { f.random(rng) } -> std::same_as<typename F::Elem>;
  { f.order() } -> std::same_as<u64>;
  { f.characteristic() } -> std::same_as<u64>;
};

class PrimeField {
 public:
  using Elem = u64;

  /// Throws pfkit::Error unless p is a prime below 2^63.
  explicit PrimeField(u64 p);

  u64 characteristic() const { return p_; }
  u64 order() const { return p_; }
  unsigned degree() const { return 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return add_mod(a, b, p_); }
  Elem sub(Elem a, Elem b) const { return sub_mod(a, b, p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return mul_mod(a, b, p_); }
  Elem inv(Elem a) const { return inv_mod(a, p_); }
  Elem pow(Elem a, u64 e) const { return pow_mod(a, e, p_); }
  bool is_zero(Elem a) const { return a == 0; }
  Elem from_int(u64 n) const { return n % p_; }
  Elem element(u64 index) const { return index; }
  u64 index(Elem a) const { return a; }
  Elem random(std::mt19937_64& rng) const { return std::uniform_int_distribution<u64>(0, p_ - 1)(rng); }

 private:
  u64 p_;
};

/// Element of F_{p^e}: e residues, little-endian in the power basis of the
/// modulus root t. Ordering is lexicographic on the coefficient vector.
struct FqElem {
  std::vector<u64> coeffs;

  friend bool operator==(const FqElem&, const FqElem&) = default;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

struct ExtFieldDesc {
  u64 p = 2;
  unsigned e = 1;
  /// Monic modulus of degree e, little-endian, size e + 1. For e = 1 the
  /// modulus is t itself, making F_q a trivial wrapper around F_p.
  std::vector<u64> modulus{0, 1};

  friend bool operator==(const ExtFieldDesc&, const ExtFieldDesc&) = default;
};

class ExtField {
 public:
  using Elem = FqElem;

  /// Validates the descriptor: p prime, modulus monic of degree e and
  /// irreducible over F_p, and q = p^e below 2^63.
  explicit ExtField(ExtFieldDesc desc);

  const ExtFieldDesc& desc() const { return desc_; }
  u64 characteristic() const { return desc_.p; }
  u64 order() const { return q_; }
  unsigned degree() const { return desc_.e; }

  Elem zero() const { return FqElem{std::vector<u64>(desc_.e, 0)}; }
  Elem one() const { return from_int(1); }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, u64 e) const;
  bool is_zero(const Elem& a) const;
  Elem from_int(u64 n) const;
  /// Elements in canonical (lexicographic) order: index 0 is zero.
  Elem element(u64 index) const;
  u64 index(const Elem& a) const;
  Elem random(std::mt19937_64& rng) const;

  Elem frobenius(const Elem& a) const { return pow(a, desc_.p); }
  bool in_prime_subfield(const Elem& a) const;
  /// Throws unless x has exactly e entries, each below p.
  void validate(const Elem& x) const;

 private:
  ExtFieldDesc desc_;
  u64 q_;
};

/// Monic irreducible of degree e over F_p, smallest when coefficients are
/// compared from t^{e-1} down to t^0. For e = 1 returns the modulus t.
ExtFieldDesc build_extension(u64 p, unsigned e);

/// Absolute trace F_q -> F_p, sum of the Galois conjugates x^{p^i}.
u64 fq_trace(const FqElem& x, const ExtField& field);

/// True when the monic polynomial (little-endian) is irreducible over F_p.
bool is_irreducible_mod_p(const std::vector<u64>& monic, u64 p);

std::string to_string(const FqElem& x);

}  // namespace pfkit
