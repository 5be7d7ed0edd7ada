#pragma once

// Dense univariate polynomials over a FieldLike field.
//
// A polynomial is a little-endian coefficient vector with no trailing zeros;
// the zero polynomial is the empty vector.

#include <algorithm>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "pfkit/error.hpp"
#include "pfkit/field.hpp"

namespace pfkit::upoly {

template <FieldLike F>
using Poly = std::vector<typename F::Elem>;

/// Fields up to this size are root-scanned element by element.
inline constexpr u64 kScanLimit = 64;

template <FieldLike F>
void trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <FieldLike F>
long degree(const Poly<F>& a) {
  return static_cast<long>(a.size()) - 1;
}

template <FieldLike F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <FieldLike F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

template <FieldLike F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

/// Quotient and remainder; throws on division by zero.
template <FieldLike F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  if (a.size() < b.size()) return {Poly<F>{}, a};
  const auto lead_inv = f.inv(b.back());
  Poly<F> q(a.size() - b.size() + 1, f.zero());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (f.is_zero(a[i])) continue;
    auto c = f.mul(a[i], lead_inv);
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
  }
  trim(f, a);
  trim(f, q);
  return {q, a};
}

template <FieldLike F>
Poly<F> mod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return divmod(f, a, b).second;
}

template <FieldLike F>
Poly<F> make_monic(const F& f, Poly<F> a) {
  if (a.empty()) return a;
  auto li = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, li);
  return a;
}

/// Monic gcd (zero when both inputs are zero).
template <FieldLike F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, std::move(a));
}

template <FieldLike F>
Poly<F> mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return mod(f, mul(f, a, b), m);
}

/// base^exp mod m.
template <FieldLike F>
Poly<F> powmod(const F& f, Poly<F> base, u64 exp, const Poly<F>& m) {
  Poly<F> result = mod(f, Poly<F>{f.one()}, m);
  base = mod(f, base, m);
  while (exp) {
    if (exp & 1) result = mulmod(f, result, base, m);
    exp >>= 1;
    if (exp) base = mulmod(f, base, base, m);
  }
  return result;
}

template <FieldLike F>
typename F::Elem eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
  auto acc = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

/// x^q - x reduced modulo m; its gcd with m is the product of the distinct
/// linear factors of m.
template <FieldLike F>
Poly<F> frobenius_minus_x(const F& f, const Poly<F>& m) {
  Poly<F> x{f.zero(), f.one()};
  return sub(f, powmod(f, x, f.order(), m), mod(f, x, m));
}

/// Number of distinct roots of a in the field (q for the zero polynomial).
template <FieldLike F>
u64 distinct_root_count(const F& f, const Poly<F>& a) {
  if (a.empty()) return f.order();
  if (a.size() == 1) return 0;
  if (a.size() == 2) return 1;
  auto g = gcd(f, a, frobenius_minus_x(f, make_monic(f, a)));
  return static_cast<u64>(degree<F>(g));
}

namespace detail {

template <FieldLike F>
void split_linear(const F& f, const Poly<F>& g, std::mt19937_64& rng, std::vector<typename F::Elem>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(f.neg(f.mul(g[0], f.inv(g[1]))));
    return;
  }
  const u64 q = f.order();
  for (;;) {
    auto delta = f.random(rng);
    Poly<F> split;
    if (q % 2 == 1) {
      Poly<F> base{delta, f.one()};
      auto h = powmod(f, base, (q - 1) / 2, g);
      split = sub(f, h, Poly<F>{f.one()});
    } else {
      // Characteristic 2: the trace map sum (delta x)^(2^i) takes values in F_2
      // on the roots and is balanced for random delta.
      Poly<F> term = mod(f, Poly<F>{f.zero(), delta}, g);
      Poly<F> acc = term;
      for (u64 k = q; k > 2; k >>= 1) {
        term = mulmod(f, term, term, g);
        acc = add(f, acc, term);
      }
      split = acc;
    }
    auto h = gcd(f, g, split);
    if (h.size() > 1 && h.size() < g.size()) {
      auto rest = make_monic(f, divmod(f, g, h).first);
      split_linear(f, h, rng, out);
      split_linear(f, rest, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Roots lying in the field itself, with multiplicity, sorted in canonical
/// element order. Throws on the zero polynomial.
///
/// Small fields are scanned exhaustively; otherwise the distinct roots are
/// extracted from gcd(a, x^q - x) by equal-degree splitting, with randomness
/// seeded from `seed` so results never depend on scheduling.
template <FieldLike F>
std::vector<typename F::Elem> roots(const F& f, Poly<F> a, u64 seed = 0) {
  trim(f, a);
  if (a.empty()) throw Error("zero polynomial");
  a = make_monic(f, std::move(a));
  std::vector<typename F::Elem> distinct;
  if (a.size() <= 1) return {};
  if (f.order() <= kScanLimit) {
    for (u64 i = 0; i < f.order(); ++i) {
      auto x = f.element(i);
      if (f.is_zero(eval(f, a, x))) distinct.push_back(x);
    }
  } else {
    auto g = gcd(f, a, frobenius_minus_x(f, a));
    u64 s = mix64(seed ^ mix64(f.order()));
    for (const auto& c : a) s = mix64(s ^ f.index(c));
    std::mt19937_64 rng(s);
    detail::split_linear(f, g, rng, distinct);
  }
  std::vector<typename F::Elem> out;
  for (const auto& r : distinct) {
    Poly<F> rest = a;
    Poly<F> lin{f.neg(r), f.one()};
    for (;;) {
      auto [quot, rem] = divmod(f, rest, lin);
      if (!rem.empty()) break;
      out.push_back(r);
      rest = std::move(quot);
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return f.index(x) < f.index(y); });
  return out;
}

/// Product of (x - r) over the given roots.
template <FieldLike F>
Poly<F> from_roots(const F& f, std::span<const typename F::Elem> rs) {
  Poly<F> acc{f.one()};
  for (const auto& r : rs) acc = mul(f, acc, Poly<F>{f.neg(r), f.one()});
  return acc;
}

}  // namespace pfkit::upoly
