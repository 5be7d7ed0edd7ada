#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's arithmetic: fields are rebuilt from schoolbook polynomial
// arithmetic, roots come from exhaustive scans, and character values from
// std::polar in long double.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using cld = std::complex<long double>;

inline u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((unsigned __int128)a * b % p); }

inline u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Fermat inverse; p prime, a != 0 mod p.
inline u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

inline bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline cld unit(u64 k, u64 p) {
  const long double pi = 3.141592653589793238462643383279502884L;
  return std::polar(1.0L, 2 * pi * static_cast<long double>(k % p) / static_cast<long double>(p));
}

/// Little-endian dense polynomial over F_p, value at x.
inline u64 eval_mod(const std::vector<u64>& f, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (mulm(acc, x, p) + f[i]) % p;
  return acc;
}

/// Roots in F_p with multiplicity, ascending, by exhaustive scan and
/// synthetic division.
inline std::vector<u64> scan_roots(std::vector<u64> f, u64 p) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  std::vector<u64> out;
  for (u64 r = 0; r < p; ++r) {
    std::vector<u64> g = f;
    while (g.size() > 1 && eval_mod(g, r, p) == 0) {
      // g = (x - r) q
      std::vector<u64> q(g.size() - 1);
      u64 carry = 0;
      for (std::size_t i = g.size() - 1; i-- > 0;) {
        carry = (g[i + 1] + mulm(carry, r, p)) % p;
        q[i] = carry;
      }
      g = q;
      out.push_back(r);
    }
  }
  return out;
}

/// F_{p^e} = F_p[t]/(m) with schoolbook arithmetic; elements are
/// little-endian coefficient vectors of length e.
struct NaiveField {
  u64 p;
  std::vector<u64> m;  ///< monic, size e + 1

  std::size_t e() const { return m.size() - 1; }
  u64 q() const {
    u64 r = 1;
    for (std::size_t i = 0; i < e(); ++i) r *= p;
    return r;
  }

  std::vector<u64> element(u64 index) const {
    std::vector<u64> x(e());
    for (std::size_t i = e(); i-- > 0;) {
      x[i] = index % p;
      index /= p;
    }
    return x;
  }

  std::vector<u64> add(const std::vector<u64>& a, const std::vector<u64>& b) const {
    std::vector<u64> r(e());
    for (std::size_t i = 0; i < e(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }

  std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b) const {
    std::vector<u64> prod(2 * e(), 0);
    for (std::size_t i = 0; i < e(); ++i) {
      for (std::size_t j = 0; j < e(); ++j) prod[i + j] = (prod[i + j] + mulm(a[i], b[j], p)) % p;
    }
    for (std::size_t k = prod.size(); k-- > e();) {
      const u64 c = prod[k];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= e(); ++j) prod[k - e() + j] = (prod[k - e() + j] + p - mulm(c, m[j], p)) % p;
    }
    prod.resize(e());
    return prod;
  }

  std::vector<u64> scalar(u64 c) const {
    std::vector<u64> r(e(), 0);
    r[0] = c % p;
    return r;
  }

  bool is_zero(const std::vector<u64>& a) const {
    for (u64 c : a) {
      if (c) return false;
    }
    return true;
  }

  /// Trace of multiplication by x on the basis 1, t, .., t^{e-1}.
  u64 trace(const std::vector<u64>& x) const {
    u64 tr = 0;
    for (std::size_t i = 0; i < e(); ++i) {
      std::vector<u64> basis(e(), 0);
      basis[i] = 1;
      tr = (tr + mul(x, basis)[i]) % p;
    }
    return tr;
  }

  /// f(x) for f with coefficients in the field, little-endian.
  std::vector<u64> eval(const std::vector<std::vector<u64>>& f, const std::vector<u64>& x) const {
    std::vector<u64> acc(e(), 0);
    for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x), f[i]);
    return acc;
  }
};

/// True when the monic polynomial has no monic factor of degree 1..deg/2,
/// found by dividing by every candidate.
inline bool trial_irreducible(const std::vector<u64>& f, u64 p) {
  const std::size_t d = f.size() - 1;
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    u64 count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
      std::vector<u64> g(k + 1, 0);
      u64 t = idx;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[k] = 1;
      std::vector<u64> r = f;
      for (std::size_t i = r.size(); i-- > k;) {
        const u64 c = r[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= k; ++j) r[i - k + j] = (r[i - k + j] + p - mulm(c, g[j], p)) % p;
      }
      bool zero = true;
      for (std::size_t i = 0; i < k; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

/// sum_x e(f(x)/p) over F_p.
inline cld exp_sum(const std::vector<u64>& f, u64 p) {
  cld s = 0;
  for (u64 x = 0; x < p; ++x) s += unit(eval_mod(f, x, p), p);
  return s;
}

/// Kolmogorov-Smirnov distance by counting, O(N^2).
inline double ks(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double d = 0;
  for (double t : xs) {
    double below = 0, at_or_below = 0;
    for (double u : xs) {
      if (u < t) ++below;
      if (u <= t) ++at_or_below;
    }
    d = std::max({d, std::abs(at_or_below / n - t), std::abs(below / n - t)});
  }
  return d;
}

}  // namespace oracle
