#pragma once

// Multivariate polynomials with rational coefficients, and their reductions
// modulo a prime.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pfkit/arith.hpp"
#include "pfkit/field.hpp"

namespace pfkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Reduces a rational to F_p; throws BadPrime if p divides the denominator.
u64 reduce_rational(const Rational& r, u64 p);

class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Coefficient of the given monomial (zero when absent).
  Rational coeff(const Exponents& e) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  MPoly pow(std::uint32_t e) const;
  MPoly scaled(const Rational& c) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_arity(const MPoly& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Canonical text form, terms in descending grlex order, e.g.
/// "-x^3 + y^2 - 1/2*x". Variable names must cover every variable.
std::string to_string(const MPoly& f, std::span<const std::string> names);

/// A polynomial with coefficients reduced into F_p.
struct ReducedTerm {
  u64 coeff;
  Exponents exps;
};

class ReducedPoly {
 public:
  ReducedPoly(std::size_t nvars, u64 p) : nvars_(nvars), p_(p) {}
  /// Throws BadPrime when a coefficient denominator vanishes mod p.
  ReducedPoly(const MPoly& f, u64 p);

  std::size_t nvars() const { return nvars_; }
  u64 prime() const { return p_; }
  const std::vector<ReducedTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree_in(std::size_t var) const;
  void add_term(Exponents e, u64 c);

  /// Splits by powers of `var`: result[k] is the coefficient of var^k, a
  /// polynomial with no occurrence of var.
  std::vector<ReducedPoly> coefficients_in(std::size_t var) const;

  /// Dense coefficients of a univariate (nvars == 1) polynomial, trimmed.
  std::vector<u64> dense_univariate() const;

  template <FieldLike F>
  typename F::Elem eval(const F& f, std::span<const typename F::Elem> x) const {
    auto acc = f.zero();
    for (const auto& t : terms_) {
      auto v = f.from_int(t.coeff);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t.exps[i]) v = f.mul(v, f.pow(x[i], t.exps[i]));
      }
      acc = f.add(acc, v);
    }
    return acc;
  }

 private:
  std::size_t nvars_;
  u64 p_;
  std::vector<ReducedTerm> terms_;
};

/// An affine system: the common zeros of `equations` in nvars variables.
struct PointSystem {
  std::size_t nvars = 1;
  std::vector<MPoly> equations;
};

/// Integer polynomial in one variable, little-endian, no trailing zeros.
using IntPoly = std::vector<BigInt>;
/// Rational polynomial in one variable, little-endian, no trailing zeros.
using RatPoly = std::vector<Rational>;

/// Coefficients of a univariate MPoly (nvars == 1).
RatPoly to_ratpoly(const MPoly& f);
/// Integer coefficients of a univariate MPoly; throws if any is fractional.
IntPoly to_intpoly(const MPoly& f);

/// Reduction of an integer polynomial mod p, trimmed.
std::vector<u64> reduce_intpoly(const IntPoly& f, u64 p);
/// Reduction of a rational polynomial mod p; throws BadPrime.
std::vector<u64> reduce_ratpoly(const RatPoly& f, u64 p);

}  // namespace pfkit
