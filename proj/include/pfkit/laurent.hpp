#pragma once

// Finite Fourier series on the torus T^n, evaluated at points of the form
// (Psi(x_1), ..., Psi(x_n)).

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pfkit/angle.hpp"
#include "pfkit/mpoly.hpp"

namespace pfkit {

struct ComplexRational {
  Rational re = 0;
  Rational im = 0;

  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
  ComplexRational conj() const { return {re, -im}; }
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

using LaurentExponents = std::vector<std::int64_t>;

class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const std::map<LaurentExponents, ComplexRational>& terms() const { return terms_; }

  /// Adds c z^m; cancelling terms are removed.
  void add_term(const LaurentExponents& m, const ComplexRational& c);

  /// max over terms of the sup-norm of the exponent vector
  std::int64_t degree_bound() const;
  /// Sum of |c_m|, the constant b' of the sup estimate.
  double coefficient_l1() const;
  bool is_real() const;
  bool has_constant_term() const;

  /// Throws pfkit::Error unless the series is real valued on T^n and has no
  /// constant term.
  void validate_real_mean_zero() const;

  /// h(Psi_p(x_1), ..., Psi_p(x_n)) = sum_m c_m exp(2 pi i (m . x)/p).
  std::complex<double> eval_at_residues(std::span<const u64> x, const UnitRootTable& roots) const;

 private:
  std::size_t nvars_;
  std::map<LaurentExponents, ComplexRational> terms_;
};

/// Parses one "m_1,...,m_n:re[:im]" term spec, e.g. "2,-1:1" or "1,0:0:1/2".
std::pair<LaurentExponents, ComplexRational> parse_laurent_term(const std::string& text);

}  // namespace pfkit
