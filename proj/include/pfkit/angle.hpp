#pragma once

// Exact points of the circle group T = R/Z, and the bridge to complex
// doubles used only where sums are formed.

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pfkit/arith.hpp"

namespace pfkit {

/// The point exp(2 pi i num/den) of T, stored as a reduced fraction in [0, 1).
class Angle {
 public:
  Angle() = default;
  /// Any numerator is accepted and reduced mod den; den must be positive.
  Angle(u64 num, u64 den);
  static Angle from_signed(i64 num, u64 den);

  u64 num() const { return num_; }
  u64 den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Group operations in Q/Z; throws if the reduced denominator overflows.
  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b);
  Angle operator-() const;
  /// k-fold multiple, k any integer.
  Angle times(i64 k) const;

  friend bool operator==(const Angle&, const Angle&) = default;
  /// Order of the representatives in [0, 1).
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

  /// "a/b"; zero prints as "0/1".
  std::string str() const;
  /// Parses "a/b" or "a".
  static Angle parse(const std::string& text);

 private:
  u64 num_ = 0;
  u64 den_ = 1;
};

/// cos/sin of 2 pi a, reduced to the first quadrant with exact rational
/// arithmetic. Exact at multiples of 1/4, and angle_to_complex(-a) is the
/// bitwise conjugate of angle_to_complex(a).
std::complex<double> angle_to_complex(const Angle& a);

/// exp(2 pi i k/p) for k = 0..p-1, built from angle_to_complex so the table
/// has the same conjugate symmetry.
class UnitRootTable {
 public:
  explicit UnitRootTable(u64 p);
  u64 modulus() const { return p_; }
  const std::complex<double>& operator[](u64 k) const { return table_[k]; }

 private:
  u64 p_;
  std::vector<std::complex<double>> table_;
};

/// Neumaier-compensated complex accumulator.
class ComplexSum {
 public:
  void add(const std::complex<double>& z) {
    add_part(re_, re_c_, z.real());
    add_part(im_, im_c_, z.imag());
  }
  std::complex<double> value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

}  // namespace pfkit
