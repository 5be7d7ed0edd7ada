#include "pfkit/angle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "pfkit/error.hpp"

namespace pfkit {

namespace {

using u128 = unsigned __int128;

Angle from_wide(u128 num, u128 den) {
  num %= den;
  u128 a = num, b = den;
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  if (num == 0) return Angle(0, 1);
  num /= a;
  den /= a;
  if (den > UINT64_MAX) throw Error("angle denominator overflow");
  return Angle(static_cast<u64>(num), static_cast<u64>(den));
}

}  // namespace

Angle::Angle(u64 num, u64 den) {
  if (den == 0) throw Error("angle denominator must be positive");
  num %= den;
  const u64 g = std::gcd(num, den);
  if (num == 0) {
    num_ = 0;
    den_ = 1;
  } else {
    num_ = num / g;
    den_ = den / g;
  }
}

Angle Angle::from_signed(i64 num, u64 den) {
  if (den == 0) throw Error("angle denominator must be positive");
  return Angle(reduce_signed(num, den), den);
}

Angle operator+(const Angle& a, const Angle& b) {
  if (a.den_ == b.den_) return Angle(add_mod(a.num_, b.num_, a.den_), a.den_);
  return from_wide(u128(a.num_) * b.den_ + u128(b.num_) * a.den_, u128(a.den_) * b.den_);
}

Angle Angle::operator-() const { return num_ == 0 ? *this : Angle(den_ - num_, den_); }

Angle operator-(const Angle& a, const Angle& b) { return a + (-b); }

Angle Angle::times(i64 k) const {
  const u64 km = reduce_signed(k, den_);
  return Angle(mul_mod(km, num_, den_), den_);
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  return u128(a.num_) * b.den_ <=> u128(b.num_) * a.den_;
}

std::string Angle::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Angle Angle::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const i64 n = std::stoll(text, &used);
      if (used != text.size()) throw Error("bad angle");
      return from_signed(n, 1);
    }
    const i64 n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw Error("bad angle");
    const std::string dtext = text.substr(slash + 1);
    const u64 d = std::stoull(dtext, &used);
    if (used != dtext.size()) throw Error("bad angle");
    return from_signed(n, d);
  } catch (const std::logic_error&) {
    throw Error("cannot parse angle '" + text + "'");
  }
}

std::complex<double> angle_to_complex(const Angle& a) {
  const u64 num = a.num();
  const u64 den = a.den();
  if (u128(num) * 2 > den) return std::conj(angle_to_complex(Angle(den - num, den)));
  // a in [0, 1/2]: split off whole quarter turns exactly.
  const u128 four = u128(num) * 4;
  const unsigned quadrant = static_cast<unsigned>(four / den);
  const u128 r = four - u128(quadrant) * den;
  double c, s;
  constexpr double half_pi = std::numbers::pi / 2;
  if (r == 0) {
    c = 1;
    s = 0;
  } else if (2 * r > den) {
    const double t = half_pi * (static_cast<double>(static_cast<u64>(den - r)) / static_cast<double>(den));
    c = std::sin(t);
    s = std::cos(t);
  } else {
    const double t = half_pi * (static_cast<double>(static_cast<u64>(r)) / static_cast<double>(den));
    c = std::cos(t);
    s = std::sin(t);
  }
  double re, im;
  switch (quadrant) {
    case 0: re = c; im = s; break;
    case 1: re = -s; im = c; break;
    default: re = -c; im = -s; break;
  }
  // keep zeros unsigned so conjugation stays exact
  if (re == 0) re = 0;
  if (im == 0) im = 0;
  return {re, im};
}

UnitRootTable::UnitRootTable(u64 p) : p_(p), table_(p) {
  if (p == 0) throw Error("unit root table needs a positive modulus");
  for (u64 k = 0; k < p; ++k) table_[k] = angle_to_complex(Angle(k, p));
}

}  // namespace pfkit
