#include "pfkit/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "pfkit/error.hpp"

namespace pfkit {

void LaurentPoly::add_term(const LaurentExponents& m, const ComplexRational& c) {
  if (m.size() != nvars_) throw Error("Laurent exponent arity mismatch");
  auto& slot = terms_[m];
  slot.re += c.re;
  slot.im += c.im;
  if (slot.re == 0 && slot.im == 0) terms_.erase(m);
}

std::int64_t LaurentPoly::degree_bound() const {
  std::int64_t d = 0;
  for (const auto& [m, c] : terms_) {
    for (auto v : m) d = std::max<std::int64_t>(d, v < 0 ? -v : v);
  }
  return d;
}

double LaurentPoly::coefficient_l1() const {
  double s = 0;
  for (const auto& [m, c] : terms_) s += std::abs(c.to_complex());
  return s;
}

bool LaurentPoly::is_real() const {
  for (const auto& [m, c] : terms_) {
    LaurentExponents neg(m.size());
    std::transform(m.begin(), m.end(), neg.begin(), [](std::int64_t v) { return -v; });
    auto it = terms_.find(neg);
    if (it == terms_.end() || !(it->second == c.conj())) return false;
  }
  return true;
}

bool LaurentPoly::has_constant_term() const {
  return terms_.count(LaurentExponents(nvars_, 0)) > 0;
}

void LaurentPoly::validate_real_mean_zero() const {
  if (!is_real()) throw Error("Laurent polynomial is not real valued: coefficient at -m must conjugate the one at m");
  if (has_constant_term()) throw Error("Laurent polynomial must have no constant term");
}

std::complex<double> LaurentPoly::eval_at_residues(std::span<const u64> x, const UnitRootTable& roots) const {
  if (x.size() != nvars_) throw Error("point arity mismatch");
  const u64 p = roots.modulus();
  ComplexSum sum;
  for (const auto& [m, c] : terms_) {
    u64 phase = 0;
    for (std::size_t i = 0; i < nvars_; ++i) phase = add_mod(phase, mul_mod(reduce_signed(m[i], p), x[i] % p, p), p);
    sum.add(c.to_complex() * roots[phase]);
  }
  return sum.value();
}

std::pair<LaurentExponents, ComplexRational> parse_laurent_term(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("Laurent term needs 'exponents:coefficient'");
  LaurentExponents m;
  std::stringstream es(text.substr(0, colon));
  std::string item;
  try {
    while (std::getline(es, item, ',')) {
      std::size_t used = 0;
      m.push_back(std::stoll(item, &used));
      if (used != item.size()) throw Error("bad exponent '" + item + "'");
    }
    ComplexRational c;
    const std::string rest = text.substr(colon + 1);
    const auto colon2 = rest.find(':');
    c.re = Rational(rest.substr(0, colon2));
    if (colon2 != std::string::npos) c.im = Rational(rest.substr(colon2 + 1));
    if (m.empty()) throw Error("Laurent term has no exponents");
    return {m, c};
  } catch (const std::logic_error&) {
    throw Error("cannot parse Laurent term '" + text + "'");
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error("cannot parse Laurent term '" + text + "'");
  }
}

}  // namespace pfkit
