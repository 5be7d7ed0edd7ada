#include "pfkit/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pfkit/error.hpp"

namespace pfkit {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return a < b;
}

u64 reduce_rational(const Rational& r, u64 p) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt pm = p;
  BigInt dr = den % pm;
  if (dr == 0) throw BadPrime(p);
  BigInt nr = num % pm;
  if (nr < 0) nr += pm;
  return mul_mod(static_cast<u64>(nr), inv_mod(static_cast<u64>(dr), p), p);
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly f(nvars);
  f.add_term(Exponents(nvars, 0), c);
  return f;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error("variable index out of range");
  MPoly f(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  f.add_term(e, 1);
  return f;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

unsigned MPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.rbegin()->first;
  return static_cast<unsigned>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[var]);
  return d;
}

Rational MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw Error("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MPoly::check_arity(const MPoly& o) const {
  if (o.nvars_ != nvars_) throw Error("polynomials live in different numbers of variables");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_arity(b);
  MPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.nvars_);
      for (std::size_t i = 0; i < e.size(); ++i) {
        const std::uint64_t s = std::uint64_t{ea[i]} + eb[i];
        if (s > UINT32_MAX) throw Error("exponent overflow");
        e[i] = static_cast<std::uint32_t>(s);
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::operator-() const { return scaled(-1); }

MPoly MPoly::scaled(const Rational& c) const {
  MPoly r(nvars_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

MPoly MPoly::pow(std::uint32_t e) const {
  MPoly result = constant(nvars_, 1);
  MPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string to_string(const MPoly& f, std::span<const std::string> names) {
  if (names.size() < f.nvars()) throw Error("not enough variable names");
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    const bool is_monic_monomial = mag == 1;
    bool has_var = false;
    for (std::size_t i = 0; i < e.size(); ++i) has_var = has_var || e[i] != 0;
    if (!is_monic_monomial || !has_var) factors.push_back(mag.str());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + std::to_string(e[i]));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << '*';
      os << factors[i];
    }
  }
  return os.str();
}

ReducedPoly::ReducedPoly(const MPoly& f, u64 p) : nvars_(f.nvars()), p_(p) {
  for (const auto& [e, c] : f.terms()) add_term(e, reduce_rational(c, p));
}

void ReducedPoly::add_term(Exponents e, u64 c) {
  if (c == 0) return;
  for (auto& t : terms_) {
    if (t.exps == e) {
      t.coeff = add_mod(t.coeff, c, p_);
      if (t.coeff == 0) {
        t = terms_.back();
        terms_.pop_back();
      }
      return;
    }
  }
  terms_.push_back(ReducedTerm{c, std::move(e)});
}

unsigned ReducedPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exps[var]);
  return d;
}

std::vector<ReducedPoly> ReducedPoly::coefficients_in(std::size_t var) const {
  std::vector<ReducedPoly> out(degree_in(var) + 1, ReducedPoly(nvars_, p_));
  for (const auto& t : terms_) {
    Exponents e = t.exps;
    const auto k = e[var];
    e[var] = 0;
    out[k].add_term(std::move(e), t.coeff);
  }
  return out;
}

std::vector<u64> ReducedPoly::dense_univariate() const {
  if (nvars_ != 1) throw Error("expected a univariate polynomial");
  std::vector<u64> out(degree_in(0) + 1, 0);
  for (const auto& t : terms_) out[t.exps[0]] = add_mod(out[t.exps[0]], t.coeff, p_);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

RatPoly to_ratpoly(const MPoly& f) {
  if (f.nvars() != 1) throw Error("expected a univariate polynomial");
  RatPoly out(f.is_zero() ? 0 : f.degree_in(0) + 1, Rational(0));
  for (const auto& [e, c] : f.terms()) out[e[0]] = c;
  return out;
}

IntPoly to_intpoly(const MPoly& f) {
  IntPoly out;
  for (const auto& c : to_ratpoly(f)) {
    if (boost::multiprecision::denominator(c) != 1) throw Error("expected integer coefficients");
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

std::vector<u64> reduce_intpoly(const IntPoly& f, u64 p) {
  std::vector<u64> out;
  out.reserve(f.size());
  const BigInt pm = p;
  for (const auto& c : f) {
    BigInt r = c % pm;
    if (r < 0) r += pm;
    out.push_back(static_cast<u64>(r));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<u64> reduce_ratpoly(const RatPoly& f, u64 p) {
  std::vector<u64> out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(reduce_rational(c, p));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace pfkit
