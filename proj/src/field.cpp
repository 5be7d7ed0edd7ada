#include "pfkit/field.hpp"

#include <sstream>

#include "pfkit/error.hpp"
#include "pfkit/upoly.hpp"

namespace pfkit {

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p >= kMaxModulus || !is_prime(p)) throw Error(std::to_string(p) + " is not a supported prime");
}

namespace {

u64 checked_power(u64 p, unsigned e) {
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q >= kMaxModulus) throw Error("field order p^e must stay below 2^63");
  }
  return static_cast<u64>(q);
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<u64>& monic, u64 p) {
  PrimeField fp(p);
  upoly::Poly<PrimeField> f(monic.begin(), monic.end());
  upoly::trim(fp, f);
  const long d = upoly::degree<PrimeField>(f);
  if (d < 1) return false;
  if (d == 1) return true;
  f = upoly::make_monic(fp, std::move(f));
  // Rabin: f is irreducible iff gcd(f, x^{p^i} - x) = 1 for i <= d/2.
  upoly::Poly<PrimeField> x{0, 1};
  upoly::Poly<PrimeField> power = x;
  for (long i = 1; i <= d / 2; ++i) {
    power = upoly::powmod(fp, power, p, f);
    auto g = upoly::gcd(fp, f, upoly::sub(fp, power, x));
    if (g.size() != 1) return false;
  }
  return true;
}

ExtField::ExtField(ExtFieldDesc desc) : desc_(std::move(desc)) {
  if (desc_.p >= kMaxModulus || !is_prime(desc_.p)) {
    throw Error(std::to_string(desc_.p) + " is not a supported prime");
  }
  if (desc_.e < 1) throw Error("extension degree must be at least 1");
  if (desc_.modulus.size() != desc_.e + 1 || desc_.modulus.back() != 1) {
    throw Error("modulus must be monic of degree e");
  }
  for (u64 c : desc_.modulus) {
    if (c >= desc_.p) throw Error("modulus coefficient out of range");
  }
  q_ = checked_power(desc_.p, desc_.e);
  if (desc_.e > 1 && !is_irreducible_mod_p(desc_.modulus, desc_.p)) {
    throw Error("modulus is reducible over F_" + std::to_string(desc_.p));
  }
}

FqElem ExtField::add(const FqElem& a, const FqElem& b) const {
  FqElem r{std::vector<u64>(desc_.e)};
  for (unsigned i = 0; i < desc_.e; ++i) r.coeffs[i] = add_mod(a.coeffs[i], b.coeffs[i], desc_.p);
  return r;
}

FqElem ExtField::sub(const FqElem& a, const FqElem& b) const {
  FqElem r{std::vector<u64>(desc_.e)};
  for (unsigned i = 0; i < desc_.e; ++i) r.coeffs[i] = sub_mod(a.coeffs[i], b.coeffs[i], desc_.p);
  return r;
}

FqElem ExtField::neg(const FqElem& a) const {
  FqElem r{std::vector<u64>(desc_.e)};
  for (unsigned i = 0; i < desc_.e; ++i) r.coeffs[i] = a.coeffs[i] == 0 ? 0 : desc_.p - a.coeffs[i];
  return r;
}

FqElem ExtField::mul(const FqElem& a, const FqElem& b) const {
  const unsigned e = desc_.e;
  const u64 p = desc_.p;
  if (e == 1) return FqElem{{mul_mod(a.coeffs[0], b.coeffs[0], p)}};
  std::vector<u64> prod(2 * e - 1, 0);
  for (unsigned i = 0; i < e; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < e; ++j) {
      prod[i + j] = add_mod(prod[i + j], mul_mod(a.coeffs[i], b.coeffs[j], p), p);
    }
  }
  // t^e = -(m_0 + ... + m_{e-1} t^{e-1})
  for (unsigned k = 2 * e - 1; k-- > e;) {
    u64 c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned j = 0; j < e; ++j) {
      prod[k - e + j] = sub_mod(prod[k - e + j], mul_mod(c, desc_.modulus[j], p), p);
    }
  }
  prod.resize(e);
  return FqElem{std::move(prod)};
}

FqElem ExtField::pow(const FqElem& a, u64 exp) const {
  FqElem result = one();
  FqElem base = a;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    exp >>= 1;
    if (exp) base = mul(base, base);
  }
  return result;
}

FqElem ExtField::inv(const FqElem& a) const {
  if (is_zero(a)) throw Error("inverse of zero in F_q");
  return pow(a, q_ - 2);
}

bool ExtField::is_zero(const FqElem& a) const {
  for (u64 c : a.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

FqElem ExtField::from_int(u64 n) const {
  FqElem r = zero();
  r.coeffs[0] = n % desc_.p;
  return r;
}

FqElem ExtField::element(u64 index) const {
  FqElem r = zero();
  for (unsigned i = desc_.e; i-- > 0;) {
    r.coeffs[i] = index % desc_.p;
    index /= desc_.p;
  }
  return r;
}

u64 ExtField::index(const FqElem& a) const {
  u64 idx = 0;
  for (unsigned i = 0; i < desc_.e; ++i) idx = idx * desc_.p + a.coeffs[i];
  return idx;
}

FqElem ExtField::random(std::mt19937_64& rng) const {
  return element(std::uniform_int_distribution<u64>(0, q_ - 1)(rng));
}

bool ExtField::in_prime_subfield(const FqElem& a) const {
  for (unsigned i = 1; i < desc_.e; ++i) {
    if (a.coeffs[i] != 0) return false;
  }
  return true;
}

void ExtField::validate(const FqElem& x) const {
  if (x.coeffs.size() != desc_.e) throw Error("element has wrong length for F_q");
  for (u64 c : x.coeffs) {
    if (c >= desc_.p) throw Error("element coefficient out of range");
  }
}

ExtFieldDesc build_extension(u64 p, unsigned e) {
  if (p >= kMaxModulus || !is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  if (e < 1) throw Error("extension degree must be at least 1");
  if (e == 1) return ExtFieldDesc{p, 1, {0, 1}};
  const u64 count = checked_power(p, e);
  std::vector<u64> m(e + 1, 0);
  m[e] = 1;
  // Counting in base p with the t^{e-1} coefficient most significant.
  for (u64 idx = 0; idx < count; ++idx) {
    u64 v = idx;
    for (unsigned i = 0; i < e; ++i) {
      m[i] = v % p;
      v /= p;
    }
    if (m[0] == 0) continue;
    if (is_irreducible_mod_p(m, p)) return ExtFieldDesc{p, e, m};
  }
  throw Error("no irreducible polynomial found");
}

u64 fq_trace(const FqElem& x, const ExtField& field) {
  field.validate(x);
  FqElem acc = x;
  FqElem conj = x;
  for (unsigned i = 1; i < field.degree(); ++i) {
    conj = field.frobenius(conj);
    acc = field.add(acc, conj);
  }
  if (!field.in_prime_subfield(acc)) throw Error("trace left the prime subfield");
  return acc.coeffs[0];
}

std::string to_string(const FqElem& x) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (i) os << ':';
    os << x.coeffs[i];
  }
  return os.str();
}

}  // namespace pfkit
