#include "pfkit/number_field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pfkit/error.hpp"
#include "pfkit/field.hpp"

namespace pfkit {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

namespace {

constexpr int kCertificatePrimes = 25;
const BigInt kMaxTrialDivisor = BigInt(1'000'000'000'000LL);

BigInt big_gcd(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / big_gcd(a, b) * b);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

std::vector<BigInt> divisors(const BigInt& n) {
  const BigInt m = abs(n);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Determinant by fraction-free Bareiss elimination.
BigInt determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::string factor_text(const BigInt& s, const BigInt& r) {
  std::ostringstream os;
  if (s != 1) os << s << "*";
  os << "X";
  if (r > 0) os << " - " << r;
  if (r < 0) os << " + " << -r;
  return os.str();
}

IntPoly trimmed(IntPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

RatPoly rat_mod_monic(RatPoly g, const IntPoly& f) {
  const std::size_t d = f.size() - 1;
  for (std::size_t i = g.size(); i-- > d;) {
    const Rational c = g[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) g[i - d + j] -= c * Rational(f[j]);
  }
  g.resize(d, Rational(0));
  return g;
}

}  // namespace

std::string IrreducibilityCertificate::describe() const {
  switch (kind) {
    case Kind::Linear: return "linear";
    case Kind::NoRationalRoot: return "degree <= 3 without rational roots";
    case Kind::IrreducibleModPrime: return "irreducible mod " + std::to_string(prime);
  }
  return "";
}

BigInt discriminant(const IntPoly& f_in) {
  const IntPoly f = trimmed(f_in);
  if (f.size() < 2) throw Error("discriminant needs degree at least 1");
  const std::size_t d = f.size() - 1;
  if (d == 1) return 1;
  IntPoly df(d);
  for (std::size_t i = 1; i <= d; ++i) df[i - 1] = f[i] * static_cast<long long>(i);
  const std::size_t e = d - 1;
  const std::size_t n = d + e;
  std::vector<std::vector<BigInt>> syl(n, std::vector<BigInt>(n, 0));
  // rows hold coefficients from the leading term down
  for (std::size_t r = 0; r < e; ++r) {
    for (std::size_t j = 0; j <= d; ++j) syl[r][r + j] = f[d - j];
  }
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j <= e; ++j) syl[e + r][r + j] = df[e - j];
  }
  const BigInt res = determinant(std::move(syl));
  BigInt disc = res / f[d];
  if ((d * (d - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

IrreducibilityCertificate certify_irreducible(const IntPoly& f_in) {
  const IntPoly f = trimmed(f_in);
  if (f.size() < 2) throw Error("constant polynomial is not irreducible");
  const std::size_t d = f.size() - 1;
  if (d == 1) return {IrreducibilityCertificate::Kind::Linear, 0};

  if (f[0] == 0) throw Error("reducible: factor X");
  bool root_test_done = false;
  if (abs(f[0]) <= kMaxTrialDivisor && abs(f[d]) <= kMaxTrialDivisor) {
    const auto rs = divisors(f[0]);
    const auto ss = divisors(f[d]);
    for (const auto& s : ss) {
      for (const auto& r0 : rs) {
        if (big_gcd(r0, s) != 1) continue;
        for (int sign : {1, -1}) {
          const BigInt r = r0 * sign;
          // s^d f(r/s)
          BigInt acc = 0, rp = 1, sp = 1;
          std::vector<BigInt> spow(d + 1);
          for (std::size_t i = 0; i <= d; ++i) {
            spow[i] = sp;
            sp *= s;
          }
          for (std::size_t i = 0; i <= d; ++i) {
            acc += f[i] * rp * spow[d - i];
            rp *= r;
          }
          if (acc == 0) throw Error("reducible: factor " + factor_text(s, r));
        }
      }
    }
    root_test_done = true;
  }

  const BigInt disc = discriminant(f);
  int tried = 0;
  for (u64 p = 2; tried < kCertificatePrimes; p = next_prime(p)) {
    const BigInt pm = p;
    if (f[d] % pm == 0 || disc % pm == 0) continue;
    ++tried;
    auto red = reduce_intpoly(f, p);
    const u64 li = inv_mod(red.back(), p);
    for (auto& c : red) c = mul_mod(c, li, p);
    if (is_irreducible_mod_p(red, p)) return {IrreducibilityCertificate::Kind::IrreducibleModPrime, p};
  }
  if (root_test_done && d <= 3) return {IrreducibilityCertificate::Kind::NoRationalRoot, 0};
  throw Error("certificate not found");
}

NumberFieldDesc nf_build(const IntPoly& f_in) {
  const IntPoly f = trimmed(f_in);
  if (f.size() < 2) throw Error("number field needs a polynomial of degree at least 1");
  if (f.back() != 1) throw Error("number field polynomial must be monic");
  NumberFieldDesc K;
  K.f = f;
  K.certificate = certify_irreducible(f);
  K.disc = discriminant(f);
  return K;
}

NumberFieldDesc rational_field() {
  NumberFieldDesc K;
  K.f = {0, 1};
  K.disc = 1;
  K.certificate = {IrreducibilityCertificate::Kind::Linear, 0};
  return K;
}

bool NFElem::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < coords.size(); ++i) {
    if (coords[i] != 0) return false;
  }
  return true;
}

NFElem nf_from_poly(const RatPoly& g, const NumberFieldDesc& K) {
  return NFElem{rat_mod_monic(g, K.f)};
}

NFElem nf_add(const NFElem& a, const NFElem& b) {
  if (a.coords.size() != b.coords.size()) throw Error("elements of different fields");
  NFElem r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

NFElem nf_scale(const NFElem& a, const Rational& c) {
  NFElem r = a;
  for (auto& v : r.coords) v *= c;
  return r;
}

NFElem nf_mul(const NFElem& a, const NFElem& b, const NumberFieldDesc& K) {
  const std::size_t d = K.degree();
  if (a.coords.size() != d || b.coords.size() != d) throw Error("elements of a different field");
  RatPoly prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coords[i] * b.coords[j];
  }
  return NFElem{rat_mod_monic(prod, K.f)};
}

std::string to_string(const NFElem& x, const std::string& symbol) {
  std::vector<std::string> names{symbol};
  MPoly g(1);
  for (std::size_t i = 0; i < x.coords.size(); ++i) g.add_term(Exponents{static_cast<std::uint32_t>(i)}, x.coords[i]);
  return to_string(g, names);
}

u64 nf_reduce(const NFElem& x, const NumberFieldDesc& K, u64 p, u64 root) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  if (x.coords.size() != K.degree()) throw Error("element of a different field");
  root %= p;
  const auto fred = reduce_intpoly(K.f, p);
  u64 fv = 0;
  for (std::size_t i = fred.size(); i-- > 0;) fv = add_mod(mul_mod(fv, root, p), fred[i], p);
  if (fv != 0) throw Error("f(b) is not 0 mod p");
  u64 acc = 0;
  for (std::size_t i = x.coords.size(); i-- > 0;) acc = add_mod(mul_mod(acc, root, p), reduce_rational(x.coords[i], p), p);
  return acc;
}

std::vector<std::vector<BigInt>> qlin_relations(std::span<const NFElem> elems) {
  const std::size_t k = elems.size();
  if (k == 0) return {};
  const std::size_t d = elems[0].coords.size();
  for (const auto& e : elems) {
    if (e.coords.size() != d) throw Error("elements of different fields");
  }
  // A is d x k; its kernel is the relation space.
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(k));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = elems[j].coords[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < d; ++col) {
    std::size_t sel = row;
    while (sel < d && a[sel][col] == 0) ++sel;
    if (sel == d) continue;
    std::swap(a[row], a[sel]);
    const Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational c = a[i][col];
      for (std::size_t j = 0; j < k; ++j) a[i][j] -= c * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::vector<BigInt>> out;
  for (std::size_t free = 0; free < k; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(k, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    BigInt l = 1;
    for (const auto& c : v) l = big_lcm(l, denominator(c));
    std::vector<BigInt> iv(k);
    BigInt g = 0;
    for (std::size_t j = 0; j < k; ++j) {
      iv[j] = numerator(v[j] * Rational(l));
      g = big_gcd(g, iv[j]);
    }
    for (auto& c : iv) c /= g;
    out.push_back(std::move(iv));
  }
  return out;
}

LatticeBasis lattice_basis_hnf(std::span<const NFElem> elems) {
  const std::size_t k = elems.size();
  if (k == 0) throw Error("lattice basis needs at least one element");
  const std::size_t d = elems[0].coords.size();
  BigInt den = 1;
  for (const auto& e : elems) {
    if (e.coords.size() != d) throw Error("elements of different fields");
    for (const auto& c : e.coords) den = big_lcm(den, denominator(c));
  }
  // Column j of M holds coordinate d-1-j, so the rational coordinate is last.
  IntMatrix m(k, std::vector<BigInt>(d));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = numerator(elems[i].coords[d - 1 - j] * Rational(den));
  }
  IntMatrix u(k, std::vector<BigInt>(k, 0));
  for (std::size_t i = 0; i < k; ++i) u[i][i] = 1;

  auto row_axpy = [&](std::size_t dst, const BigInt& q, std::size_t src) {
    for (std::size_t j = 0; j < d; ++j) m[dst][j] -= q * m[src][j];
    for (std::size_t j = 0; j < k; ++j) u[dst][j] -= q * u[src][j];
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    std::swap(u[a], u[b]);
  };

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < k; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < k; ++i) {
        if (m[i][c] != 0 && (!best || abs(m[i][c]) < abs(m[*best][c]))) best = i;
      }
      if (!best) break;
      row_swap(r, *best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < k; ++i) {
        if (m[i][c] == 0) continue;
        row_axpy(i, m[i][c] / m[r][c], r);
        if (m[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0) {
      for (auto& v : m[r]) v = -v;
      for (auto& v : u[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) row_axpy(i, floor_div(m[i][c], m[r][c]), r);
    pivot_cols.push_back(c);
    ++r;
  }

  LatticeBasis lb;
  for (std::size_t j = 0; j < r; ++j) {
    NFElem b{std::vector<Rational>(d)};
    for (std::size_t c = 0; c < d; ++c) b.coords[d - 1 - c] = Rational(m[j][c]) / Rational(den);
    lb.basis.push_back(std::move(b));
    lb.generators.push_back(u[j]);
  }
  lb.expression.assign(k, std::vector<BigInt>(r, 0));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<BigInt> residual(d);
    for (std::size_t c = 0; c < d; ++c) residual[c] = numerator(elems[i].coords[d - 1 - c] * Rational(den));
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t c = pivot_cols[j];
      if (residual[c] % m[j][c] != 0) throw Error("internal: input not in the row lattice");
      const BigInt coef = residual[c] / m[j][c];
      lb.expression[i][j] = coef;
      for (std::size_t t = 0; t < d; ++t) residual[t] -= coef * m[j][t];
    }
    for (const auto& v : residual) {
      if (v != 0) throw Error("internal: input not in the row lattice");
    }
  }
  return lb;
}

LatticeBasis lattice_basis(std::span<const NFElem> elems) {
  if (elems.empty()) throw Error("lattice basis needs at least one element");
  if (!qlin_relations(elems).empty()) return lattice_basis_hnf(elems);
  LatticeBasis lb;
  const std::size_t k = elems.size();
  lb.basis.assign(elems.begin(), elems.end());
  lb.expression.assign(k, std::vector<BigInt>(k, 0));
  for (std::size_t i = 0; i < k; ++i) lb.expression[i][i] = 1;
  lb.generators = lb.expression;
  return lb;
}

ValueSet value_set(std::span<const NFElem> elems, bool sp_mode) {
  ValueSet vs;
  vs.sp_mode = sp_mode;
  vs.lattice = sp_mode ? lattice_basis_hnf(elems) : lattice_basis(elems);
  vs.exponents = vs.lattice.expression;
  vs.free_dimension = vs.lattice.basis.size();
  if (!sp_mode) return vs;
  for (std::size_t j = 0; j < vs.lattice.basis.size(); ++j) {
    const NFElem& b = vs.lattice.basis[j];
    if (!b.is_rational()) continue;
    RationalAnnotation ann;
    ann.basis_index = j;
    ann.value = b.coords[0];
    const BigInt n_big = denominator(ann.value);
    if (n_big > BigInt(UINT64_MAX / 4)) throw Error("denominator too large for SP annotation");
    const u64 n = static_cast<u64>(n_big);
    ann.denominator = n;
    BigInt a_mod = numerator(ann.value) % n_big;
    if (a_mod < 0) a_mod += n_big;
    const u64 a = static_cast<u64>(a_mod);
    for (u64 k = 0; k < std::max<u64>(n, 1); ++k) {
      if (std::gcd(k, n) != 1) continue;
      ann.branches.push_back(SpBranch{k, Angle(mul_mod(a, k, n), n)});
    }
    vs.annotations.push_back(std::move(ann));
    --vs.free_dimension;
  }
  return vs;
}

}  // namespace pfkit
