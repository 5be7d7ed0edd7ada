#include "pfkit/equidist.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "pfkit/error.hpp"
#include "pfkit/field.hpp"
#include "pfkit/number_field.hpp"
#include "pfkit/sweep.hpp"
#include "pfkit/upoly.hpp"

namespace pfkit {

namespace {

using u128 = unsigned __int128;

struct PrimeOutcome {
  std::optional<std::string> skipped;
  bool used = false;
  std::vector<Sample> samples;
};

IntPoly trimmed(IntPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

/// Shared enumeration for every sweep: admissible primes, roots of f mod p
/// and, through `angle_of`, the sample attached to each root.
template <class AngleOf>
SweepReport collect(const IntPoly& f_in, u64 xlimit, const EquidistOptions& opts, const BigInt& extra_bad,
                    AngleOf&& angle_of) {
  const auto start = std::chrono::steady_clock::now();
  const IntPoly f = trimmed(f_in);
  if (f.size() < 3) throw Error("degenerate: single forced root");
  certify_irreducible(f);
  const BigInt lc_disc = f.back() * discriminant(f);

  SweepReport rep;
  rep.degree = f.size() - 1;
  rep.xlimit = xlimit;
  const std::vector<u64> primes = xlimit >= 2 ? primes_in(xlimit, opts.congruence) : std::vector<u64>{};
  const auto outcomes = map_primes(primes, opts.jobs, [&](u64 p) {
    PrimeOutcome out;
    const BigInt pm = p;
    if (lc_disc % pm == 0) {
      out.skipped = "divides lc(f) disc(f)";
      return out;
    }
    if (extra_bad != 0 && extra_bad % pm == 0) {
      out.skipped = "divides a denominator of g";
      return out;
    }
    const PrimeField fp(p);
    const auto rts = upoly::roots(fp, reduce_intpoly(f, p), p);
    if (opts.split_only && rts.size() != rep.degree) return out;
    out.used = true;
    for (u64 nu : rts) out.samples.push_back(Sample{p, nu, angle_of(p, nu)});
    return out;
  });
  for (const auto& o : outcomes) {
    if (o.skipped) {
      rep.skipped.push_back(SkippedPrime{0, *o.skipped});
      continue;
    }
    if (o.used) ++rep.primes_used;
    rep.samples.insert(rep.samples.end(), o.samples.begin(), o.samples.end());
  }
  // skipped entries were pushed in prime order; fill in the primes
  {
    std::size_t s = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].skipped) rep.skipped[s++].p = primes[i];
    }
  }
  rep.empty = rep.samples.empty();
  if (!rep.empty) {
    std::vector<Angle> angles;
    angles.reserve(rep.samples.size());
    for (const auto& s : rep.samples) angles.push_back(s.angle);
    rep.ks = ks_statistic(angles);
    for (unsigned h = 1; h <= opts.weyl_depth; ++h) rep.weyl.push_back(weyl_sum(rep.samples, h));
    if (opts.hist_bins > 0) {
      rep.histogram.assign(opts.hist_bins, 0);
      for (const auto& a : angles) {
        const auto bin = static_cast<std::size_t>(u128(a.num()) * opts.hist_bins / a.den());
        ++rep.histogram[bin];
      }
    }
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

std::complex<double> weyl_sum(std::span<const Sample> samples, std::int64_t h) {
  if (samples.empty()) throw Error("Weyl sum of an empty sample");
  ComplexSum sum;
  for (const auto& s : samples) sum.add(angle_to_complex(s.angle.times(h)));
  return sum.value() / static_cast<double>(samples.size());
}

double ks_statistic(std::span<const Angle> angles) {
  if (angles.empty()) throw Error("KS statistic of an empty sample");
  std::vector<Angle> sorted(angles.begin(), angles.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double u = sorted[i].value();
    d = std::max({d, static_cast<double>(i + 1) / n - u, u - static_cast<double>(i) / n});
  }
  return d;
}

SweepReport dfi_sweep(const IntPoly& f, u64 xlimit, const EquidistOptions& opts) {
  return collect(f, xlimit, opts, BigInt(0), [](u64 p, u64 nu) { return Angle(nu, p); });
}

SweepReport dfi_extended_sweep(const IntPoly& f_in, const RatPoly& g, u64 xlimit, const EquidistOptions& opts) {
  const IntPoly f = trimmed(f_in);
  if (f.size() < 3) throw Error("degenerate: single forced root");
  // g(a) in Q iff the remainder of g modulo f is constant.
  RatPoly rem = g;
  const std::size_t d = f.size() - 1;
  for (std::size_t i = rem.size(); i-- > d;) {
    const Rational c = rem[i] / Rational(f[d]);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) rem[i - d + j] -= c * Rational(f[j]);
  }
  rem.resize(std::min(rem.size(), d));
  bool rational = true;
  for (std::size_t i = 1; i < rem.size(); ++i) rational = rational && rem[i] == 0;
  if (rational) throw Error("element is rational; equidistribution claim does not apply");

  BigInt denominators = 1;
  for (const auto& c : g) denominators *= boost::multiprecision::denominator(c);
  return collect(f, xlimit, opts, denominators == 1 ? BigInt(0) : denominators, [&](u64 p, u64 nu) {
    const auto gp = reduce_ratpoly(g, p);
    u64 acc = 0;
    for (std::size_t i = gp.size(); i-- > 0;) acc = add_mod(mul_mod(acc, nu, p), gp[i], p);
    return Angle(acc, p);
  });
}

std::complex<double> multi_weyl(const IntPoly& f_in, u64 xlimit, std::span<const std::int64_t> h,
                                const EquidistOptions& opts) {
  const IntPoly f = trimmed(f_in);
  if (f.size() < 3) throw Error("degenerate: single forced root");
  if (h.size() != f.size() - 2) throw Error("h must have deg f - 1 entries");
  if (std::all_of(h.begin(), h.end(), [](std::int64_t v) { return v == 0; })) {
    throw Error("h = 0 gives the constant 1; use a nonzero vector");
  }
  EquidistOptions o = opts;
  o.weyl_depth = 0;
  o.hist_bins = 0;
  const auto rep = collect(f, xlimit, o, BigInt(0), [&](u64 p, u64 nu) {
    // Psi(sum h_i nu^i) = prod_i Psi(nu^i)^{h_i}
    Angle total;
    u64 power = 1;
    for (std::size_t i = 0; i < h.size(); ++i) {
      power = mul_mod(power, nu, p);
      total = total + Angle(power, p).times(h[i]);
    }
    return total;
  });
  if (rep.samples.empty()) throw Error("no samples");
  return weyl_sum(rep.samples, 1);
}

std::vector<SpRecord> sp_check(u64 n, u64 xlimit, int jobs) {
  if (n < 1) throw Error("n must be at least 1");
  if (xlimit < 2) return {};
  std::vector<u64> primes;
  for (u64 p : primes_in(xlimit)) {
    if (n % p != 0) primes.push_back(p);
  }
  return map_primes(primes, jobs, [n](u64 p) {
    if (u128(n) * p > UINT64_MAX) throw Error("n p overflows 64 bits");
    SpRecord r;
    r.p = p;
    r.k = p % n;
    r.inverse = inv_mod(n % p, p);
    r.angle = Angle(r.inverse, p);
    const u128 scaled = u128(n) * r.inverse;  // n m, compared against t p
    u128 t = scaled / p;
    const u128 rem = scaled - t * p;
    if (2 * rem > p) ++t;
    const u128 tp = t * p;
    const u128 gap = scaled > tp ? scaled - tp : tp - scaled;
    r.nearest = static_cast<u64>(t % n);
    r.distance = Angle(static_cast<u64>(gap), n * p);
    r.closed_form = r.distance == Angle(1, n * p);
    r.pairing = (u128(r.nearest) * r.k + 1) % n == 0;
    return r;
  });
}

}  // namespace pfkit
