#include "pfkit/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "pfkit/error.hpp"
#include "pfkit/upoly.hpp"

namespace pfkit {

std::complex<double> exp_sum(const PointSystem& system, const MPoly& f, const CharacterDesc& ch,
                             const EnumOptions& opts) {
  if (f.nvars() != system.nvars) throw Error("map and system live in different numbers of variables");
  const ExtField& field = ch.field();
  const u64 p = field.characteristic();
  const ReducedPoly rf(f, p);
  ComplexSum sum;
  if (field.degree() == 1) {
    const PrimeField fp(p);
    const UnitRootTable table(p);
    const u64 c = ch.twist().coeffs[0];
    visit_points(fp, system, opts, [&](std::span<const u64> x) { sum.add(table[mul_mod(c, rf.eval(fp, x), p)]); });
  } else {
    visit_points(field, system, opts, [&](std::span<const FqElem> x) {
      sum.add(angle_to_complex(psi_q(rf.eval(field, x), ch)));
    });
  }
  return sum.value();
}

std::complex<double> exp_sum_points(std::span<const std::vector<u64>> points, const MPoly& f,
                                    const CharacterDesc& ch) {
  if (ch.field().degree() != 1) throw Error("explicit point lists are supported over prime fields only");
  const u64 p = ch.field().characteristic();
  const PrimeField fp(p);
  const ReducedPoly rf(f, p);
  const UnitRootTable table(p);
  const u64 c = ch.twist().coeffs[0];
  ComplexSum sum;
  for (const auto& x : points) {
    if (x.size() != f.nvars()) throw Error("point arity mismatch");
    sum.add(table[mul_mod(c, rf.eval(fp, std::span<const u64>(x)), p)]);
  }
  return sum.value();
}

std::complex<double> exp_sum_univariate(std::span<const u64> coeffs, u64 twist, const UnitRootTable& roots) {
  const u64 p = roots.modulus();
  ComplexSum sum;
  if (p < (u64{1} << 32)) {
    // products of residues fit in 64 bits
    for (u64 x = 0; x < p; ++x) {
      u64 acc = 0;
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * x + coeffs[i]) % p;
      sum.add(roots[twist % p * acc % p]);
    }
    return sum.value();
  }
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p), coeffs[i], p);
    sum.add(roots[mul_mod(twist, acc, p)]);
  }
  return sum.value();
}

WeilRecord weil_check(const MPoly& f, const CharacterDesc& ch) {
  return weil_check(f, ch, UnitRootTable(ch.field().characteristic()));
}

WeilRecord weil_check(const MPoly& f, const CharacterDesc& ch, const UnitRootTable& table) {
  if (f.nvars() != 1) throw Error("Weil check on A^1 needs a univariate polynomial");
  if (ch.field().degree() != 1) throw Error("Weil check runs over prime fields");
  if (ch.is_trivial()) throw Error("Weil bound concerns nontrivial characters");
  const u64 p = ch.field().characteristic();
  const auto coeffs = ReducedPoly(f, p).dense_univariate();
  if (coeffs.size() < 2) throw Error("degenerate reduction: deg(f mod " + std::to_string(p) + ") < 1");
  const unsigned d = static_cast<unsigned>(coeffs.size() - 1);
  if (gcd_u64(d, p) != 1) throw Error("wild degree; bound not applicable");
  WeilRecord rec;
  rec.p = p;
  rec.degree = d;
  if (table.modulus() != p) throw Error("unit root table has the wrong modulus");
  rec.sum = exp_sum_univariate(coeffs, ch.twist().coeffs[0], table);
  rec.magnitude = std::abs(rec.sum);
  rec.bound = (d - 1) * std::sqrt(static_cast<double>(p));
  rec.normalized = rec.magnitude / std::sqrt(static_cast<double>(p));
  rec.pass = rec.magnitude <= rec.bound + kWeilSlack;
  return rec;
}

Axiom3Result axiom3_sup(const PointSystem& curve, const LaurentPoly& h, u64 p, const EnumOptions& opts) {
  h.validate_real_mean_zero();
  if (h.nvars() != curve.nvars) throw Error("Laurent polynomial and curve have different arity");
  const PrimeField fp(p);
  const UnitRootTable table(p);
  Axiom3Result r;
  r.p = p;
  double sup = -INFINITY;
  visit_points(fp, curve, opts, [&](std::span<const u64> x) {
    ++r.points;
    sup = std::max(sup, h.eval_at_residues(x, table).real());
  });
  if (r.points == 0) throw Error("curve has no points mod " + std::to_string(p));
  r.sup = sup;
  r.tolerance = h.coefficient_l1() * std::sqrt(static_cast<double>(p)) / static_cast<double>(r.points);
  r.pass = r.sup >= -r.tolerance;
  return r;
}

namespace {

/// One point of the system over F_p, found by repeatedly solving an equation
/// that has a single undetermined variable and guessing a coordinate when
/// none does. Returns nothing when the attempt dead-ends.
std::optional<std::vector<u64>> sample_point(const PrimeField& fp, const std::vector<ReducedPoly>& eqs,
                                             std::size_t n, std::mt19937_64& rng) {
  std::vector<u64> x(n, 0);
  std::vector<bool> known(n, false);
  std::size_t remaining = n;
  while (remaining > 0) {
    bool progressed = false;
    for (const auto& eq : eqs) {
      std::optional<std::size_t> unknown;
      bool several = false;
      for (const auto& t : eq.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
          if (t.exps[i] == 0 || known[i]) continue;
          if (unknown && *unknown != i) several = true;
          unknown = i;
        }
      }
      if (!unknown || several) continue;
      upoly::Poly<PrimeField> fibre;
      for (const auto& c : eq.coefficients_in(*unknown)) fibre.push_back(c.eval(fp, std::span<const u64>(x)));
      upoly::trim(fp, fibre);
      if (fibre.size() <= 1) {
        if (fibre.size() == 1) return std::nullopt;
        continue;
      }
      auto rts = upoly::roots(fp, fibre, rng());
      if (rts.empty()) return std::nullopt;
      x[*unknown] = rts[std::uniform_int_distribution<std::size_t>(0, rts.size() - 1)(rng)];
      known[*unknown] = true;
      --remaining;
      progressed = true;
      break;
    }
    if (!progressed) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!known[i]) {
          x[i] = fp.random(rng);
          known[i] = true;
          --remaining;
          break;
        }
      }
    }
  }
  for (const auto& eq : eqs) {
    if (eq.eval(fp, std::span<const u64>(x)) != 0) return std::nullopt;
  }
  return x;
}

struct PrimeSamples {
  u64 p;
  std::vector<std::vector<u64>> points;
};

bool annihilates(const std::vector<std::int64_t>& a, const PrimeSamples& s) {
  const u64 p = s.p;
  auto dot = [&](const std::vector<u64>& x) {
    u64 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = add_mod(acc, mul_mod(reduce_signed(a[i], p), x[i], p), p);
    return acc;
  };
  const u64 b = dot(s.points.front());
  for (std::size_t j = 1; j < s.points.size(); ++j) {
    if (dot(s.points[j]) != b) return false;
  }
  return true;
}

}  // namespace

std::optional<HyperplaneRelation> hyperplane_height_test(const PointSystem& curve, std::int64_t m,
                                                         const HyperplaneOptions& opts) {
  if (m < 1) throw Error("height bound must be positive");
  if (m > opts.height_cap) throw Error("height bound exceeds cap " + std::to_string(opts.height_cap));
  const std::size_t n = curve.nvars;
  if (n < 1) throw Error("curve needs at least one variable");
  std::size_t want = opts.samples;
  if (want == 0) {
    u64 bezout = 1;
    for (const auto& eq : curve.equations) bezout = std::min<u64>(bezout * std::max(1u, eq.total_degree()), 1000);
    want = std::clamp<std::size_t>(2 * bezout + 2, 12, 200);
  }

  std::vector<PrimeSamples> samples;
  u64 p = opts.min_prime;
  while (samples.size() < opts.primes) {
    p = next_prime(p);
    std::vector<ReducedPoly> eqs;
    try {
      for (const auto& eq : curve.equations) eqs.emplace_back(eq, p);
    } catch (const BadPrime&) {
      continue;
    }
    const PrimeField fp(p);
    std::mt19937_64 rng(mix64(opts.seed ^ p));
    std::set<std::vector<u64>> found;
    for (std::size_t attempt = 0; attempt < 50 * want && found.size() < want; ++attempt) {
      if (auto x = sample_point(fp, eqs, n, rng)) found.insert(std::move(*x));
    }
    if (found.size() < want) {
      throw Error("insufficient samples: found " + std::to_string(found.size()) + " of " + std::to_string(want) +
                  " points mod " + std::to_string(p));
    }
    samples.push_back(PrimeSamples{p, {found.begin(), found.end()}});
  }

  for (std::int64_t h = 1; h <= m; ++h) {
    std::vector<std::int64_t> a(n, -h);
    for (;;) {
      std::int64_t height = 0;
      std::int64_t last_nonzero = 0;
      for (auto v : a) {
        height = std::max<std::int64_t>(height, v < 0 ? -v : v);
        if (v != 0) last_nonzero = v;
      }
      if (height == h && last_nonzero > 0 &&
          std::all_of(samples.begin(), samples.end(), [&](const PrimeSamples& s) { return annihilates(a, s); })) {
        HyperplaneRelation rel;
        rel.coeffs = a;
        rel.height = h;
        std::optional<std::int64_t> agreed;
        bool consistent = true;
        for (const auto& s : samples) {
          u64 b = 0;
          for (std::size_t i = 0; i < n; ++i) b = add_mod(b, mul_mod(reduce_signed(a[i], s.p), s.points[0][i], s.p), s.p);
          rel.primes.push_back(s.p);
          rel.residues.push_back(b);
          const std::int64_t signed_b = b <= s.p / 2 ? static_cast<std::int64_t>(b)
                                                     : -static_cast<std::int64_t>(s.p - b);
          if (agreed && *agreed != signed_b) consistent = false;
          agreed = signed_b;
        }
        if (consistent) rel.constant = agreed;
        return rel;
      }
      bool wrapped = true;
      for (std::size_t k = n; k-- > 0;) {
        if (++a[k] <= h) {
          wrapped = false;
          break;
        }
        a[k] = -h;
      }
      if (wrapped) break;
    }
  }
  return std::nullopt;
}

BoxCountResult box_count(const PointSystem& system, u64 p, const PointBox& box, int declared_dim,
                         std::int64_t hyperplane_height, const EnumOptions& opts) {
  const PrimeField fp(p);
  if (box.ranges.size() != system.nvars) throw Error("box dimension does not match the system");
  EnumOptions eo = opts;
  eo.box = box;
  BoxCountResult r;
  r.p = p;
  r.count = count_points(fp, system, eo);
  const double pd = std::pow(static_cast<double>(p), declared_dim);
  r.fraction = static_cast<double>(r.count) / pd;
  r.expected_fraction = 1.0;
  for (const auto& [lo, hi] : box.ranges) {
    const u64 l = std::min(lo, p), u = std::min(hi, p);
    r.expected_fraction *= static_cast<double>(u > l ? u - l : 0) / static_cast<double>(p);
  }
  r.expected = pd * r.expected_fraction;
  if (hyperplane_height > 0) {
    r.hyperplane = hyperplane_height_test(system, hyperplane_height);
    r.hyperplane_checked = true;
  }
  return r;
}

}  // namespace pfkit
