#include "pfkit/measure.hpp"

#include <cmath>
#include <cstdio>

#include "pfkit/angle.hpp"
#include "pfkit/error.hpp"
#include "pfkit/sweep.hpp"

namespace pfkit {

namespace {

struct CountOutcome {
  u64 count = 0;
  bool skipped = false;
  std::string reason;
};

CountOutcome try_count(const PointSystem& system, u64 p, u64 budget) {
  CountOutcome out;
  try {
    EnumOptions eo;
    eo.budget = budget;
    out.count = count_points(PrimeField(p), system, eo);
  } catch (const BadPrime&) {
    out.skipped = true;
    out.reason = "bad prime";
  } catch (const BudgetExceeded& e) {
    out.skipped = true;
    out.reason = e.what();
  }
  return out;
}

void fit_dimension(MeasureSeries& series) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (const auto& r : series.records) {
    if (r.skipped || r.count == 0) continue;
    const double x = std::log(static_cast<double>(r.p));
    const double y = std::log(static_cast<double>(r.count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  if (k < 2) return;
  const double denom = static_cast<double>(k) * sxx - sx * sx;
  if (denom <= 0) return;
  const double slope = (static_cast<double>(k) * sxy - sx * sy) / denom;
  series.fitted_dim = slope;
  if (std::abs(slope - series.declared_dim) >= 0.25) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "declared dimension %d disagrees with fitted growth exponent %.3f",
                  series.declared_dim, slope);
    series.warnings.emplace_back(buf);
  }
}

}  // namespace

MeasureSeries mu0_sweep(const PointSystem& system, int declared_dim, std::span<const u64> primes,
                        const SweepOptions& opts) {
  MeasureSeries series;
  series.declared_dim = declared_dim;
  series.records = map_primes(primes, opts.jobs, [&](u64 p) {
    const auto c = try_count(system, p, opts.budget);
    MeasureRecord r;
    r.p = p;
    r.count = c.count;
    r.skipped = c.skipped;
    r.reason = c.reason;
    if (!r.skipped) r.normalized = static_cast<double>(r.count) / std::pow(static_cast<double>(p), declared_dim);
    return r;
  });
  fit_dimension(series);
  return series;
}

MeasureSeries mu1_sweep(const PointSystem& x, const PointSystem& x_prime, int declared_dim,
                        std::span<const u64> primes, const SweepOptions& opts) {
  if (x.nvars != x_prime.nvars) throw Error("X and X' must live in the same ambient space");
  MeasureSeries series;
  series.declared_dim = declared_dim;
  series.records = map_primes(primes, opts.jobs, [&](u64 p) {
    MeasureRecord r;
    r.p = p;
    const auto a = try_count(x, p, opts.budget);
    const auto b = try_count(x_prime, p, opts.budget);
    r.count = a.count;
    r.count_other = b.count;
    r.skipped = a.skipped || b.skipped;
    r.reason = a.skipped ? a.reason : b.reason;
    if (!r.skipped) {
      const double diff = static_cast<double>(a.count) - static_cast<double>(b.count);
      r.normalized = std::pow(static_cast<double>(p), 0.5 - declared_dim) * diff;
    }
    return r;
  });
  fit_dimension(series);
  return series;
}

ValueTable::ValueTable(u64 p_, std::size_t n_, u64 budget) : p(p_), n(n_) {
  if (p < 2) throw Error("table modulus must be at least 2");
  if (n < 1) throw Error("table needs at least one coordinate");
  unsigned __int128 size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= p;
    if (size > budget) throw BudgetExceeded("table size p^n exceeds budget", budget);
  }
  entries.assign(static_cast<std::size_t>(size), {0.0, 0.0});
}

u64 ValueTable::index(std::span<const u64> x) const {
  if (x.size() != n) throw Error("point arity mismatch");
  u64 idx = 0;
  for (u64 v : x) idx = idx * p + (v % p);
  return idx;
}

std::vector<u64> ValueTable::point(u64 idx) const {
  std::vector<u64> x(n);
  for (std::size_t i = n; i-- > 0;) {
    x[i] = idx % p;
    idx /= p;
  }
  return x;
}

ValueTable fourier_table(const ValueTable& phi, const FourierOptions& opts) {
  const u64 p = phi.p;
  ValueTable out(p, phi.n, opts.budget);
  if (phi.entries.size() != out.entries.size()) throw Error("table has the wrong number of entries");
  out.entries = phi.entries;
  const UnitRootTable roots(p);
  const double scale = 1.0 / static_cast<double>(p);
  const auto total = static_cast<std::ptrdiff_t>(out.size());
  const auto lines = total / static_cast<std::ptrdiff_t>(p);

  u64 stride = out.size();
  for (std::size_t axis = 0; axis < phi.n; ++axis) {
    stride /= p;
    const auto block = static_cast<std::ptrdiff_t>(stride * p);
    auto* data = out.entries.data();
#pragma omp parallel num_threads(std::max(1, opts.jobs))
    {
      std::vector<std::complex<double>> line(p), result(p);
#pragma omp for schedule(static)
      for (std::ptrdiff_t l = 0; l < lines; ++l) {
        const std::ptrdiff_t outer = l / static_cast<std::ptrdiff_t>(stride);
        const std::ptrdiff_t inner = l % static_cast<std::ptrdiff_t>(stride);
        const std::ptrdiff_t base = outer * block + inner;
        for (u64 j = 0; j < p; ++j) line[j] = data[base + static_cast<std::ptrdiff_t>(j * stride)];
        for (u64 k = 0; k < p; ++k) {
          std::complex<double> acc = 0;
          u64 phase = 0;
          for (u64 j = 0; j < p; ++j) {
            acc += roots[phase] * line[j];
            phase += k;
            if (phase >= p) phase -= p;
          }
          result[k] = acc * scale;
        }
        for (u64 k = 0; k < p; ++k) data[base + static_cast<std::ptrdiff_t>(k * stride)] = result[k];
      }
    }
  }
  return out;
}

ValueTable fourier_table_reference(const ValueTable& phi, u64 budget) {
  const u64 p = phi.p;
  ValueTable out(p, phi.n, budget);
  if (phi.entries.size() != out.entries.size()) throw Error("table has the wrong number of entries");
  const UnitRootTable roots(p);
  const double norm = std::pow(static_cast<double>(p), -static_cast<double>(phi.n));
  for (u64 yi = 0; yi < out.size(); ++yi) {
    const auto y = out.point(yi);
    ComplexSum sum;
    for (u64 xi = 0; xi < phi.size(); ++xi) {
      const auto x = phi.point(xi);
      u64 dot = 0;
      for (std::size_t i = 0; i < phi.n; ++i) dot = add_mod(dot, mul_mod(x[i], y[i], p), p);
      sum.add(roots[dot] * phi.entries[xi]);
    }
    out.entries[yi] = sum.value() * norm;
  }
  return out;
}

std::vector<WeylMoment> pushforward_weyl(const PointSystem& system, u64 p, std::int64_t max_moment,
                                         const EnumOptions& opts) {
  if (max_moment < 0) throw Error("moment bound must be non-negative");
  const PrimeField fp(p);
  const auto pts = enumerate_points(fp, system, opts);
  if (pts.empty()) throw Error("no points");
  const std::size_t n = system.nvars;
  const UnitRootTable roots(p);
  const double inv_count = 1.0 / static_cast<double>(pts.size());

  std::vector<WeylMoment> out;
  out.push_back(WeylMoment{std::vector<std::int64_t>(n, 0), {1.0, 0.0}});
  std::vector<std::int64_t> m(n, -max_moment);
  for (;;) {
    bool nonzero = false;
    for (auto v : m) nonzero = nonzero || v != 0;
    if (nonzero) {
      std::vector<u64> mred(n);
      for (std::size_t i = 0; i < n; ++i) mred[i] = reduce_signed(m[i], p);
      ComplexSum sum;
      for (const auto& x : pts) {
        u64 dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot = add_mod(dot, mul_mod(mred[i], x[i], p), p);
        sum.add(roots[dot]);
      }
      out.push_back(WeylMoment{m, sum.value() * inv_count});
    }
    bool wrapped = true;
    for (std::size_t k = n; k-- > 0;) {
      if (++m[k] <= max_moment) {
        wrapped = false;
        break;
      }
      m[k] = -max_moment;
    }
    if (wrapped) break;
  }
  return out;
}

}  // namespace pfkit
