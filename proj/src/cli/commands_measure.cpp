// mu0, mu1, fourier, pushforward

#include <algorithm>
#include <cmath>
#include <random>

#include "commands.hpp"
#include "pfkit/measure.hpp"

namespace pfkit::cli {

namespace {

struct MuOpts {
  std::vector<std::string> eqs;
  std::vector<std::string> eqs_other;
  std::string vars;
  int dim = -1;
  std::optional<double> bound;
};

void emit_series(const MeasureSeries& s, bool with_other, Output& out) {
  std::vector<std::string> header{"p", "count"};
  if (with_other) header.push_back("count_other");
  header.insert(header.end(), {"normalized", "skipped"});
  CsvTable csv(header);
  for (const auto& r : s.records) {
    if (r.skipped) {
      out.report.skip(r.p, r.reason);
    } else {
      Json rec{{"p", r.p}, {"count", r.count}};
      if (with_other) rec["count_other"] = r.count_other;
      rec["normalized"] = r.normalized;
      out.report.records.push_back(rec);
    }
    std::vector<std::string> row{std::to_string(r.p), std::to_string(r.count)};
    if (with_other) row.push_back(std::to_string(r.count_other));
    row.push_back(r.skipped ? "" : format_double(r.normalized));
    row.push_back(r.skipped ? "1" : "0");
    csv.row(std::move(row));
  }
  out.report.aggregate["declared_dim"] = s.declared_dim;
  out.report.aggregate["fitted_dim"] = s.fitted_dim ? Json(*s.fitted_dim) : Json(nullptr);
  out.report.aggregate["warnings"] = s.warnings;
  out.csv = std::move(csv);
}

void mu_action(const MuOpts& o, bool first_order, const Globals& g, Output& out) {
  if (o.dim < 0) throw UsageError("--dim (declared dimension) is required");
  std::vector<std::string> all = o.eqs;
  if (!first_order) all.insert(all.end(), o.eqs_other.begin(), o.eqs_other.end());
  std::vector<std::string> names;
  const auto joint = parse_point_system(all, o.vars, &names);
  PointSystem x{joint.nvars, {joint.equations.begin(), joint.equations.begin() + o.eqs.size()}};
  const auto primes = g.sweep_primes();
  const SweepOptions so{g.budget, g.jobs};
  MeasureSeries s;
  if (first_order) {
    s = mu0_sweep(x, o.dim, primes, so);
  } else {
    PointSystem y{joint.nvars, {joint.equations.begin() + o.eqs.size(), joint.equations.end()}};
    s = mu1_sweep(x, y, o.dim, primes, so);
  }
  emit_series(s, !first_order, out);
  Json vars = Json::array();
  for (const auto& n : names) vars.push_back(n);
  out.report.aggregate["variables"] = vars;
  if (o.bound) {
    const double tol = g.tolerance(1e-9);
    std::size_t violations = 0;
    double max_abs = 0;
    for (const auto& r : s.records) {
      if (r.skipped) continue;
      max_abs = std::max(max_abs, std::abs(r.normalized));
      if (std::abs(r.normalized) > *o.bound + tol) ++violations;
    }
    out.report.aggregate["bound"] = *o.bound;
    out.report.aggregate["max_abs_normalized"] = max_abs;
    out.report.aggregate["violations"] = violations;
    out.failed = violations > 0;
  }
}

// ---------------------------------------------------------------- fourier

struct FourierOpts {
  std::size_t n = 1;
  std::vector<std::string> eqs;
  std::string vars;
  std::size_t random = 0;
};

constexpr u64 kCsvTableLimit = 1'000'000;

struct IdentityErrors {
  double plancherel = 0;
  double inversion = 0;
  double delta = 0;
};

IdentityErrors fourier_identities(const ValueTable& phi, const FourierOptions& fo) {
  IdentityErrors e;
  const double pn = static_cast<double>(phi.size());
  const ValueTable f = fourier_table(phi, fo);
  double lhs = 0, rhs = 0;
  for (u64 i = 0; i < phi.size(); ++i) {
    lhs += std::norm(f.entries[i]);
    rhs += std::norm(phi.entries[i]);
  }
  rhs /= pn;
  e.plancherel = std::abs(lhs - rhs) / std::max(1.0, rhs);
  const ValueTable ff = fourier_table(f, fo);
  for (u64 i = 0; i < phi.size(); ++i) {
    auto z = phi.point(i);
    for (auto& c : z) c = c == 0 ? 0 : phi.p - c;
    e.inversion = std::max(e.inversion, std::abs(ff.entries[i] - phi.entries[phi.index(z)] / pn));
  }
  ValueTable one(phi.p, phi.n, fo.budget);
  std::fill(one.entries.begin(), one.entries.end(), std::complex<double>(1.0, 0.0));
  const ValueTable d = fourier_table(one, fo);
  for (u64 i = 0; i < d.size(); ++i) {
    e.delta = std::max(e.delta, std::abs(d.entries[i] - std::complex<double>(i == 0 ? 1.0 : 0.0, 0.0)));
  }
  return e;
}

void fourier_random(const FourierOpts& o, const Globals& g, Output& out) {
  const double tol = g.tolerance(1e-9);
  std::vector<u64> primes = g.prime ? std::vector<u64>{g.require_prime()} : primes_in(g.require_xlimit());
  std::mt19937_64 rng(g.seed);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const FourierOptions fo{g.budget, g.jobs};
  CsvTable csv({"table", "p", "n", "plancherel_err", "inversion_err", "delta_err"});
  std::size_t failures = 0;
  IdentityErrors worst;
  for (std::size_t t = 0; t < o.random; ++t) {
    const u64 p = primes[pick(rng)];
    ValueTable phi(p, o.n, g.budget);
    for (auto& v : phi.entries) {
      const double re = unit(rng);
      v = {re, unit(rng)};
    }
    const auto e = fourier_identities(phi, fo);
    const bool pass = e.plancherel <= tol && e.inversion <= tol && e.delta <= tol;
    if (!pass) ++failures;
    worst.plancherel = std::max(worst.plancherel, e.plancherel);
    worst.inversion = std::max(worst.inversion, e.inversion);
    worst.delta = std::max(worst.delta, e.delta);
    out.report.records.push_back(Json{{"table", t}, {"p", p}, {"n", o.n}, {"plancherel_err", e.plancherel},
                                      {"inversion_err", e.inversion}, {"delta_err", e.delta}, {"pass", pass}});
    csv.row({std::to_string(t), std::to_string(p), std::to_string(o.n), format_double(e.plancherel),
             format_double(e.inversion), format_double(e.delta)});
  }
  out.report.aggregate = Json{{"tables", o.random},
                              {"failures", failures},
                              {"max_plancherel_err", worst.plancherel},
                              {"max_inversion_err", worst.inversion},
                              {"max_delta_err", worst.delta},
                              {"tol", tol}};
  out.csv = std::move(csv);
  out.failed = failures > 0;
  out.note = std::to_string(o.random) + " tables, " + std::to_string(failures) + " failures";
}

void fourier_action(const FourierOpts& o, const Globals& g, Output& out) {
  if (o.random > 0) {
    if (!o.eqs.empty()) throw UsageError("--random and --eq are exclusive");
    return fourier_random(o, g, out);
  }
  // transform of the indicator function of V(F_p)
  const u64 p = g.require_prime();
  std::vector<std::string> names;
  const auto system = parse_point_system(o.eqs, o.vars, &names);
  ValueTable phi(p, system.nvars, g.budget);
  EnumOptions eo;
  eo.budget = g.budget;
  u64 points = 0;
  visit_points(PrimeField(p), system, eo, [&](std::span<const u64> x) {
    phi.entries[phi.index(x)] = 1.0;
    ++points;
  });
  const ValueTable f = fourier_table(phi, FourierOptions{g.budget, g.jobs});
  std::vector<std::string> header;
  for (const auto& n : names) header.push_back(n);
  header.insert(header.end(), {"re", "im"});
  CsvTable csv(header);
  double sum_sq = 0, max_nonzero = 0;
  for (u64 i = 0; i < f.size(); ++i) {
    sum_sq += std::norm(f.entries[i]);
    if (i != 0) max_nonzero = std::max(max_nonzero, std::abs(f.entries[i]));
    if (f.size() <= kCsvTableLimit) {
      std::vector<std::string> row;
      for (u64 c : f.point(i)) row.push_back(std::to_string(c));
      row.push_back(format_double(f.entries[i].real()));
      row.push_back(format_double(f.entries[i].imag()));
      csv.row(std::move(row));
    }
  }
  out.report.aggregate = Json{{"p", p},
                              {"n", system.nvars},
                              {"points", points},
                              {"value_at_zero", complex_json(f.entries[0])},
                              {"max_abs_nonzero", max_nonzero},
                              {"sum_abs_squared", sum_sq},
                              {"table_in_csv", f.size() <= kCsvTableLimit}};
  out.csv = std::move(csv);
}

// ---------------------------------------------------------------- pushforward

struct PushOpts {
  std::vector<std::string> eqs;
  std::string vars;
  std::int64_t moments = 2;
};

void pushforward_action(const PushOpts& o, const Globals& g, Output& out) {
  const u64 p = g.require_prime();
  std::vector<std::string> names;
  const auto system = parse_point_system(o.eqs, o.vars, &names);
  EnumOptions eo;
  eo.budget = g.budget;
  const auto ws = pushforward_weyl(system, p, o.moments, eo);
  std::vector<std::string> header;
  for (std::size_t i = 0; i < system.nvars; ++i) header.push_back("m" + std::to_string(i + 1));
  header.insert(header.end(), {"re", "im"});
  CsvTable csv(header);
  double max_nontrivial = 0;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    out.report.records.push_back(Json{{"m", ws[k].m}, {"value", complex_json(ws[k].value)}});
    if (k > 0) max_nontrivial = std::max(max_nontrivial, std::abs(ws[k].value));
    std::vector<std::string> row;
    for (auto v : ws[k].m) row.push_back(std::to_string(v));
    row.push_back(format_double(ws[k].value.real()));
    row.push_back(format_double(ws[k].value.imag()));
    csv.row(std::move(row));
  }
  out.report.aggregate = Json{{"p", p}, {"moments", ws.size()}, {"max_abs_nontrivial", max_nontrivial}};
  out.csv = std::move(csv);
}

}  // namespace

void add_measure_commands(CLI::App& app, std::vector<Command>& out) {
  for (bool first : {true, false}) {
    auto o = std::make_shared<MuOpts>();
    auto* sub = first ? app.add_subcommand("mu0", "|X(F_p)| / p^dim over a prime sweep")
                      : app.add_subcommand("mu1", "p^{1/2 - dim} (|X(F_p)| - |X'(F_p)|) over a prime sweep");
    sub->add_option("--eq", o->eqs, "equation of X (repeatable)")->required();
    if (!first) sub->add_option("--eq2", o->eqs_other, "equation of X' (repeatable)")->required();
    sub->add_option("--vars", o->vars, "variable order, comma separated (shared by X and X')");
    sub->add_option("--dim", o->dim, "declared dimension")->check(CLI::NonNegativeNumber);
    sub->add_option("--bound", o->bound, "fail when some |normalized| exceeds B + tol");
    sub->footer(first ? "CSV: p,count,normalized,skipped" : "CSV: p,count,count_other,normalized,skipped");
    out.push_back({sub, [o, first](const Globals& g, Output& r) { mu_action(*o, first, g, r); }});
  }
  {
    auto o = std::make_shared<FourierOpts>();
    auto* sub = app.add_subcommand("fourier", "normalised Fourier transform on F_p^n");
    sub->add_option("--n", o->n, "dimension for --random (default 1)")->check(CLI::Range(1, 8));
    sub->add_option("--eq", o->eqs, "transform the indicator of V(F_p) (repeatable)");
    sub->add_option("--vars", o->vars, "variable order, comma separated");
    sub->add_option("--random", o->random,
                    "check Plancherel, double inversion and F(1) = delta_0 on N seeded random tables");
    sub->footer(
        "CSV: x1..xn,re,im (tables with p^n <= 10^6); with --random "
        "table,p,n,plancherel_err,inversion_err,delta_err");
    out.push_back({sub, [o](const Globals& g, Output& r) { fourier_action(*o, g, r); }});
  }
  {
    auto o = std::make_shared<PushOpts>();
    auto* sub = app.add_subcommand("pushforward", "Weyl moments of the image of V(F_p) on the torus");
    sub->add_option("--eq", o->eqs, "equation (repeatable)")->required();
    sub->add_option("--vars", o->vars, "variable order, comma separated");
    sub->add_option("--moments", o->moments, "all m with |m|_inf <= M (default 2)")->check(CLI::Range(0, 64));
    sub->footer("CSV: m1..mn,re,im");
    out.push_back({sub, [o](const Globals& g, Output& r) { pushforward_action(*o, g, r); }});
  }
}

}  // namespace pfkit::cli
