// dfi, dfiext, multiweyl, spcheck

#include <cmath>
#include <random>

#include "commands.hpp"
#include "pfkit/equidist.hpp"

namespace pfkit::cli {

namespace {

EquidistOptions equidist_options(const Globals& g) {
  EquidistOptions eo;
  eo.congruence = g.congruence();
  eo.split_only = g.split_only;
  eo.weyl_depth = g.weyl_depth;
  eo.hist_bins = g.hist_bins;
  eo.jobs = g.jobs;
  return eo;
}

struct DfiOpts {
  std::string poly;
  std::string g;
  std::optional<double> ks_max;
  std::optional<double> weyl_max;
};

void emit_sweep(const SweepReport& s, const DfiOpts& o, const Globals& g, Output& out) {
  CsvTable csv({"p", "root", "angle_num", "angle_den"});
  for (const auto& x : s.samples) {
    csv.row({std::to_string(x.p), std::to_string(x.root), std::to_string(x.angle.num()),
             std::to_string(x.angle.den())});
    if (g.dump_samples) {
      out.report.records.push_back(Json{{"p", x.p}, {"root", x.root}, {"angle", x.angle.str()}});
    }
  }
  for (const auto& sk : s.skipped) out.report.skip(sk.p, sk.reason);
  Json weyl = Json::array();
  double max_weyl = 0;
  for (std::size_t h = 0; h < s.weyl.size(); ++h) {
    Json w = complex_json(s.weyl[h]);
    w["h"] = h + 1;
    weyl.push_back(w);
    max_weyl = std::max(max_weyl, std::abs(s.weyl[h]));
  }
  auto& agg = out.report.aggregate;
  agg["degree"] = s.degree;
  agg["xlimit"] = s.xlimit;
  agg["primes_used"] = s.primes_used;
  agg["samples"] = s.samples.size();
  agg["empty"] = s.empty;
  agg["ks"] = s.ks ? Json(*s.ks) : Json(nullptr);
  agg["weyl"] = weyl;
  if (!s.histogram.empty()) agg["histogram"] = s.histogram;
  if (g.split_only) {
    agg["split_filter"] = Json{{"applied", true},
                               {"note", "complete splitting of f mod p approximates the splitting condition in a "
                                        "larger field; no Galois group is computed"}};
  }

  // empirical thresholds, reported as observations
  Json obs = Json::object();
  if (o.ks_max) {
    const bool ok = s.ks && *s.ks <= *o.ks_max;
    obs["ks_max"] = *o.ks_max;
    obs["ks_within"] = ok;
    out.failed = out.failed || !ok;
  }
  if (o.weyl_max) {
    const bool ok = !s.weyl.empty() && max_weyl <= *o.weyl_max;
    obs["weyl_max"] = *o.weyl_max;
    obs["weyl_within"] = ok;
    out.failed = out.failed || !ok;
  }
  if (!obs.empty()) agg["observations"] = obs;
  out.csv = std::move(csv);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu samples over %zu primes, sweep %.3f s", s.samples.size(), s.primes_used,
                s.wall_seconds);
  out.note = buf;
}

void dfi_action(const DfiOpts& o, bool extended, const Globals& g, Output& out) {
  std::string var;
  const IntPoly f = parse_intpoly(o.poly, &var);
  const u64 xlimit = g.require_xlimit();
  if (g.prime) throw UsageError("sweeps take --xlimit, not --prime");
  SweepReport s;
  if (extended) {
    if (o.g.empty()) throw UsageError("dfiext needs --g");
    s = dfi_extended_sweep(f, parse_ratpoly(o.g, var), xlimit, equidist_options(g));
  } else {
    s = dfi_sweep(f, xlimit, equidist_options(g));
  }
  emit_sweep(s, o, g, out);
}

// ---------------------------------------------------------------- multiweyl

struct MultiOpts {
  std::string poly;
  std::string h;
  std::size_t random_h = 0;
  std::int64_t h_bound = 5;
};

std::vector<std::vector<std::int64_t>> h_vectors(const MultiOpts& o, std::size_t len, u64 seed) {
  std::vector<std::vector<std::int64_t>> out;
  if (!o.h.empty()) {
    std::vector<std::int64_t> v;
    for (const auto& s : split_list(o.h)) {
      try {
        v.push_back(std::stoll(s));
      } catch (const std::logic_error&) {
        throw UsageError("bad entry '" + s + "' in --hvec");
      }
    }
    out.push_back(v);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> entry(-o.h_bound, o.h_bound);
  while (out.size() < o.random_h + (o.h.empty() ? 0 : 1)) {
    std::vector<std::int64_t> v(len);
    bool nonzero = false;
    for (auto& x : v) {
      x = entry(rng);
      nonzero = nonzero || x != 0;
    }
    if (nonzero) out.push_back(v);
  }
  return out;
}

void multiweyl_action(const MultiOpts& o, const Globals& g, Output& out) {
  std::string var;
  const IntPoly f = parse_intpoly(o.poly, &var);
  const u64 xlimit = g.require_xlimit();
  if (f.size() < 3) throw UsageError("multiweyl needs deg f >= 2");
  if (o.h.empty() && o.random_h == 0) throw UsageError("give --hvec or --random-h");
  if (o.h_bound < 1) throw UsageError("--h-bound must be positive");
  const double tol = g.tolerance(1e-12);
  auto eo = equidist_options(g);
  eo.hist_bins = 0;
  eo.weyl_depth = 1;
  CsvTable csv({"h", "re", "im", "reference_re", "reference_im", "diff"});
  std::size_t failures = 0;
  double max_diff = 0;
  for (const auto& h : h_vectors(o, f.size() - 2, g.seed)) {
    const auto value = multi_weyl(f, xlimit, h, eo);
    RatPoly gpoly(h.size() + 1, Rational(0));
    for (std::size_t i = 0; i < h.size(); ++i) gpoly[i + 1] = Rational(h[i]);
    const auto ref = dfi_extended_sweep(f, gpoly, xlimit, eo).weyl.at(0);
    const double diff = std::abs(value - ref);
    max_diff = std::max(max_diff, diff);
    if (diff > tol) ++failures;
    out.report.records.push_back(
        Json{{"h", h}, {"value", complex_json(value)}, {"reference", complex_json(ref)}, {"diff", diff}});
    std::string hs;
    for (std::size_t i = 0; i < h.size(); ++i) hs += (i ? " " : "") + std::to_string(h[i]);
    csv.row({hs, format_double(value.real()), format_double(value.imag()), format_double(ref.real()),
             format_double(ref.imag()), format_double(diff)});
  }
  out.report.aggregate = Json{{"vectors", out.report.records.size()}, {"failures", failures},
                              {"max_diff", max_diff}, {"tol", tol}};
  out.csv = std::move(csv);
  out.failed = failures > 0;
}

// ---------------------------------------------------------------- spcheck

void spcheck_action(u64 n, const Globals& g, Output& out) {
  if (g.prime) throw UsageError("spcheck takes --xlimit, not --prime");
  const auto records = sp_check(n, g.require_xlimit(), g.jobs);
  CsvTable csv({"p", "k", "inverse", "angle", "nearest", "distance", "closed_form", "pairing"});
  std::size_t failures = 0;
  for (const auto& r : records) {
    const bool ok = r.closed_form && r.pairing;
    if (!ok) ++failures;
    out.report.records.push_back(Json{{"p", r.p},
                                      {"k", r.k},
                                      {"inverse", r.inverse},
                                      {"angle", r.angle.str()},
                                      {"nearest", std::to_string(r.nearest) + "/" + std::to_string(n)},
                                      {"distance", r.distance.str()},
                                      {"closed_form", r.closed_form},
                                      {"pairing", r.pairing}});
    csv.row({std::to_string(r.p), std::to_string(r.k), std::to_string(r.inverse), r.angle.str(),
             std::to_string(r.nearest), r.distance.str(), r.closed_form ? "1" : "0", r.pairing ? "1" : "0"});
  }
  out.report.aggregate = Json{{"n", n}, {"primes", records.size()}, {"failures", failures}};
  out.csv = std::move(csv);
  out.failed = failures > 0;
  out.note = std::to_string(records.size()) + " primes, " + std::to_string(failures) + " failures";
}

}  // namespace

void add_equidist_commands(CLI::App& app, std::vector<Command>& out) {
  for (bool extended : {false, true}) {
    auto o = std::make_shared<DfiOpts>();
    auto* sub = extended ? app.add_subcommand("dfiext", "angles of Psi_p(g(nu)) over the roots nu of f mod p")
                         : app.add_subcommand("dfi", "angles nu/p over the roots nu of f mod p, p <= xlimit");
    sub->add_option("--poly", o->poly, "irreducible integer polynomial f")->required();
    if (extended) sub->add_option("--g", o->g, "rational polynomial g in the same variable")->required();
    sub->add_option("--ks-max", o->ks_max, "fail when the KS distance exceeds this");
    sub->add_option("--weyl-max", o->weyl_max, "fail when some |W_h| exceeds this");
    sub->footer("CSV: p,root,angle_num,angle_den (one row per sample)");
    out.push_back({sub, [o, extended](const Globals& g, Output& r) { dfi_action(*o, extended, g, r); }});
  }
  {
    auto o = std::make_shared<MultiOpts>();
    auto* sub = app.add_subcommand(
        "multiweyl", "joint Weyl sum of (nu, nu^2, .., nu^{d-1})/p, checked against dfiext with g = sum h_i x^i");
    sub->add_option("--poly", o->poly, "irreducible integer polynomial f")->required();
    sub->add_option("--hvec", o->h, "h_1,...,h_{d-1}");
    sub->add_option("--random-h", o->random_h, "also N seeded random nonzero h vectors");
    sub->add_option("--h-bound", o->h_bound, "random entries in [-B, B] (default 5)");
    sub->footer("CSV: h,re,im,reference_re,reference_im,diff");
    out.push_back({sub, [o](const Globals& g, Output& r) { multiweyl_action(*o, g, r); }});
  }
  {
    auto n = std::make_shared<u64>(0);
    auto* sub = app.add_subcommand("spcheck", "exact law |n^{-1} mod p / p - t/n| = 1/(np) and its pairing");
    sub->add_option("--n", *n, "n >= 1")->required()->check(CLI::Range(u64{1}, u64{1} << 20));
    sub->footer("CSV: p,k,inverse,angle,nearest,distance,closed_form,pairing");
    out.push_back({sub, [n](const Globals& g, Output& r) { spcheck_action(*n, g, r); }});
  }
}

}  // namespace pfkit::cli
