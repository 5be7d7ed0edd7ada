#include "pfkit/cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <limits>

#include "commands.hpp"

namespace pfkit::cli {

std::optional<Congruence> Globals::congruence() const {
  if (mod.has_value() != res.has_value()) throw UsageError("--mod and --res must be given together");
  if (!mod) return std::nullopt;
  if (*mod < 1) throw UsageError("--mod must be at least 1");
  return Congruence{*mod, *res % *mod};
}

u64 Globals::require_prime() const {
  if (!prime) throw UsageError("this command needs --prime");
  if (*prime >= kMaxModulus || !is_prime(*prime)) {
    throw UsageError("--prime " + std::to_string(*prime) + " is not a prime below 2^63");
  }
  return *prime;
}

u64 Globals::require_xlimit() const {
  if (!xlimit) throw UsageError("this command needs --xlimit");
  return *xlimit;
}

std::vector<u64> Globals::sweep_primes() const {
  if (prime && xlimit) throw UsageError("give either --prime or --xlimit, not both");
  if (prime) {
    if (mod) throw UsageError("--mod/--res filter a sweep; they do not combine with --prime");
    return {require_prime()};
  }
  if (!xlimit) throw UsageError("this command needs --prime or --xlimit");
  return primes_in(*xlimit, congruence());
}

PointSystem parse_point_system(const std::vector<std::string>& equations, const std::string& vars,
                               std::vector<std::string>* names) {
  if (equations.empty()) throw UsageError("at least one --eq is required");
  std::optional<std::vector<std::string>> declared;
  if (!vars.empty()) declared = split_list(vars);
  const auto exprs = parse_system(equations, declared);
  PointSystem s;
  s.nvars = exprs.front().vars.size();
  for (const auto& e : exprs) s.equations.push_back(e.poly);
  if (names) *names = exprs.front().vars;
  return s;
}

IntPoly parse_intpoly(const std::string& text, std::string* var) {
  const auto e = parse_polynomial(text);
  if (e.vars.size() != 1) throw UsageError("expected a polynomial in one variable: " + text);
  if (var) *var = e.vars.front();
  return to_intpoly(e.poly);
}

RatPoly parse_ratpoly(const std::string& text, const std::string& var) {
  return to_ratpoly(parse_polynomial(text, std::vector<std::string>{var}).poly);
}

Json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(bigint_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

const char* kFooter =
    "Exit codes: 0 success, 1 a check failed, 2 usage or input error.\n"
    "The JSON report is written to --json PATH, or to stdout when neither --json nor --csv is given.";

/// Flags that do not change the content of a report.
bool excluded_from_echo(const std::string& name) {
  return name == "--help" || name == "--jobs" || name == "--json" || name == "--csv";
}

void echo_options(const CLI::App& app, Json& params) {
  for (const CLI::Option* opt : app.get_options()) {
    if (opt->count() == 0) continue;
    const std::string name = opt->get_name();
    if (excluded_from_echo(name)) continue;
    const auto& results = opt->results();
    if (results.size() == 1) {
      params[name] = results.front();
    } else {
      params[name] = results;
    }
  }
}

void add_globals(CLI::App& app, Globals& g) {
  app.add_option("--xlimit", g.xlimit, "sweep every prime p <= X")->check(CLI::Range(u64{2}, u64{1} << 62));
  app.add_option("--prime", g.prime, "work over F_p (or F_{p^e} with --ext)");
  app.add_option("--mod", g.mod, "restrict sweeps to p = res (mod m)")->check(CLI::PositiveNumber);
  app.add_option("--res", g.res, "residue class for --mod")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", g.tol, "tolerance for numerical checks")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for random instances (default 0)");
  app.add_option("--jobs", g.jobs, "worker threads for prime sweeps")->check(CLI::Range(1, 1024));
  app.add_option("--budget", g.budget, "cap on enumerated points or table entries")->check(CLI::PositiveNumber);
  app.add_option("--json", g.json, "write the JSON report here ('-' for stdout)");
  app.add_option("--csv", g.csv, "write the CSV table here ('-' for stdout)");
  app.add_flag("--dump-samples", g.dump_samples, "include every sample in the JSON records");
  app.add_flag("--split-only", g.split_only, "keep only primes where f splits completely");
  app.add_option("--weyl-depth", g.weyl_depth, "Weyl sums W_1..W_H")->check(CLI::Range(0u, 1000u));
  app.add_option("--hist-bins", g.hist_bins, "histogram of angles with B bins")->check(CLI::Range(0u, 1000000u));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field character sums, counting measures and equidistribution sweeps", "pfkit"};
  app.footer(kFooter);
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  add_globals(app, g);
  std::vector<Command> commands;
  add_sum_commands(app, commands);
  add_measure_commands(app, commands);
  add_equidist_commands(app, commands);
  add_lattice_commands(app, commands);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    for (const auto& c : commands) {
      if (!c.app->parsed()) continue;
      Output o;
      o.report.command = c.app->get_name();
      o.report.seed = g.seed;
      echo_options(app, o.report.params);
      echo_options(*c.app, o.report.params);
      const auto start = std::chrono::steady_clock::now();
      c.action(g, o);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (!g.json.empty()) write_text(g.json, render_json(o.report), out);
      if (!g.csv.empty()) {
        if (!o.csv) throw UsageError("this command has no CSV output");
        write_text(g.csv, o.csv->render(), out);
      }
      if (g.json.empty() && g.csv.empty()) out << render_json(o.report);
      err << c.app->get_name() << ": " << (o.note.empty() ? "done" : o.note) << " (" << format_double(secs)
          << " s)\n";
      return o.failed ? kExitCheckFailed : kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace pfkit::cli
