#pragma once

// Subcommand plumbing shared by the command groups.

#include <CLI11.hpp>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfkit/cli/parse.hpp"
#include "pfkit/cli/report.hpp"
#include "pfkit/error.hpp"
#include "pfkit/field.hpp"
#include "pfkit/number_field.hpp"
#include "pfkit/points.hpp"

namespace pfkit::cli {

/// Bad flags or flag combinations; reported with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Globals {
  std::optional<u64> xlimit;
  std::optional<u64> prime;
  std::optional<u64> mod;
  std::optional<u64> res;
  std::optional<double> tol;
  u64 seed = 0;
  int jobs = 1;
  u64 budget = kDefaultEnumerationBudget;
  std::string json;
  std::string csv;
  bool dump_samples = false;
  bool split_only = false;
  unsigned weyl_depth = 5;
  unsigned hist_bins = 0;

  double tolerance(double fallback) const { return tol.value_or(fallback); }
  std::optional<Congruence> congruence() const;
  /// --prime p alone, or every prime up to --xlimit in the --mod/--res class.
  std::vector<u64> sweep_primes() const;
  u64 require_prime() const;
  u64 require_xlimit() const;
};

struct Output {
  RunReport report;
  std::optional<CsvTable> csv;
  bool failed = false;
  /// one-line summary written to stderr
  std::string note;
};

using Action = std::function<void(const Globals&, Output&)>;

struct Command {
  CLI::App* app;
  Action action;
};

void add_sum_commands(CLI::App& app, std::vector<Command>& out);
void add_measure_commands(CLI::App& app, std::vector<Command>& out);
void add_equidist_commands(CLI::App& app, std::vector<Command>& out);
void add_lattice_commands(CLI::App& app, std::vector<Command>& out);

/// A system of equations over shared variables; `vars` may be empty.
PointSystem parse_point_system(const std::vector<std::string>& equations, const std::string& vars,
                               std::vector<std::string>* names = nullptr);
/// Univariate integer polynomial.
IntPoly parse_intpoly(const std::string& text, std::string* var = nullptr);
/// Univariate rational polynomial in the given variable.
RatPoly parse_ratpoly(const std::string& text, const std::string& var);

/// Integers that fit in 64 bits become JSON numbers, others strings.
Json bigint_json(const BigInt& v);
Json matrix_json(const IntMatrix& m);

}  // namespace pfkit::cli
