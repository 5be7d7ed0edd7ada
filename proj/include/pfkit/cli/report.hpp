#pragma once

// Run reports: one JSON document per invocation and an optional CSV table.

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfkit/arith.hpp"

namespace pfkit::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct RunReport {
  std::string command;
  Json params = Json::object();
  Json records = Json::array();
  Json aggregate = Json::object();
  Json skipped_primes = Json::array();
  u64 seed = 0;

  void skip(u64 p, const std::string& reason);
  Json to_json() const;
};

/// Pretty-printed, newline terminated. Identical inputs give identical text.
std::string render_json(const RunReport& report);

Json complex_json(std::complex<double> z);

/// 12 significant digits.
std::string format_double(double x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void row(std::vector<std::string> cells);
  std::string render() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes text to path; "-" means the given stream.
void write_text(const std::string& path, const std::string& text, std::ostream& stdout_stream);

}  // namespace pfkit::cli
