#include "pfkit/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "pfkit/error.hpp"

namespace pfkit::cli {

void RunReport::skip(u64 p, const std::string& reason) {
  skipped_primes.push_back(Json{{"p", p}, {"reason", reason}});
}

Json RunReport::to_json() const {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["version"] = kToolVersion;
  j["params"] = params;
  j["seed"] = seed;
  j["records"] = records;
  j["aggregate"] = aggregate;
  j["skipped_primes"] = skipped_primes;
  return j;
}

std::string render_json(const RunReport& report) { return report.to_json().dump(2) + "\n"; }

Json complex_json(std::complex<double> z) {
  return Json{{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}};
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void CsvTable::row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw Error("csv row width does not match header");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::render() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      const bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
      if (!quote) {
        out += cells[i];
        continue;
      }
      out += '"';
      for (char c : cells[i]) {
        if (c == '"') out += '"';
        out += c;
      }
      out += '"';
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

void write_text(const std::string& path, const std::string& text, std::ostream& stdout_stream) {
  if (path == "-") {
    stdout_stream << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path + " for writing");
  os << text;
  if (!os) throw Error("write to " + path + " failed");
}

}  // namespace pfkit::cli
