#pragma once

// Polynomial expressions on the command line.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | var | '(' expr ')'
//   var    := letter alphanum*
//   rational := int ('/' int)?
//
// Whitespace is ignored and juxtaposition is not multiplication, so "2x" is
// rejected. The leading '-' lets canonical output be read back.

#include <optional>
#include <string>
#include <vector>

#include "pfkit/mpoly.hpp"

namespace pfkit::cli {

struct PolyExpr {
  std::string source;
  MPoly poly;
  /// names of the variables, index i naming variable i
  std::vector<std::string> vars;
};

/// Without `declared`, the variables are those occurring in the text, sorted
/// by name. With it, the given order is used and any other name is an error.
PolyExpr parse_polynomial(const std::string& text, const std::optional<std::vector<std::string>>& declared = {});

/// Canonical form; parse_polynomial(print(e), e.vars) reproduces e.poly.
std::string print(const PolyExpr& e);

/// Parses several expressions over the union of their variables (sorted), or
/// over `declared` when given.
std::vector<PolyExpr> parse_system(const std::vector<std::string>& texts,
                                   const std::optional<std::vector<std::string>>& declared = {});

/// "a,b,c" -> {"a", "b", "c"}, trimmed, empty pieces rejected.
std::vector<std::string> split_list(const std::string& text, char sep = ',');

}  // namespace pfkit::cli
