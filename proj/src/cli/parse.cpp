#include "pfkit/cli/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "pfkit/error.hpp"

namespace pfkit::cli {

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text) {
    for (std::size_t i = 0; i < vars.size(); ++i) index_[vars[i]] = i;
    nvars_ = vars.size();
  }

  MPoly run() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    MPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    const bool negate = accept('-');
    MPoly r = term();
    if (negate) r = -r;
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  MPoly term() {
    MPoly r = factor();
    while (accept('*')) r = r * factor();
    return r;
  }

  MPoly factor() {
    MPoly b = base();
    if (!accept('^')) return b;
    skip_ws();
    const std::size_t at = pos_;
    const BigInt e = integer("exponent");
    if (e >= (BigInt(1) << 32)) throw ParseError("exponent must be below 2^32", at);
    return b.pow(static_cast<std::uint32_t>(e));
  }

  MPoly base() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (is_digit(c)) {
      BigInt num = integer("number");
      BigInt den = 1;
      if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        den = integer("denominator");
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return MPoly::constant(nvars_, Rational(num, den));
    }
    if (is_letter(c)) {
      const std::size_t at = pos_;
      while (pos_ < s_.size() && is_alnum(s_[pos_])) ++pos_;
      const std::string name = s_.substr(at, pos_ - at);
      const auto it = index_.find(name);
      if (it == index_.end()) throw ParseError("unknown variable '" + name + "'", at);
      return MPoly::variable(nvars_, it->second);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  BigInt integer(const char* what) {
    skip_ws();
    if (pos_ == s_.size() || !is_digit(s_[pos_])) {
      throw ParseError(std::string("expected ") + what, pos_);
    }
    const std::size_t at = pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    return BigInt(s_.substr(at, pos_ - at));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t nvars_ = 0;
  std::map<std::string, std::size_t> index_;
};

/// Identifiers in the text, in sorted order.
std::vector<std::string> scan_names(const std::string& s) {
  std::set<std::string> names;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_letter(s[i])) {
      const std::size_t at = i;
      while (i < s.size() && is_alnum(s[i])) ++i;
      names.insert(s.substr(at, i - at));
    } else if (is_digit(s[i])) {
      while (i < s.size() && is_alnum(s[i])) ++i;  // "2x" is left for the parser to reject
    } else {
      ++i;
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace

PolyExpr parse_polynomial(const std::string& text, const std::optional<std::vector<std::string>>& declared) {
  PolyExpr e;
  e.source = text;
  e.vars = declared ? *declared : scan_names(text);
  if (e.vars.empty()) e.vars = {"x"};
  e.poly = Parser(text, e.vars).run();
  return e;
}

std::string print(const PolyExpr& e) { return to_string(e.poly, e.vars); }

std::vector<PolyExpr> parse_system(const std::vector<std::string>& texts,
                                   const std::optional<std::vector<std::string>>& declared) {
  std::vector<std::string> vars;
  if (declared) {
    vars = *declared;
  } else {
    std::set<std::string> all;
    for (const auto& t : texts) {
      for (auto& n : scan_names(t)) all.insert(n);
    }
    vars.assign(all.begin(), all.end());
    if (vars.empty()) vars = {"x"};
  }
  std::vector<PolyExpr> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, vars));
  return out;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(sep, start);
    std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    const auto b = piece.find_first_not_of(" \t");
    const auto l = piece.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("empty item in list '" + text + "'");
    out.push_back(piece.substr(b, l - b + 1));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace pfkit::cli
