#include <doctest.h>

#include <json.hpp>
#include <random>
#include <sstream>

#include "pfkit/cli/parse.hpp"
#include "pfkit/cli/run.hpp"
#include "pfkit/error.hpp"

using namespace pfkit;
using namespace pfkit::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string random_expr(std::mt19937_64& rng, int depth) {
  const char* vars[] = {"x", "y", "z"};
  if (depth == 0 || rng() % 3 == 0) {
    if (rng() % 2) return vars[rng() % 3];
    std::string c = std::to_string(rng() % 20);
    if (rng() % 4 == 0) c += "/" + std::to_string(1 + rng() % 7);
    return c;
  }
  const auto a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
  switch (rng() % 4) {
    case 0: return "(" + a + ") + (" + b + ")";
    case 1: return "(" + a + ") - (" + b + ")";
    case 2: return "(" + a + ")*(" + b + ")";
    default: return "(" + a + ")^" + std::to_string(rng() % 3);
  }
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parse examples") {
    const auto e = parse_polynomial("y^2 - x^3 - x");
    CHECK(e.vars == std::vector<std::string>{"x", "y"});
    CHECK(print(e) == "-x^3 + y^2 - x");
    CHECK(parse_polynomial("7").vars == std::vector<std::string>{"x"});
    CHECK(print(parse_polynomial("-(x - 1)^2")) == "-x^2 + 2*x - 1");
    CHECK(print(parse_polynomial("x*1/2")) == "1/2*x");
    CHECK_THROWS_AS(parse_polynomial("x/2"), ParseError);
    const auto d = parse_polynomial("b*a", std::vector<std::string>{"b", "a"});
    CHECK(d.poly.coeff({1, 1}) == 1);
  }

  TEST_CASE("parse errors carry offsets") {
    CHECK_THROWS_WITH(parse_polynomial("x^"), doctest::Contains("expected exponent at offset 2"));
    CHECK_THROWS_AS(parse_polynomial("2x"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x + "), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^99999999999"), ParseError);
    CHECK_THROWS(parse_polynomial("x + w", std::vector<std::string>{"x"}));
    CHECK(split_list(" a, b ,c") == std::vector<std::string>{"a", "b", "c"});
    CHECK_THROWS(split_list("a,,b"));
  }

  TEST_CASE("print and parse round trip") {
    std::mt19937_64 rng(12);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int it = 0; it < 200; ++it) {
      const auto e = parse_polynomial(random_expr(rng, 3), vars);
      const auto back = parse_polynomial(print(e), vars);
      CHECK(back.poly == e.poly);
    }
    const auto sys = parse_system({"y - x^2", "z"});
    CHECK(sys[0].vars == vars);
    CHECK(sys[1].poly.nvars() == 3);
  }

  TEST_CASE("exit codes") {
    CHECK(call({"--help"}).code == kExitOk);
    CHECK(call({}).code == kExitUsage);
    CHECK(call({"nosuch"}).code == kExitUsage);
    const auto bad = call({"weil", "--poly", "x^", "--prime", "7"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("expected exponent at offset 2") != std::string::npos);
    CHECK(call({"dfi", "--poly", "x^2-1", "--xlimit", "100"}).code == kExitUsage);
    CHECK(call({"spcheck", "--n", "3", "--xlimit", "200"}).code == kExitOk);
    CHECK(call({"dfi", "--poly", "x^2+1", "--xlimit", "2000", "--ks-max", "0.0001"}).code == kExitCheckFailed);
  }

  TEST_CASE("json report shape") {
    const auto r = call({"spcheck", "--n", "3", "--xlimit", "10"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "spcheck");
    CHECK(j["params"]["--n"] == "3");
    CHECK(j["params"].find("--jobs") == j["params"].end());
    bool found = false;
    for (const auto& rec : j["records"]) {
      if (rec["p"] == 7) {
        CHECK(rec["distance"] == "1/21");
        CHECK(rec["nearest"] == "2/3");
        found = true;
      }
      if (rec["p"] == 5) CHECK(rec["distance"] == "1/15");
    }
    CHECK(found);
  }

  TEST_CASE("csv output") {
    const auto r = call({"dfi", "--poly", "x^2+1", "--xlimit", "100", "--csv", "-"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("p,root,angle_num,angle_den\n", 0) == 0);
    CHECK(r.out.find("\n5,2,2,5\n5,3,3,5\n") != std::string::npos);
  }

  TEST_CASE("reports are deterministic") {
    const std::vector<std::string> base{"weil", "--random", "5", "--xlimit", "300", "--seed", "4", "--json", "-"};
    auto eight = base;
    eight.push_back("--jobs");
    eight.push_back("8");
    const auto a = call(base), b = call(base), c = call(eight);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }

  TEST_CASE("valueset commands") {
    const auto r = call({"valueset", "--elem", "1/2", "--elem", "1/3", "--elem", "5/6"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["records"][0]["tuple"] == "(z1^3, z1^2, z1^5)");
    const auto sp = nlohmann::json::parse(call({"valueset", "--elem", "1/3", "--sp"}).out);
    const auto& br = sp["records"][0]["annotations"][0]["branches"];
    REQUIRE(br.size() == 2);
    CHECK(br[0]["value"] == "1/3");
    CHECK(br[1]["value"] == "2/3");
  }
}
