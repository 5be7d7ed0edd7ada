// weil, axiom3, psisym, kappa, boxcount

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <variant>

#include "commands.hpp"
#include "pfkit/character.hpp"
#include "pfkit/expsum.hpp"
#include "pfkit/sweep.hpp"
#include "pfkit/term_algebra.hpp"

namespace pfkit::cli {

namespace {

ExtFieldDesc field_for(const Globals& g, unsigned ext) {
  return build_extension(g.require_prime(), ext);
}

/// "3" (an integer, reduced) or "a0:a1:...:a_{e-1}" (power-basis coordinates).
FqElem parse_elem(const std::string& text, const ExtField& field) {
  const auto parts = split_list(text, ':');
  const u64 p = field.characteristic();
  auto residue = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw UsageError("bad field element '" + text + "'");
      return reduce_signed(v, p);
    } catch (const std::logic_error&) {
      throw UsageError("bad field element '" + text + "'");
    }
  };
  if (parts.size() == 1) return field.from_int(residue(parts[0]));
  if (parts.size() != field.degree()) {
    throw UsageError("element '" + text + "' needs " + std::to_string(field.degree()) + " coordinates");
  }
  FqElem x;
  for (const auto& s : parts) x.coeffs.push_back(residue(s));
  return x;
}

std::vector<FqElem> parse_elems(const std::string& text, const ExtField& field) {
  std::vector<FqElem> out;
  for (const auto& s : split_list(text, ';')) out.push_back(parse_elem(s, field));
  return out;
}

Json elem_list(const std::vector<FqElem>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

// ---------------------------------------------------------------- weil

struct WeilOpts {
  std::string poly;
  std::size_t random = 0;
  unsigned min_degree = 2;
  unsigned max_degree = 6;
  std::int64_t coeff_bound = 1000;
};

using WeilOutcome = std::variant<WeilRecord, std::string>;

std::vector<MPoly> weil_corpus(const WeilOpts& o, u64 seed) {
  if (o.min_degree < 1 || o.min_degree > o.max_degree) throw UsageError("need 1 <= --min-degree <= --max-degree");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> deg(o.min_degree, o.max_degree);
  std::uniform_int_distribution<std::int64_t> coeff(-o.coeff_bound, o.coeff_bound);
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < o.random; ++i) {
    const unsigned d = deg(rng);
    MPoly f(1);
    for (unsigned k = 0; k <= d; ++k) {
      std::int64_t c = coeff(rng);
      if (k == d && c == 0) c = 1;
      f.add_term({k}, Rational(c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

Json weil_json(const WeilRecord& r) {
  return Json{{"p", r.p},           {"degree", r.degree},         {"sum", complex_json(r.sum)},
              {"bound", r.bound},   {"normalized", r.normalized}, {"pass", r.pass}};
}

void weil_action(const WeilOpts& o, const Globals& g, Output& out) {
  if (o.poly.empty() == (o.random == 0)) throw UsageError("give exactly one of --poly and --random");
  const std::vector<std::string> names{"x"};
  std::vector<MPoly> polys;
  if (!o.poly.empty()) {
    const auto e = parse_polynomial(o.poly);
    if (e.vars.size() != 1) throw UsageError("weil needs a polynomial in one variable");
    polys.push_back(e.poly);
  } else {
    polys = weil_corpus(o, g.seed);
  }
  const auto primes = g.sweep_primes();
  const auto per_prime = map_primes(primes, g.jobs, [&](u64 p) {
    const auto ch = CharacterDesc::standard(build_extension(p, 1));
    const UnitRootTable table(p);
    std::vector<WeilOutcome> res;
    res.reserve(polys.size());
    for (const auto& f : polys) {
      try {
        res.emplace_back(weil_check(f, ch, table));
      } catch (const BadPrime& e) {
        res.emplace_back(std::string(e.what()));
      } catch (const Error& e) {
        res.emplace_back(std::string(e.what()));
      }
    }
    return res;
  });

  const bool corpus = o.random > 0;
  std::vector<std::string> header{"p", "degree", "magnitude", "bound", "pass"};
  if (corpus) header.insert(header.begin(), "poly");
  CsvTable csv(header);
  std::size_t checks = 0, violations = 0;
  double max_ratio = 0, min_norm = INFINITY, max_norm = 0;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    std::size_t poly_checks = 0, poly_violations = 0, poly_skipped = 0;
    double poly_ratio = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto& oc = per_prime[i][k];
      if (const auto* reason = std::get_if<std::string>(&oc)) {
        ++poly_skipped;
        if (!corpus) out.report.skip(primes[i], *reason);
        continue;
      }
      const auto& r = std::get<WeilRecord>(oc);
      ++poly_checks;
      if (!r.pass) ++poly_violations;
      if (r.bound > 0) poly_ratio = std::max(poly_ratio, r.magnitude / r.bound);
      min_norm = std::min(min_norm, r.normalized);
      max_norm = std::max(max_norm, r.normalized);
      if (!corpus) out.report.records.push_back(weil_json(r));
      std::vector<std::string> row{std::to_string(r.p), std::to_string(r.degree), format_double(r.magnitude),
                                   format_double(r.bound), r.pass ? "1" : "0"};
      if (corpus) row.insert(row.begin(), std::to_string(k));
      csv.row(std::move(row));
    }
    if (corpus) {
      out.report.records.push_back(Json{{"index", k},
                                        {"poly", to_string(polys[k], names)},
                                        {"degree", polys[k].total_degree()},
                                        {"checked", poly_checks},
                                        {"skipped", poly_skipped},
                                        {"max_ratio", poly_ratio},
                                        {"violations", poly_violations}});
    }
    checks += poly_checks;
    violations += poly_violations;
    max_ratio = std::max(max_ratio, poly_ratio);
  }
  out.report.aggregate = Json{{"polynomials", polys.size()}, {"primes", primes.size()},
                              {"checks", checks},            {"violations", violations},
                              {"max_ratio", max_ratio},      {"min_normalized", checks ? min_norm : 0.0},
                              {"max_normalized", max_norm}};
  out.csv = std::move(csv);
  out.failed = violations > 0;
  out.note = std::to_string(checks) + " checks, " + std::to_string(violations) + " violations";
}

// ---------------------------------------------------------------- axiom3

struct Axiom3Opts {
  std::vector<std::string> eqs;
  std::string vars;
  std::vector<std::string> terms;
};

void axiom3_action(const Axiom3Opts& o, const Globals& g, Output& out) {
  const auto curve = parse_point_system(o.eqs, o.vars);
  if (o.terms.empty()) throw UsageError("at least one --term is required");
  LaurentPoly h(curve.nvars);
  for (const auto& t : o.terms) {
    auto [m, c] = parse_laurent_term(t);
    if (m.size() != curve.nvars) throw UsageError("term '" + t + "' has the wrong number of exponents");
    h.add_term(m, c);
  }
  h.validate_real_mean_zero();
  const auto primes = g.sweep_primes();
  EnumOptions eo;
  eo.budget = g.budget;
  const auto results = map_primes(primes, g.jobs, [&](u64 p) -> std::variant<Axiom3Result, std::string> {
    try {
      return axiom3_sup(curve, h, p, eo);
    } catch (const Error& e) {
      return std::string(e.what());
    }
  });
  CsvTable csv({"p", "points", "sup", "tolerance", "pass"});
  std::size_t failures = 0;
  double min_margin = INFINITY;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (const auto* reason = std::get_if<std::string>(&results[i])) {
      out.report.skip(primes[i], *reason);
      continue;
    }
    const auto& r = std::get<Axiom3Result>(results[i]);
    if (!r.pass) ++failures;
    min_margin = std::min(min_margin, r.sup + r.tolerance);
    out.report.records.push_back(Json{{"p", r.p}, {"points", r.points}, {"sup", r.sup},
                                      {"tolerance", r.tolerance}, {"pass", r.pass}});
    csv.row({std::to_string(r.p), std::to_string(r.points), format_double(r.sup), format_double(r.tolerance),
             r.pass ? "1" : "0"});
  }
  out.report.aggregate = Json{{"primes", out.report.records.size()},
                              {"failures", failures},
                              {"coefficient_l1", h.coefficient_l1()}};
  if (std::isfinite(min_margin)) out.report.aggregate["min_margin"] = min_margin;
  out.csv = std::move(csv);
  out.failed = failures > 0;
}

// ---------------------------------------------------------------- psisym

struct PsisymOpts {
  unsigned ext = 1;
  std::string coeffs;
  std::string coeffs2;
  std::string twist;
  std::string verify = "none";
  std::size_t random = 0;
  unsigned max_degree = 4;
};

struct IdentityCheck {
  std::complex<double> lhs, rhs;
  double diff() const { return std::abs(lhs - rhs); }
};

IdentityCheck check_identity(const std::string& which, const PsiSymTerm& a, const PsiSymTerm& b,
                             const CharacterDesc& ch) {
  const auto& field = ch.field();
  if (which == "conj") return {psisym_eval(psisym_conj(a, field), ch), std::conj(psisym_eval(a, ch))};
  if (which == "add") return {psisym_eval(psisym_add(a, b, field), ch), psisym_eval(a, ch) + psisym_eval(b, ch)};
  return {psisym_eval(psisym_mul(a, b, ch), ch), psisym_eval(a, ch) * psisym_eval(b, ch)};
}

std::vector<std::string> identities(const std::string& verify) {
  if (verify == "all") return {"conj", "add", "mul"};
  if (verify == "none") return {};
  return {verify};
}

void psisym_random(const PsisymOpts& o, const Globals& g, Output& out, double tol) {
  const auto ids = identities(o.verify == "none" ? "all" : o.verify);
  std::vector<u64> primes;
  if (g.prime) {
    primes = {g.require_prime()};
  } else {
    primes = primes_in(g.xlimit.value_or(499));
  }
  if (o.max_degree < 1) throw UsageError("--max-degree must be at least 1");
  std::mt19937_64 rng(g.seed);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<unsigned> deg(1, o.max_degree);
  std::map<u64, CharacterDesc> chars;
  CsvTable csv({"instance", "identity", "p", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "diff"});
  std::map<std::string, std::size_t> failures;
  double max_diff = 0;
  for (std::size_t i = 0; i < o.random; ++i) {
    const u64 p = primes[pick(rng)];
    auto it = chars.find(p);
    if (it == chars.end()) it = chars.emplace(p, CharacterDesc::standard(build_extension(p, o.ext))).first;
    const auto& ch = it->second;
    auto random_term = [&] {
      PsiSymTerm t;
      const unsigned d = deg(rng);
      for (unsigned k = 0; k < d; ++k) t.coeffs.push_back(ch.field().random(rng));
      return t;
    };
    const PsiSymTerm a = random_term();
    const PsiSymTerm b = random_term();
    for (const auto& id : ids) {
      const auto c = check_identity(id, a, b, ch);
      const double diff = c.diff();
      max_diff = std::max(max_diff, diff);
      csv.row({std::to_string(i), id, std::to_string(p), format_double(c.lhs.real()), format_double(c.lhs.imag()),
               format_double(c.rhs.real()), format_double(c.rhs.imag()), format_double(diff)});
      auto& f = failures[id];
      if (diff > tol) {
        ++f;
        out.report.records.push_back(Json{{"instance", i}, {"identity", id}, {"p", p}, {"a", elem_list(a.coeffs)},
                                          {"b", elem_list(b.coeffs)}, {"lhs", complex_json(c.lhs)},
                                          {"rhs", complex_json(c.rhs)}, {"diff", diff}});
      }
    }
  }
  std::size_t total = 0;
  Json per = Json::object();
  for (const auto& [id, n] : failures) {
    per[id] = n;
    total += n;
  }
  out.report.aggregate = Json{{"instances", o.random}, {"failures", per}, {"max_diff", max_diff}, {"tol", tol}};
  out.csv = std::move(csv);
  out.failed = total > 0;
  out.note = std::to_string(o.random) + " instances, " + std::to_string(total) + " failures";
}

void psisym_action(const PsisymOpts& o, const Globals& g, Output& out) {
  const double tol = g.tolerance(1e-9);
  if (o.verify != "none" && o.verify != "conj" && o.verify != "add" && o.verify != "mul" && o.verify != "all") {
    throw UsageError("--verify must be one of none, conj, add, mul, all");
  }
  if (o.random > 0) return psisym_random(o, g, out, tol);
  const ExtField field(field_for(g, o.ext));
  if (o.coeffs.empty()) throw UsageError("psisym needs --coeffs (or --random)");
  const auto ch = o.twist.empty() ? CharacterDesc::standard(field.desc())
                                  : CharacterDesc::twisted(field.desc(), parse_elem(o.twist, field));
  const PsiSymTerm a{parse_elems(o.coeffs, field)};
  const auto value = psisym_eval(a, ch);
  out.report.records.push_back(Json{{"term", elem_list(a.coeffs)},
                                    {"roots", elem_list(psisym_roots(a, field))},
                                    {"value", complex_json(value)}});
  CsvTable csv({"quantity", "re", "im"});
  csv.row({"value", format_double(value.real()), format_double(value.imag())});
  std::size_t failures = 0;
  const auto ids = identities(o.verify);
  if (!ids.empty()) {
    const bool binary = o.verify != "conj";
    if (binary && o.coeffs2.empty()) throw UsageError("--verify " + o.verify + " needs --coeffs2");
    const PsiSymTerm b{o.coeffs2.empty() ? std::vector<FqElem>{} : parse_elems(o.coeffs2, field)};
    for (const auto& id : ids) {
      const auto c = check_identity(id, a, b, ch);
      if (c.diff() > tol) ++failures;
      out.report.records.push_back(Json{{"identity", id}, {"lhs", complex_json(c.lhs)},
                                        {"rhs", complex_json(c.rhs)}, {"diff", c.diff()}});
      csv.row({id + "_lhs", format_double(c.lhs.real()), format_double(c.lhs.imag())});
      csv.row({id + "_rhs", format_double(c.rhs.real()), format_double(c.rhs.imag())});
    }
  }
  out.report.aggregate = Json{{"q", field.order()}, {"failures", failures}};
  out.csv = std::move(csv);
  out.failed = failures > 0;
}

// ---------------------------------------------------------------- kappa

struct KappaOpts {
  std::string p_poly;
  std::string q_poly;
  std::string var = "x";
  std::string params;
  unsigned ext = 1;
};

void kappa_action(const KappaOpts& o, const Globals& g, Output& out) {
  const ExtField field(field_for(g, o.ext));
  // union of the names, sorted, with the fibre variable moved last
  auto names = parse_system({o.p_poly, o.q_poly}).front().vars;
  names.erase(std::remove(names.begin(), names.end(), o.var), names.end());
  names.push_back(o.var);
  const auto exprs = parse_system({o.p_poly, o.q_poly}, names);
  const std::vector<FqElem> params = o.params.empty() ? std::vector<FqElem>{} : parse_elems(o.params, field);
  if (params.size() + 1 != names.size()) {
    throw UsageError("expected " + std::to_string(names.size() - 1) + " parameter values");
  }
  const FqElem v = kappa_eval(exprs[0].poly, exprs[1].poly, params, field);
  Json vars = Json::array();
  for (const auto& n : names) vars.push_back(n);
  out.report.records.push_back(Json{{"variables", vars}, {"params", elem_list(params)}, {"value", to_string(v)}});
  out.report.aggregate = Json{{"q", field.order()}};
  CsvTable csv({"value"});
  csv.row({to_string(v)});
  out.csv = std::move(csv);
}

// ---------------------------------------------------------------- boxcount

struct BoxOpts {
  std::vector<std::string> eqs;
  std::string vars;
  std::string box;
  bool quadrant = false;
  int dim = -1;
  std::int64_t hyperplane = 0;
};

PointBox parse_box(const std::string& text, std::size_t n) {
  PointBox b;
  for (const auto& piece : split_list(text)) {
    const auto ends = split_list(piece, ':');
    if (ends.size() != 2) throw UsageError("box range '" + piece + "' must be lo:hi");
    try {
      b.ranges.emplace_back(std::stoull(ends[0]), std::stoull(ends[1]));
    } catch (const std::logic_error&) {
      throw UsageError("bad box range '" + piece + "'");
    }
  }
  if (b.ranges.size() != n) throw UsageError("box needs one range per variable");
  return b;
}

void boxcount_action(const BoxOpts& o, const Globals& g, Output& out) {
  const auto system = parse_point_system(o.eqs, o.vars);
  const u64 p = g.require_prime();
  if (o.dim < 0) throw UsageError("boxcount needs --dim (the declared dimension)");
  if (o.quadrant == !o.box.empty()) throw UsageError("give exactly one of --box and --quadrant");
  PointBox box;
  if (o.quadrant) {
    box.ranges.assign(system.nvars, {0, (p + 1) / 2});
  } else {
    box = parse_box(o.box, system.nvars);
  }
  EnumOptions eo;
  eo.budget = g.budget;
  const auto r = box_count(system, p, box, o.dim, o.hyperplane, eo);
  Json ranges = Json::array();
  for (const auto& [lo, hi] : box.ranges) ranges.push_back(Json::array({lo, hi}));
  Json rec{{"p", r.p},
           {"box", ranges},
           {"count", r.count},
           {"fraction", r.fraction},
           {"expected_fraction", r.expected_fraction},
           {"expected", r.expected},
           {"deviation", std::abs(r.fraction - r.expected_fraction)},
           {"hyperplane_checked", r.hyperplane_checked}};
  if (r.hyperplane) {
    rec["hyperplane"] = Json{{"coeffs", r.hyperplane->coeffs},
                             {"height", r.hyperplane->height},
                             {"primes", r.hyperplane->primes},
                             {"residues", r.hyperplane->residues}};
    if (r.hyperplane->constant) rec["hyperplane"]["constant"] = *r.hyperplane->constant;
  } else {
    rec["hyperplane"] = nullptr;
  }
  out.report.records.push_back(rec);
  out.report.aggregate = Json{{"contained_in_hyperplane", r.hyperplane.has_value()}};
  CsvTable csv({"p", "count", "fraction", "expected_fraction", "hyperplane"});
  csv.row({std::to_string(r.p), std::to_string(r.count), format_double(r.fraction),
           format_double(r.expected_fraction), r.hyperplane ? "1" : "0"});
  out.csv = std::move(csv);
}

}  // namespace

void add_sum_commands(CLI::App& app, std::vector<Command>& out) {
  {
    auto o = std::make_shared<WeilOpts>();
    auto* sub = app.add_subcommand("weil", "Weil bound |sum_x Psi_p(f(x))| <= (d-1) sqrt(p) over a prime sweep");
    sub->add_option("--poly", o->poly, "univariate polynomial f");
    sub->add_option("--random", o->random, "check a seeded corpus of N random polynomials instead");
    sub->add_option("--min-degree", o->min_degree, "corpus degree range (default 2)");
    sub->add_option("--max-degree", o->max_degree, "corpus degree range (default 6)");
    sub->add_option("--coeff-bound", o->coeff_bound, "corpus coefficients in [-B, B] (default 1000)")
        ->check(CLI::PositiveNumber);
    sub->footer("CSV: p,degree,magnitude,bound,pass (a leading poly index column with --random)");
    out.push_back({sub, [o](const Globals& g, Output& r) { weil_action(*o, g, r); }});
  }
  {
    auto o = std::make_shared<Axiom3Opts>();
    auto* sub = app.add_subcommand("axiom3", "sup of a real mean-zero Fourier series h over C(F_p)");
    sub->add_option("--eq", o->eqs, "equation of the curve (repeatable)")->required();
    sub->add_option("--vars", o->vars, "variable order, comma separated");
    sub->add_option("--term", o->terms, "term of h as 'm1,...,mn:re[:im]' (repeatable)")->required();
    sub->footer("CSV: p,points,sup,tolerance,pass");
    out.push_back({sub, [o](const Globals& g, Output& r) { axiom3_action(*o, g, r); }});
  }
  {
    auto o = std::make_shared<PsisymOpts>();
    auto* sub = app.add_subcommand("psisym", "value of Psi_sym(c_1..c_n) over F_q and closure identities");
    sub->add_option("--ext", o->ext, "extension degree e, q = p^e (default 1)")->check(CLI::Range(1u, 62u));
    sub->add_option("--coeffs", o->coeffs, "c_1;...;c_n, each an integer or a0:a1:..");
    sub->add_option("--coeffs2", o->coeffs2, "second term for --verify add|mul");
    sub->add_option("--twist", o->twist, "character x -> Psi_q(c x)");
    sub->add_option("--verify", o->verify, "none, conj, add, mul or all");
    sub->add_option("--random", o->random, "check N seeded random instances (primes up to --xlimit, default 499)");
    sub->add_option("--max-degree", o->max_degree, "degree bound for random terms (default 4)");
    sub->footer("CSV: quantity,re,im; with --random instance,identity,p,lhs_re,lhs_im,rhs_re,rhs_im,diff");
    out.push_back({sub, [o](const Globals& g, Output& r) { psisym_action(*o, g, r); }});
  }
  {
    auto o = std::make_shared<KappaOpts>();
    auto* sub = app.add_subcommand("kappa", "kappa_{P,Q}(b): the common value of Q over the roots of P");
    sub->add_option("--P", o->p_poly, "P(u.., x)")->required();
    sub->add_option("--Q", o->q_poly, "Q(u.., x)")->required();
    sub->add_option("--var", o->var, "fibre variable (default x)");
    sub->add_option("--params", o->params, "values of the other variables, sorted by name, ';' separated");
    sub->add_option("--ext", o->ext, "extension degree e (default 1)")->check(CLI::Range(1u, 62u));
    sub->footer("CSV: value");
    out.push_back({sub, [o](const Globals& g, Output& r) { kappa_action(*o, g, r); }});
  }
  {
    auto o = std::make_shared<BoxOpts>();
    auto* sub = app.add_subcommand("boxcount", "points with all representatives in a box");
    sub->add_option("--eq", o->eqs, "equation (repeatable)")->required();
    sub->add_option("--vars", o->vars, "variable order, comma separated");
    sub->add_option("--box", o->box, "lo:hi,... half-open ranges of representatives");
    sub->add_flag("--quadrant", o->quadrant, "box [0, (p+1)/2) in every coordinate");
    sub->add_option("--dim", o->dim, "declared dimension of the variety")->check(CLI::NonNegativeNumber);
    sub->add_option("--hyperplane", o->hyperplane, "also search hyperplanes of height <= m")
        ->check(CLI::NonNegativeNumber);
    sub->footer("CSV: p,count,fraction,expected_fraction,hyperplane");
    out.push_back({sub, [o](const Globals& g, Output& r) { boxcount_action(*o, g, r); }});
  }
}

}  // namespace pfkit::cli
