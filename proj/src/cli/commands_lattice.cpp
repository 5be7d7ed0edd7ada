// latbasis, valueset

#include "commands.hpp"

namespace pfkit::cli {

namespace {

struct LatticeOpts {
  std::string field;
  std::vector<std::string> elems;
  bool hnf = false;
  bool sp = false;
};

struct Parsed {
  NumberFieldDesc K;
  std::string symbol = "a";
  std::vector<NFElem> elems;
};

Parsed parse_inputs(const LatticeOpts& o) {
  Parsed r;
  if (o.field.empty()) {
    r.K = rational_field();
  } else {
    r.K = nf_build(parse_intpoly(o.field, &r.symbol));
  }
  if (o.elems.empty()) throw UsageError("at least one --elem is required");
  for (const auto& e : o.elems) r.elems.push_back(nf_from_poly(parse_ratpoly(e, r.symbol), r.K));
  return r;
}

std::string poly_string(const IntPoly& f, const std::string& symbol) {
  MPoly m(1);
  for (std::size_t i = 0; i < f.size(); ++i) m.add_term({static_cast<std::uint32_t>(i)}, Rational(f[i]));
  return to_string(m, std::vector<std::string>{symbol});
}

Json field_json(const Parsed& in) {
  return Json{{"degree", in.K.degree()},
              {"polynomial", poly_string(in.K.f, in.symbol)},
              {"discriminant", bigint_json(in.K.disc)},
              {"certificate", in.K.certificate.describe()}};
}

Json elem_strings(const std::vector<NFElem>& xs, const std::string& symbol) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x, symbol));
  return a;
}

/// lhs[i] == sum_j m[i][j] rhs[j] for every i
bool combination_holds(const std::vector<NFElem>& lhs, const IntMatrix& m, const std::vector<NFElem>& rhs,
                       std::size_t degree) {
  if (m.size() != lhs.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (m[i].size() != rhs.size()) return false;
    NFElem acc{std::vector<Rational>(degree, Rational(0))};
    for (std::size_t j = 0; j < rhs.size(); ++j) acc = nf_add(acc, nf_scale(rhs[j], Rational(m[i][j])));
    if (!(acc == lhs[i])) return false;
  }
  return true;
}

void latbasis_action(const LatticeOpts& o, const Globals&, Output& out) {
  const auto in = parse_inputs(o);
  const auto lb = o.hnf ? lattice_basis_hnf(in.elems) : lattice_basis(in.elems);
  const auto rel = qlin_relations(in.elems);
  const std::size_t d = in.K.degree();
  const bool expr_ok = combination_holds(in.elems, lb.expression, lb.basis, d);
  const bool gen_ok = combination_holds(lb.basis, lb.generators, in.elems, d);
  Json relations = Json::array();
  for (const auto& r : rel) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(bigint_json(v));
    relations.push_back(row);
  }
  out.report.records.push_back(Json{{"field", field_json(in)},
                                    {"inputs", elem_strings(in.elems, in.symbol)},
                                    {"basis", elem_strings(lb.basis, in.symbol)},
                                    {"expression", matrix_json(lb.expression)},
                                    {"generators", matrix_json(lb.generators)},
                                    {"relations", relations}});
  out.report.aggregate = Json{{"rank", lb.basis.size()}, {"expression_ok", expr_ok}, {"generators_ok", gen_ok}};
  CsvTable csv({"basis_index", "element"});
  for (std::size_t j = 0; j < lb.basis.size(); ++j) csv.row({std::to_string(j), to_string(lb.basis[j], in.symbol)});
  out.csv = std::move(csv);
  out.failed = !(expr_ok && gen_ok);
}

/// "(z1^3, z1^2, z1^5)"
std::string describe_tuple(const IntMatrix& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ", ";
    std::string entry;
    for (std::size_t j = 0; j < e[i].size(); ++j) {
      if (e[i][j] == 0) continue;
      if (!entry.empty()) entry += "*";
      entry += "z" + std::to_string(j + 1);
      if (e[i][j] != 1) entry += "^" + (e[i][j] < 0 ? "(" + e[i][j].str() + ")" : e[i][j].str());
    }
    s += entry.empty() ? "1" : entry;
  }
  return s + ")";
}

void valueset_action(const LatticeOpts& o, const Globals&, Output& out) {
  const auto in = parse_inputs(o);
  const auto vs = value_set(in.elems, o.sp);
  Json annotations = Json::array();
  CsvTable csv({"basis_index", "element", "k", "value"});
  for (std::size_t j = 0; j < vs.lattice.basis.size(); ++j) {
    const RationalAnnotation* ann = nullptr;
    for (const auto& a : vs.annotations) {
      if (a.basis_index == j) ann = &a;
    }
    const std::string elem = to_string(vs.lattice.basis[j], in.symbol);
    if (!ann) {
      csv.row({std::to_string(j), elem, "", ""});
      continue;
    }
    Json branches = Json::array();
    for (const auto& b : ann->branches) {
      branches.push_back(Json{{"k", b.k}, {"value", b.value.str()}});
      csv.row({std::to_string(j), elem, std::to_string(b.k), b.value.str()});
    }
    annotations.push_back(Json{{"basis_index", ann->basis_index},
                               {"value", ann->value.str()},
                               {"denominator", ann->denominator},
                               {"branches", branches}});
  }
  out.report.records.push_back(Json{{"field", field_json(in)},
                                    {"inputs", elem_strings(in.elems, in.symbol)},
                                    {"basis", elem_strings(vs.lattice.basis, in.symbol)},
                                    {"exponents", matrix_json(vs.exponents)},
                                    {"tuple", describe_tuple(vs.exponents)},
                                    {"annotations", annotations}});
  out.report.aggregate = Json{{"sp_mode", vs.sp_mode},
                              {"torus_dimension", vs.lattice.basis.size()},
                              {"free_dimension", vs.free_dimension}};
  out.csv = std::move(csv);
}

}  // namespace

void add_lattice_commands(CLI::App& app, std::vector<Command>& out) {
  for (bool values : {false, true}) {
    auto o = std::make_shared<LatticeOpts>();
    auto* sub = values ? app.add_subcommand("valueset", "possible values of (Psi(e_1), .., Psi(e_k)) as a torus image")
                       : app.add_subcommand("latbasis", "basis of the additive group generated by elements of Q(a)");
    sub->add_option("--field", o->field, "monic irreducible f defining Q(a) = Q[a]/(f); default Q");
    sub->add_option("--elem", o->elems, "element as a polynomial in the field variable (repeatable)")->required();
    if (values) {
      sub->add_flag("--sp", o->sp, "pin rational basis elements by the SP congruence laws");
      sub->footer("CSV: basis_index,element,k,value (one row per SP branch)");
    } else {
      sub->add_flag("--hnf", o->hnf, "always use the Hermite normal form");
      sub->footer("CSV: basis_index,element");
    }
    out.push_back({sub, [o, values](const Globals& g, Output& r) {
                     values ? valueset_action(*o, g, r) : latbasis_action(*o, g, r);
                   }});
  }
}

}  // namespace pfkit::cli
