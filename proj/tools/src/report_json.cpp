#include "monogen_cli/report_json.hpp"

#include <stdexcept>

#include "monogen/version.hpp"

namespace monogen::cli {

namespace {

// ------------------------------------------------------------------ scalars

Json int_json(const Integer& x) { return x.get_str(); }
Integer int_from(const Json& j) { return Integer(j.get<std::string>()); }

Json val_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}
Valuation val_from(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw std::invalid_argument("bad valuation '" + j.get<std::string>() + "'");
    return Valuation::infinity();
  }
  return Valuation(j.get<std::uint64_t>());
}

Json poly_json(const IntPoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(int_json(c));
  return Json{{"text", f.to_string()}, {"coefficients", std::move(coeffs)}};
}
IntPoly poly_from(const Json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(int_from(c));
  return IntPoly(std::move(coeffs));
}

Json budget_json(const Budget& b, const RunMeta& meta) {
  return Json{{"level", meta.effort},
              {"trial_bound", b.trial_bound},
              {"rho_iterations", b.rho_iterations},
              {"seed", b.seed},
              {"elapsed_ms", meta.elapsed_ms}};
}
Budget budget_from(const Json& j) {
  Budget b;
  b.trial_bound = j.at("trial_bound").get<std::uint64_t>();
  b.rho_iterations = j.at("rho_iterations").get<std::uint64_t>();
  b.seed = j.at("seed").get<std::uint64_t>();
  return b;
}

Json document(std::string_view command, Json inputs, Json effort, Json result) {
  Json doc;
  doc["tool"] = Json{{"name", "monogen"}, {"version", kVersion}};
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["effort"] = std::move(effort);
  doc["result"] = std::move(result);
  return doc;
}

void expect_command(const Json& doc, std::string_view command) {
  if (doc.at("command").get<std::string>() != command)
    throw std::invalid_argument("expected a '" + std::string(command) + "' document");
}

// ------------------------------------------------------- factor / squarefree

Json factorization_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& pp : f.factors) factors.push_back(Json{{"prime", int_json(pp.prime)}, {"exponent", pp.exponent}});
  return Json{{"factors", std::move(factors)},
              {"cofactor", int_json(f.cofactor)},
              {"cofactor_status", to_string(f.cofactor_status)},
              {"complete", f.complete()}};
}
Factorization factorization_from(const Json& j) {
  Factorization f;
  for (const auto& pp : j.at("factors"))
    f.factors.push_back({int_from(pp.at("prime")), pp.at("exponent").get<unsigned long>()});
  f.cofactor = int_from(j.at("cofactor"));
  const auto status = j.at("cofactor_status").get<std::string>();
  if (status == to_string(CofactorStatus::kUnit)) f.cofactor_status = CofactorStatus::kUnit;
  else if (status == to_string(CofactorStatus::kComposite)) f.cofactor_status = CofactorStatus::kComposite;
  else throw std::invalid_argument("bad cofactor status '" + status + "'");
  return f;
}

Json squarefree_json(const SquarefreeStatus& s) {
  if (std::holds_alternative<Squarefree>(s)) return Json{{"type", "squarefree"}};
  if (const auto* ns = std::get_if<NotSquarefree>(&s))
    return Json{{"type", "not-squarefree"}, {"witness", int_json(ns->witness)}};
  return Json{{"type", "unknown"}, {"searched_bound", std::get<SquarefreeUnknown>(s).searched_bound}};
}
SquarefreeStatus squarefree_from(const Json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "squarefree") return Squarefree{};
  if (type == "not-squarefree") return NotSquarefree{int_from(j.at("witness"))};
  if (type == "unknown") return SquarefreeUnknown{j.at("searched_bound").get<std::uint64_t>()};
  throw std::invalid_argument("bad squarefree status '" + type + "'");
}

// ------------------------------------------------------------------ analyze

Json certificate_json(const Certificate& c, unsigned long p) {
  if (const auto* f = std::get_if<FermatCertificate>(&c))
    return Json{{"type", "fermat"}, {"prime", int_json(Integer(p))}, {"valuation", val_json(f->valuation)}};
  if (const auto* s = std::get_if<SquareCertificate>(&c))
    return Json{{"type", "square"}, {"prime", int_json(s->prime)}, {"valuation", s->valuation}, {"level", s->level}};
  if (const auto* u = std::get_if<UnknownCertificate>(&c))
    return Json{{"type", "unknown"},
                {"prime", nullptr},
                {"valuation", nullptr},
                {"searched_bound", u->searched_bound},
                {"level", u->level}};
  return nullptr;
}
Certificate certificate_from(const Json& j) {
  if (j.is_null()) return std::monostate{};
  const auto type = j.at("type").get<std::string>();
  if (type == "fermat") return FermatCertificate{val_from(j.at("valuation"))};
  if (type == "square")
    return SquareCertificate{int_from(j.at("prime")), j.at("valuation").get<std::uint64_t>(),
                             j.at("level").get<unsigned>()};
  if (type == "unknown")
    return UnknownCertificate{j.at("searched_bound").get<std::uint64_t>(), j.at("level").get<unsigned>()};
  throw std::invalid_argument("bad certificate type '" + type + "'");
}

Verdict verdict_from(const std::string& s) {
  for (auto v : {Verdict::kMonogenic, Verdict::kNotMonogenic, Verdict::kUnknown})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("bad verdict '" + s + "'");
}

// ------------------------------------------------------------------ polygon

Json side_json(const Side& s) {
  return Json{{"start", {s.start_x, s.start_y}}, {"end", {s.end_x, s.end_y}}, {"h", s.h}, {"e", s.e}};
}
Side side_from(const Json& j) {
  Side s;
  s.start_x = j.at("start").at(0).get<std::int64_t>();
  s.start_y = j.at("start").at(1).get<std::int64_t>();
  s.end_x = j.at("end").at(0).get<std::int64_t>();
  s.end_y = j.at("end").at(1).get<std::int64_t>();
  s.h = j.at("h").get<std::int64_t>();
  s.e = j.at("e").get<std::int64_t>();
  return s;
}

Json fqpoly_json(const FqPoly& g) {
  Json coeffs = Json::array();
  for (const auto& c : g.coeffs()) coeffs.push_back(c.rep);
  return Json{{"text", g.to_string("y")},
              {"characteristic", g.field().characteristic()},
              {"field_modulus", g.field().modulus()},
              {"coefficients", std::move(coeffs)}};
}
FqPoly fqpoly_from(const Json& j) {
  const auto p = j.at("characteristic").get<std::uint64_t>();
  const auto modulus = j.at("field_modulus").get<std::vector<std::uint64_t>>();
  const auto ctx = modulus.size() == 2 && modulus[0] == 0 ? FqContext::prime_field(p) : FqContext::extension(p, modulus);
  std::vector<FqElem> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(ctx->from_coeffs(c.get<std::vector<std::uint64_t>>()));
  return FqPoly(ctx, std::move(coeffs));
}

Json analysis_json(const PhiAnalysis& a) {
  Json dev = Json::array();
  for (const auto& c : a.development.coefficients) dev.push_back(poly_json(c));
  Json points = Json::array();
  for (const auto& pt : a.polygon.points) points.push_back(Json{pt.x, val_json(pt.y)});
  Json sides = Json::array();
  for (const auto& s : a.polygon.sides) sides.push_back(side_json(s));
  Json residuals = Json::array();
  for (const auto& r : a.residuals) residuals.push_back(Json{{"side", side_json(r.side)}, {"poly", fqpoly_json(r.poly)}});
  return Json{{"phi", poly_json(a.phi)},
              {"multiplicity", a.multiplicity},
              {"development", std::move(dev)},
              {"points", std::move(points)},
              {"sides", std::move(sides)},
              {"ind", a.lattice_points},
              {"index_contribution", a.index_contribution},
              {"residuals", std::move(residuals)},
              {"regular", a.regular}};
}
PhiAnalysis analysis_from(const Json& j, const IntPoly& f) {
  PhiAnalysis a;
  a.phi = poly_from(j.at("phi"));
  a.multiplicity = j.at("multiplicity").get<unsigned>();
  a.development.phi = a.phi;
  a.development.base_poly = f;
  for (const auto& c : j.at("development")) a.development.coefficients.push_back(poly_from(c));
  for (const auto& pt : j.at("points")) a.polygon.points.push_back({pt.at(0).get<std::int64_t>(), val_from(pt.at(1))});
  for (const auto& s : j.at("sides")) a.polygon.sides.push_back(side_from(s));
  a.lattice_points = j.at("ind").get<std::uint64_t>();
  a.index_contribution = j.at("index_contribution").get<std::uint64_t>();
  for (const auto& r : j.at("residuals")) a.residuals.push_back({side_from(r.at("side")), fqpoly_from(r.at("poly"))});
  a.regular = j.at("regular").get<bool>();
  return a;
}

// ------------------------------------------------------------------ dissect

Json shape_json(const PrimeShape& s) { return Json{{"e", s.e}, {"f", s.f}}; }
PrimeShape shape_from(const Json& j) { return {j.at("e").get<unsigned>(), j.at("f").get<unsigned>()}; }

}  // namespace

Json emit(const TowerReport& report, const RunMeta& meta) {
  Json inputs{{"p", report.p}, {"a", int_json(report.a)}, {"N", report.N}};
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back(Json{{"n", v.n},
                            {"status", to_string(v.status)},
                            {"failing_prime", v.failing_prime ? int_json(*v.failing_prime) : Json(nullptr)},
                            {"certificate", certificate_json(v.certificate, report.p)},
                            {"inherited", v.inherited},
                            {"constant_status", squarefree_json(v.constant_status)},
                            {"orbit_value_digits", v.orbit_value_digits}});
  }
  Json result{{"fermat_valuation", val_json(report.fermat_valuation)},
              {"fermat_ok", report.fermat_ok},
              {"p_totally_ramified", report.p_totally_ramified},
              {"first_failure", report.first_failure ? Json(*report.first_failure) : Json(nullptr)},
              {"verdicts", std::move(verdicts)}};
  return document("analyze", std::move(inputs), budget_json(report.budget, meta), std::move(result));
}

TowerReport parse_analyze(const Json& doc) {
  expect_command(doc, "analyze");
  TowerReport r;
  const auto& in = doc.at("inputs");
  r.p = in.at("p").get<unsigned long>();
  r.a = int_from(in.at("a"));
  r.N = in.at("N").get<unsigned>();
  r.budget = budget_from(doc.at("effort"));
  const auto& res = doc.at("result");
  r.fermat_valuation = val_from(res.at("fermat_valuation"));
  r.fermat_ok = res.at("fermat_ok").get<bool>();
  r.p_totally_ramified = res.at("p_totally_ramified").get<bool>();
  if (!res.at("first_failure").is_null()) r.first_failure = res.at("first_failure").get<unsigned>();
  for (const auto& j : res.at("verdicts")) {
    IterateVerdict v;
    v.n = j.at("n").get<unsigned>();
    v.status = verdict_from(j.at("status").get<std::string>());
    if (!j.at("failing_prime").is_null()) v.failing_prime = int_from(j.at("failing_prime"));
    v.certificate = certificate_from(j.at("certificate"));
    v.inherited = j.at("inherited").get<bool>();
    v.constant_status = squarefree_from(j.at("constant_status"));
    v.orbit_value_digits = j.at("orbit_value_digits").get<std::size_t>();
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

Json emit(const FactorDoc& doc, const RunMeta& meta) {
  return document("factor", Json{{"x", int_json(doc.x)}}, budget_json(doc.budget, meta),
                  factorization_json(doc.factorization));
}

FactorDoc parse_factor(const Json& doc) {
  expect_command(doc, "factor");
  return {int_from(doc.at("inputs").at("x")), budget_from(doc.at("effort")), factorization_from(doc.at("result"))};
}

Json emit(const OrbitDoc& doc, const RunMeta& meta) {
  Json values = Json::array();
  for (const auto& c : doc.values) values.push_back(int_json(c));
  return document("orbit", Json{{"p", doc.p}, {"a", int_json(doc.a)}, {"N", doc.N}},
                  Json{{"level", meta.effort}, {"elapsed_ms", meta.elapsed_ms}}, Json{{"values", std::move(values)}});
}

OrbitDoc parse_orbit(const Json& doc) {
  expect_command(doc, "orbit");
  OrbitDoc o;
  const auto& in = doc.at("inputs");
  o.p = in.at("p").get<unsigned long>();
  o.a = int_from(in.at("a"));
  o.N = in.at("N").get<unsigned>();
  for (const auto& c : doc.at("result").at("values")) o.values.push_back(int_from(c));
  return o;
}

Json emit(const PolygonDoc& doc, const RunMeta& meta) {
  bool all_simple = true;
  Json analyses = Json::array();
  for (const auto& a : doc.analyses) {
    all_simple = all_simple && a.multiplicity == 1;
    analyses.push_back(analysis_json(a));
  }
  Json inputs{{"poly", poly_json(doc.f)}, {"prime", doc.prime}, {"phi", doc.phi ? poly_json(*doc.phi) : Json(nullptr)}};
  Json result{{"all_multiplicities_one", all_simple && !doc.phi}, {"analyses", std::move(analyses)}};
  return document("polygon", std::move(inputs), Json{{"level", meta.effort}, {"elapsed_ms", meta.elapsed_ms}},
                  std::move(result));
}

PolygonDoc parse_polygon(const Json& doc) {
  expect_command(doc, "polygon");
  PolygonDoc out;
  const auto& in = doc.at("inputs");
  out.f = poly_from(in.at("poly"));
  out.prime = in.at("prime").get<unsigned long>();
  if (!in.at("phi").is_null()) out.phi = poly_from(in.at("phi"));
  for (const auto& a : doc.at("result").at("analyses")) out.analyses.push_back(analysis_from(a, out.f));
  return out;
}

Json emit(const DissectDoc& doc, const RunMeta& meta) {
  Json factors = Json::array();
  for (const auto& pd : doc.report.factors) {
    Json sides = Json::array();
    for (const auto& sd : pd.sides) {
      Json primes = Json::array();
      for (const auto& s : sd.primes) primes.push_back(shape_json(s));
      sides.push_back(Json{{"side", side_json(sd.side)},
                           {"primes", std::move(primes)},
                           {"requires_higher_order", sd.requires_higher_order}});
    }
    factors.push_back(Json{{"phi", poly_json(pd.phi)},
                           {"multiplicity", pd.multiplicity},
                           {"hensel", pd.hensel},
                           {"sides", std::move(sides)}});
  }
  Json splitting = nullptr;
  if (doc.report.splitting) {
    splitting = Json::array();
    for (const auto& s : *doc.report.splitting) splitting.push_back(shape_json(s));
  }
  Json result{{"complete", doc.report.complete()}, {"factors", std::move(factors)}, {"splitting", std::move(splitting)}};
  return document("dissect", Json{{"poly", poly_json(doc.f)}, {"prime", doc.prime}},
                  Json{{"level", meta.effort}, {"elapsed_ms", meta.elapsed_ms}}, std::move(result));
}

DissectDoc parse_dissect(const Json& doc) {
  expect_command(doc, "dissect");
  DissectDoc out;
  out.f = poly_from(doc.at("inputs").at("poly"));
  out.prime = doc.at("inputs").at("prime").get<unsigned long>();
  const auto& res = doc.at("result");
  for (const auto& j : res.at("factors")) {
    PhiDissection pd;
    pd.phi = poly_from(j.at("phi"));
    pd.multiplicity = j.at("multiplicity").get<unsigned>();
    pd.hensel = j.at("hensel").get<bool>();
    for (const auto& s : j.at("sides")) {
      SideDissection sd;
      sd.side = side_from(s.at("side"));
      for (const auto& sh : s.at("primes")) sd.primes.push_back(shape_from(sh));
      sd.requires_higher_order = s.at("requires_higher_order").get<bool>();
      pd.sides.push_back(std::move(sd));
    }
    out.report.factors.push_back(std::move(pd));
  }
  if (!res.at("splitting").is_null()) {
    std::vector<PrimeShape> shapes;
    for (const auto& s : res.at("splitting")) shapes.push_back(shape_from(s));
    out.report.splitting = std::move(shapes);
  }
  return out;
}

}  // namespace monogen::cli
