#include "monogen_cli/app.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "monogen/version.hpp"
#include "monogen_cli/polyspec.hpp"
#include "monogen_cli/report_json.hpp"

namespace monogen::cli {

namespace {

// f^N(0) has about p^(N-1) * log2|a| bits; refuse orbits past this.
constexpr double kMaxOrbitBits = 1u << 26;

struct Options {
  unsigned long p = 0;
  std::string a;
  unsigned N = 0;
  unsigned long prime = 0;
  std::string poly;
  std::string phi;
  std::string x;
  std::string effort = "default";
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
};

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Integer parse_integer(const std::string& s, const char* what) {
  Integer x;
  const char* text = s.c_str();
  if (*text == '+') ++text;
  if (s.empty() || x.set_str(text, 10) != 0) throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
  return x;
}

void require_prime(unsigned long p, const char* what) {
  if (p < 2 || !is_probable_prime(Integer(p))) throw UsageError(std::string(what) + " must be prime");
}

void check_orbit_size(unsigned long p, const Integer& a, unsigned N) {
  const double bits = std::max<double>(1.0, static_cast<double>(mpz_sizeinbase(a.get_mpz_t(), 2)));
  if (std::log2(bits) + (N - 1) * std::log2(static_cast<double>(p)) > std::log2(kMaxOrbitBits))
    throw UsageError("N too large: f^N(0) would exceed " + std::to_string(static_cast<long>(kMaxOrbitBits)) + " bits");
}

IntPoly parse_monic(const std::string& text, const char* what) {
  IntPoly f = parse_poly(text);
  if (!f.is_monic() || f.degree() < 1) throw UsageError(std::string(what) + " must be monic of positive degree");
  return f;
}

void print_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string describe(const Certificate& c, unsigned long p) {
  if (const auto* f = std::get_if<FermatCertificate>(&c))
    return "v_" + std::to_string(p) + "(a^" + std::to_string(p) + " - a) = " + f->valuation.to_string();
  if (const auto* s = std::get_if<SquareCertificate>(&c))
    return "v_" + s->prime.get_str() + "(f^" + std::to_string(s->level) + "(0)) = " + std::to_string(s->valuation);
  if (const auto* u = std::get_if<UnknownCertificate>(&c))
    return "f^" + std::to_string(u->level) + "(0) has no square prime factor <= " + std::to_string(u->searched_bound) +
           ", cofactor undecided";
  return {};
}

// ------------------------------------------------------------------ analyze

int cmd_analyze(const Options& o, std::ostream& out) {
  require_prime(o.p, "--p");
  if (o.N == 0) throw UsageError("--N must be at least 1");
  const Integer a = parse_integer(o.a, "--a");
  if (a == 0) throw UsageError("--a must be nonzero");
  check_orbit_size(o.p, a, o.N);
  const Budget budget = budget_for(parse_effort(o.effort), o.seed);

  Stopwatch clock;
  const TowerReport report = analyze_tower(o.p, a, o.N, budget);
  const RunMeta meta{o.effort, clock.elapsed_ms()};

  if (o.json) {
    print_json(out, emit(report, meta));
  } else {
    out << "f(x) = " << radical_poly(o.p, a).to_string() << ", N = " << o.N << ", effort " << o.effort << '\n';
    out << "v_" << o.p << "(a^" << o.p << " - a) = " << report.fermat_valuation.to_string()
        << (report.fermat_ok ? "" : "  (p-maximality fails)") << '\n';
    const auto constants = orbit(o.p, a, o.N);
    for (const auto& v : report.verdicts) {
      out << "n=" << v.n << "  " << to_string(v.status);
      if (v.failing_prime) out << "  prime " << v.failing_prime->get_str();
      const std::string cert = describe(v.certificate, o.p);
      if (!cert.empty()) out << "  [" << cert << (v.inherited ? ", inherited" : "") << ']';
      out << "  f^" << v.n << "(0) = ";
      if (v.orbit_value_digits <= 40) out << constants[v.n - 1].get_str();
      else out << '(' << v.orbit_value_digits << " digits)";
      out << '\n';
    }
  }

  bool failed = false, unknown = false;
  for (const auto& v : report.verdicts) {
    failed = failed || v.status == Verdict::kNotMonogenic;
    unknown = unknown || v.status == Verdict::kUnknown;
  }
  return failed ? kExitNotMonogenic : unknown ? kExitUnknown : kExitOk;
}

// ------------------------------------------------------------------ polygon

PhiAnalysis analyze_one(const IntPoly& f, const IntPoly& phi, std::uint64_t p) {
  PhiAnalysis a;
  a.phi = phi;
  a.development = phi_development(f, phi);
  a.multiplicity = 0;
  for (const auto& m : factor_mod_p(f, p))
    if (FqPoly::reduce(FqContext::prime_field(p), m.lift) == FqPoly::reduce(FqContext::prime_field(p), phi))
      a.multiplicity = m.multiplicity;
  a.polygon = principal_polygon(a.development, p);
  const auto field = FqContext::residue_field(p, phi);
  for (const auto& side : a.polygon.sides) {
    a.residuals.push_back(residual_polynomial(a.development, side, p, field));
    if (!is_separable(a.residuals.back().poly)) a.regular = false;
  }
  a.lattice_points = ind_phi(a.polygon);
  a.index_contribution = static_cast<std::uint64_t>(phi.degree()) * a.lattice_points;
  return a;
}

std::string point_text(std::int64_t x, std::int64_t y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

std::string side_text(const Side& s) {
  return point_text(s.start_x, s.start_y) + " -> " + point_text(s.end_x, s.end_y) + ", slope -" + std::to_string(s.h) +
         "/" + std::to_string(s.e);
}

void print_analysis(std::ostream& out, const PhiAnalysis& a) {
  out << "phi = " << a.phi.to_string() << ", multiplicity " << a.multiplicity << '\n';
  out << "  development:";
  for (std::size_t i = 0; i < a.development.coefficients.size(); ++i)
    out << (i ? ", " : " ") << "a_" << i << " = " << a.development.coefficients[i].to_string();
  out << "\n  points:";
  for (const auto& pt : a.polygon.points) out << " (" << pt.x << ',' << pt.y.to_string() << ')';
  out << '\n';
  for (const auto& r : a.residuals)
    out << "  side " << side_text(r.side) << ", degree " << r.side.degree() << ", residual " << r.poly.to_string("y")
        << (is_separable(r.poly) ? "" : " (not separable)") << '\n';
  out << "  ind = " << a.lattice_points << '\n';
}

int cmd_polygon(const Options& o, std::ostream& out) {
  require_prime(o.prime, "--prime");
  const IntPoly f = parse_monic(o.poly, "--poly");
  Stopwatch clock;
  PolygonDoc doc{f, o.prime, std::nullopt, {}};
  if (!o.phi.empty()) {
    doc.phi = parse_monic(o.phi, "--phi");
    if (doc.phi->degree() > f.degree()) throw UsageError("deg phi exceeds deg f");
    doc.analyses.push_back(analyze_one(f, *doc.phi, o.prime));
  } else {
    doc.analyses = analyze_phis(f, o.prime);
  }
  const RunMeta meta{o.effort, clock.elapsed_ms()};
  if (o.json) {
    print_json(out, emit(doc, meta));
    return kExitOk;
  }
  out << "f(x) = " << f.to_string() << ", p = " << o.prime << '\n';
  bool all_simple = !doc.phi;
  for (const auto& a : doc.analyses) all_simple = all_simple && a.multiplicity == 1;
  if (all_simple) {
    out << "no principal polygon (all multiplicities 1)\n";
    return kExitOk;
  }
  for (const auto& a : doc.analyses) print_analysis(out, a);
  return kExitOk;
}

// ------------------------------------------------------------------ dissect

std::string shape_text(const PrimeShape& s) { return "e=" + std::to_string(s.e) + ",f=" + std::to_string(s.f); }

int cmd_dissect(const Options& o, std::ostream& out) {
  require_prime(o.prime, "--prime");
  const IntPoly f = parse_monic(o.poly, "--poly");
  Stopwatch clock;
  DissectDoc doc{f, o.prime, dissect(f, o.prime)};
  const RunMeta meta{o.effort, clock.elapsed_ms()};
  if (o.json) {
    print_json(out, emit(doc, meta));
    return kExitOk;
  }
  out << "f(x) = " << f.to_string() << ", p = " << o.prime << '\n';
  for (const auto& pd : doc.report.factors) {
    out << "phi = " << pd.phi.to_string() << ", multiplicity " << pd.multiplicity;
    if (pd.hensel) {
      out << ": e=1,f=" << pd.phi.degree() << '\n';
      continue;
    }
    out << '\n';
    for (const auto& sd : pd.sides) {
      out << "  side " << side_text(sd.side) << ": ";
      if (sd.requires_higher_order) {
        out << "residual not separable, requires higher order\n";
        continue;
      }
      for (std::size_t i = 0; i < sd.primes.size(); ++i) out << (i ? "; " : "") << shape_text(sd.primes[i]);
      out << '\n';
    }
  }
  out << "splitting: ";
  if (!doc.report.splitting) {
    out << "incomplete\n";
  } else {
    const auto& shapes = *doc.report.splitting;
    for (std::size_t i = 0; i < shapes.size(); ++i) out << (i ? "; " : "") << shape_text(shapes[i]);
    out << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------------- orbit

int cmd_orbit(const Options& o, std::ostream& out) {
  if (o.p < 2) throw UsageError("--p must be at least 2");
  if (o.N == 0) throw UsageError("--N must be at least 1");
  const Integer a = parse_integer(o.a, "--a");
  check_orbit_size(o.p, a, o.N);
  Stopwatch clock;
  OrbitDoc doc{o.p, a, o.N, orbit(o.p, a, o.N)};
  const RunMeta meta{o.effort, clock.elapsed_ms()};
  if (o.json) {
    print_json(out, emit(doc, meta));
    return kExitOk;
  }
  for (std::size_t n = 0; n < doc.values.size(); ++n)
    out << "f^" << n + 1 << "(0) = " << doc.values[n].get_str() << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------- factor

std::string factorization_text(const Factorization& f) {
  std::string s;
  for (const auto& pp : f.factors) {
    if (!s.empty()) s += " * ";
    s += pp.prime.get_str();
    if (pp.exponent > 1) s += "^" + std::to_string(pp.exponent);
  }
  if (!f.complete()) s += (s.empty() ? "" : " * ") + std::string("[composite ") + f.cofactor.get_str() + "]";
  return s.empty() ? "unit" : s;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const Integer x = parse_integer(o.x, "x");
  if (x == 0) throw UsageError("x must be nonzero");
  const Budget budget = budget_for(parse_effort(o.effort), o.seed);
  Stopwatch clock;
  FactorDoc doc{x, budget, factor(x, budget)};
  const RunMeta meta{o.effort, clock.elapsed_ms()};
  if (o.json) {
    print_json(out, emit(doc, meta));
    return kExitOk;
  }
  out << x.get_str() << " = " << (x < 0 ? "-1 * " : "") << factorization_text(doc.factorization) << '\n';
  if (!doc.factorization.complete())
    out << "cofactor left composite after trial division to " << budget.trial_bound << " and "
        << budget.rho_iterations << " rho iterations\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monogenicity of iterate towers of x^p - a", "monogen"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&o](CLI::App* cmd) {
    cmd->add_option("--effort", o.effort, "Factoring budget")->check(CLI::IsMember({"quick", "default", "deep"}));
    cmd->add_option("--seed", o.seed, "Seed for rho and Miller-Rabin");
    cmd->add_flag("--json", o.json, "Emit one JSON document");
  };

  auto* analyze = app.add_subcommand("analyze", "Per-level monogenicity of the tower of x^p - a");
  analyze->add_option("--p", o.p, "Prime p")->required();
  analyze->add_option("--a", o.a, "Nonzero integer a")->required();
  analyze->add_option("--N", o.N, "Number of levels")->required();
  add_common(analyze);

  auto* polygon = app.add_subcommand("polygon", "Principal phi-polygons, ind and residual polynomials");
  polygon->add_option("--poly", o.poly, "Monic polynomial")->required();
  polygon->add_option("--prime", o.prime, "Prime")->required();
  polygon->add_option("--phi", o.phi, "A monic lift of one irreducible factor mod p");
  add_common(polygon);

  auto* dissect_cmd = app.add_subcommand("dissect", "Splitting shape of a prime");
  dissect_cmd->add_option("--poly", o.poly, "Monic polynomial")->required();
  dissect_cmd->add_option("--prime", o.prime, "Prime")->required();
  add_common(dissect_cmd);

  auto* orbit_cmd = app.add_subcommand("orbit", "Constants f^n(0), n = 1..N");
  orbit_cmd->add_option("--p", o.p, "Exponent p")->required();
  orbit_cmd->add_option("--a", o.a, "Integer a")->required();
  orbit_cmd->add_option("--N", o.N, "Number of terms")->required();
  add_common(orbit_cmd);

  auto* factor_cmd = app.add_subcommand("factor", "Factor an integer within the effort budget");
  factor_cmd->add_option("x", o.x, "Nonzero integer")->required();
  add_common(factor_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*polygon) return cmd_polygon(o, out);
    if (*dissect_cmd) return cmd_dissect(o, out);
    if (*orbit_cmd) return cmd_orbit(o, out);
    return cmd_factor(o, out);
  } catch (const ReducibleRadicalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace monogen::cli
