#include "monogen/monogenic.hpp"

#include <algorithm>
#include <string>

namespace monogen {

namespace {

void require_prime(unsigned long p, const char* who) {
  if (p < 2 || !is_probable_prime(Integer(p))) throw std::invalid_argument(std::string(who) + ": p must be prime");
}

void require_irreducible(unsigned long p, const Integer& a) {
  if (a == 0) throw std::invalid_argument("a must be nonzero");
  if (!is_irreducible_radical(p, a)) {
    Integer root;
    mpz_root(root.get_mpz_t(), a.get_mpz_t(), p);
    throw ReducibleRadicalError(p, a, root);
  }
}

std::size_t decimal_digits(const Integer& x) {
  if (x == 0) return 1;
  return Integer(abs(x)).get_str().size();
}

// Squarefree status of c = f^n(0), first retrying primes whose squares
// already divided an earlier constant.
SquarefreeStatus constant_status(const Integer& c, const std::vector<Integer>& known_squares, const Budget& budget) {
  for (const auto& q : known_squares) {
    Integer q2 = q * q;
    if (mpz_divisible_p(c.get_mpz_t(), q2.get_mpz_t())) return NotSquarefree{q};
  }
  return squarefree_status(c, budget);
}

void check_p_witness(unsigned long p, const Integer& a, bool fermat_ok, const SquarefreeStatus& status) {
  const auto* bad = std::get_if<NotSquarefree>(&status);
  if (!bad || bad->witness != p || !fermat_ok) return;
  if (!mpz_divisible_ui_p(a.get_mpz_t(), p))
    throw std::logic_error("p^2 divides f^n(0) although p does not divide a and a^p != a mod p^2");
}

}  // namespace

ReducibleRadicalError::ReducibleRadicalError(unsigned long p, Integer a, Integer root)
    : std::invalid_argument("x^" + std::to_string(p) + " - " + a.get_str() + " is reducible: " + a.get_str() +
                            " = (" + root.get_str() + ")^" + std::to_string(p)),
      p_(p),
      a_(std::move(a)),
      root_(std::move(root)) {}

RadicalCriterionContext radical_criterion_context(unsigned long n, const Integer& a, const Integer& ell) {
  if (n < 2) throw std::invalid_argument("radical_criterion_context: n must be at least 2");
  RadicalCriterionContext ctx;
  ctx.n = n;
  ctx.a = a;
  ctx.ell = ell;
  ctx.m = n;
  while (mpz_divisible_p(Integer(ctx.m).get_mpz_t(), ell.get_mpz_t())) {
    ctx.m /= ell.get_ui();
    ++ctx.e;
  }
  // epsilon = e mod f in [1, f] with f = 1; beta = a^(ell^(f - epsilon)) = a.
  ctx.residue_degree = 1;
  ctx.epsilon = 1;
  ctx.beta = a;
  return ctx;
}

bool radical_maximality_q(unsigned long n, const Integer& a, const Integer& ell) {
  const auto ctx = radical_criterion_context(n, a, ell);
  if (mpz_divisible_p(a.get_mpz_t(), ell.get_mpz_t())) return vp(a, ell) == 1;
  if (ctx.e == 0) return true;
  // a - beta^(ell^e) is divisible by ell (Fermat), so its valuation is 1
  // exactly when it is nonzero mod ell^2.
  const Integer ell2 = ell * ell;
  Integer exponent, power;
  mpz_pow_ui(exponent.get_mpz_t(), ell.get_mpz_t(), ctx.e);
  mpz_powm(power.get_mpz_t(), ctx.beta.get_mpz_t(), exponent.get_mpz_t(), ell2.get_mpz_t());
  Integer diff = a - power;
  mpz_mod(diff.get_mpz_t(), diff.get_mpz_t(), ell2.get_mpz_t());
  return diff != 0;
}

PMaximality p_maximality_tower(unsigned long p, const Integer& a) {
  require_prime(p, "p_maximality_tower");
  require_irreducible(p, a);
  PMaximality out;
  out.fermat = fermat_valuation(p, a);
  out.maximal = out.fermat == 1;
  return out;
}

SquarefreeStatus ell_check(unsigned long p, const Integer& a, unsigned n, const Budget& budget) {
  require_prime(p, "ell_check");
  auto status = squarefree_status(orbit_constant(p, a, n), budget);
  check_p_witness(p, a, fermat_valuation(p, a) == 1, status);
  return status;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kMonogenic: return "monogenic";
    case Verdict::kNotMonogenic: return "not-monogenic";
    case Verdict::kUnknown: return "unknown";
  }
  return "?";
}

TowerReport analyze_tower(unsigned long p, const Integer& a, unsigned N, const Budget& budget) {
  require_prime(p, "analyze_tower");
  if (N == 0) throw std::invalid_argument("analyze_tower: N must be at least 1");
  require_irreducible(p, a);

  TowerReport report;
  report.p = p;
  report.a = a;
  report.N = N;
  report.budget = budget;
  // v_p(a^(p^m) - a) does not depend on m, so one evaluation covers every level.
  report.fermat_valuation = fermat_valuation(p, a);
  report.fermat_ok = report.fermat_valuation == 1;
  report.p_totally_ramified = report.fermat_ok;

  std::vector<Integer> known_squares;
  // Earliest definitive failure and earliest undecided level among k < n.
  std::optional<IterateVerdict> earlier_failure;
  std::optional<IterateVerdict> earlier_unknown;

  const auto constants = orbit(p, a, N);
  for (unsigned n = 1; n <= N; ++n) {
    const Integer& c = constants[n - 1];
    IterateVerdict row;
    row.n = n;
    row.orbit_value_digits = decimal_digits(c);
    row.constant_status = constant_status(c, known_squares, budget);
    check_p_witness(p, a, report.fermat_ok, row.constant_status);

    if (!report.fermat_ok) {
      row.status = Verdict::kNotMonogenic;
      row.failing_prime = Integer(p);
      row.certificate = FermatCertificate{report.fermat_valuation};
    } else if (const auto* bad = std::get_if<NotSquarefree>(&row.constant_status)) {
      if (std::find(known_squares.begin(), known_squares.end(), bad->witness) == known_squares.end())
        known_squares.push_back(bad->witness);
      row.status = Verdict::kNotMonogenic;
      row.failing_prime = bad->witness;
      row.certificate = SquareCertificate{bad->witness, vp(c, bad->witness).value(), n};
    } else if (const auto* unk = std::get_if<SquarefreeUnknown>(&row.constant_status)) {
      row.status = Verdict::kUnknown;
      row.certificate = UnknownCertificate{unk->searched_bound, n};
    } else if (earlier_failure) {
      // Z[alpha_n] meets K_k in Z[alpha_k], so a failure at k < n persists.
      row.status = Verdict::kNotMonogenic;
      row.failing_prime = earlier_failure->failing_prime;
      row.certificate = earlier_failure->certificate;
      row.inherited = true;
    } else if (earlier_unknown) {
      row.status = Verdict::kUnknown;
      row.certificate = earlier_unknown->certificate;
      row.inherited = true;
    } else {
      row.status = Verdict::kMonogenic;
    }

    if (row.status == Verdict::kNotMonogenic) {
      if (!report.first_failure) report.first_failure = n;
      if (!earlier_failure) earlier_failure = row;
    } else if (row.status == Verdict::kUnknown && !earlier_unknown) {
      earlier_unknown = row;
    }
    report.verdicts.push_back(std::move(row));
  }
  return report;
}

}  // namespace monogen
