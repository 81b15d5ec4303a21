#ifndef MONOGEN_MONOGENIC_HPP_
#define MONOGEN_MONOGENIC_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "monogen/arith.hpp"
#include "monogen/factorint.hpp"
#include "monogen/intpoly.hpp"

namespace monogen {

// x^p - a with a = root^p: the tower is not made of fields.
class ReducibleRadicalError : public std::invalid_argument {
 public:
  ReducibleRadicalError(unsigned long p, Integer a, Integer root);
  unsigned long p() const { return p_; }
  const Integer& a() const { return a_; }
  const Integer& root() const { return root_; }

 private:
  unsigned long p_;
  Integer a_;
  Integer root_;
};

/* The data of the ell-maximality criterion for Z[a^(1/n)] over Q: n = ell^e m
 * with ell not dividing m. Over Q every prime has residue degree 1, so
 * epsilon = 1 and beta = a^(ell^(f - epsilon)) = a.
 */
struct RadicalCriterionContext {
  unsigned long n = 0;
  Integer a;
  Integer ell;
  unsigned long e = 0;
  unsigned long m = 0;
  unsigned long residue_degree = 1;
  unsigned long epsilon = 1;
  Integer beta;
};

RadicalCriterionContext radical_criterion_context(unsigned long n, const Integer& a, const Integer& ell);

// Whether Z[a^(1/n)] is ell-maximal, x^n - a assumed irreducible:
//   ell | a            iff v_ell(a) = 1
//   ell | n, ell !| a  iff v_ell(a - beta^(ell^e)) = 1
//   otherwise          always
bool radical_maximality_q(unsigned long n, const Integer& a, const Integer& ell);

struct PMaximality {
  bool maximal = false;  // Z[alpha_n] is p-maximal for every n
  Valuation fermat;      // v_p(a^p - a), the certificate
};

// Throws ReducibleRadicalError when x^p - a is reducible.
PMaximality p_maximality_tower(unsigned long p, const Integer& a);

// Squarefree status of f^n(0). A square of p itself can only divide f^n(0)
// when p | a (then v_p(f^n(0)) = v_p(a)); seeing one with p !| a while
// a^p != a mod p^2 throws std::logic_error.
SquarefreeStatus ell_check(unsigned long p, const Integer& a, unsigned n, const Budget& budget = {});

enum class Verdict { kMonogenic, kNotMonogenic, kUnknown };
std::string_view to_string(Verdict v);

// a^p = a mod p^2: v_p(a^p - a) >= 2.
struct FermatCertificate {
  Valuation valuation;
  friend bool operator==(const FermatCertificate&, const FermatCertificate&) = default;
};
// prime^2 divides f^level(0); valuation = v_prime(f^level(0)) >= 2.
struct SquareCertificate {
  Integer prime;
  std::uint64_t valuation = 0;
  unsigned level = 0;
  friend bool operator==(const SquareCertificate&, const SquareCertificate&) = default;
};
// f^level(0) has no square prime factor up to searched_bound, and the rest
// could not be decided.
struct UnknownCertificate {
  std::uint64_t searched_bound = 0;
  unsigned level = 0;
  friend bool operator==(const UnknownCertificate&, const UnknownCertificate&) = default;
};

using Certificate = std::variant<std::monostate, FermatCertificate, SquareCertificate, UnknownCertificate>;

struct IterateVerdict {
  unsigned n = 0;
  Verdict status = Verdict::kUnknown;
  std::optional<Integer> failing_prime;
  Certificate certificate;
  // Squarefree status of f^n(0) alone.
  SquarefreeStatus constant_status;
  // Decimal digits of |f^n(0)|.
  std::size_t orbit_value_digits = 0;
  // NotMonogenic because an earlier iterate already failed; the certificate
  // then refers to that earlier level.
  bool inherited = false;

  friend bool operator==(const IterateVerdict&, const IterateVerdict&) = default;
};

/* Per-iterate monogenicity of K_n = Q(alpha_n), f^n(alpha_n) = 0, n = 1..N.
 *
 * Z[alpha_n] is the ring of integers iff v_p(a^p - a) = 1 and f^k(0) is
 * squarefree for every k <= n. Rows never claim Monogenic while any needed
 * squarefree status is unknown.
 */
struct TowerReport {
  unsigned long p = 0;
  Integer a;
  unsigned N = 0;
  Budget budget;
  Valuation fermat_valuation;
  bool fermat_ok = false;
  // Holds with fermat_ok: p is totally ramified in every K_n.
  bool p_totally_ramified = false;
  std::vector<IterateVerdict> verdicts;
  // Smallest n whose verdict is NotMonogenic.
  std::optional<unsigned> first_failure;

  friend bool operator==(const TowerReport&, const TowerReport&) = default;
};

// Throws std::invalid_argument for p not prime, a = 0 or N = 0, and
// ReducibleRadicalError when x^p - a is reducible.
TowerReport analyze_tower(unsigned long p, const Integer& a, unsigned N, const Budget& budget = {});

}  // namespace monogen

#endif  // MONOGEN_MONOGENIC_HPP_
