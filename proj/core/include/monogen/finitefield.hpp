#ifndef MONOGEN_FINITEFIELD_HPP_
#define MONOGEN_FINITEFIELD_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "monogen/intpoly.hpp"

namespace monogen {

/* Element of F_q = F_p[t]/(m(t)): the coefficients of its representative
 * of degree < deg m, lowest first, each in [0, p). Always exactly deg m
 * entries, so equality is plain vector equality.
 */
struct FqElem {
  std::vector<std::uint64_t> rep;
  friend bool operator==(const FqElem&, const FqElem&) = default;
};

/* The finite field F_p[t]/(m(t)) for a monic irreducible m over F_p. With
 * deg m = 1 (modulus t) this is F_p itself, so code working over residue
 * fields never special-cases the prime field.
 *
 * Contexts are immutable and shared by the polynomials built over them.
 */
class FqContext {
 public:
  using Ptr = std::shared_ptr<const FqContext>;

  // Requires p prime and p < 2^63.
  static Ptr prime_field(std::uint64_t p);
  // modulus holds coefficients in ascending order. It is reduced mod p, made
  // monic and checked for irreducibility; throws std::invalid_argument if it
  // is constant or reducible.
  static Ptr extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
  // Residue field F_p[t]/(phi mod p) for a monic integer polynomial phi.
  static Ptr residue_field(std::uint64_t p, const IntPoly& phi);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  // q = p^degree
  Integer order() const;

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(const Integer& c) const;
  FqElem from_coeffs(std::vector<std::uint64_t> coeffs) const;
  // The k-th element in a fixed enumeration of F_q, 0 <= k < q.
  FqElem from_index(std::uint64_t k) const;

  bool is_zero(const FqElem& a) const;
  bool is_one(const FqElem& a) const;
  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem scale(const FqElem& a, std::uint64_t c) const;
  // Throws std::domain_error for zero.
  FqElem inv(const FqElem& a) const;
  FqElem pow(const FqElem& a, const Integer& e) const;

  std::string to_string(const FqElem& a, const std::string& var = "t") const;

  friend bool operator==(const FqContext& a, const FqContext& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  FqContext(std::uint64_t p, std::vector<std::uint64_t> modulus) : p_(p), modulus_(std::move(modulus)) {}

  std::uint64_t p_;
  std::vector<std::uint64_t> modulus_;  // monic, ascending
};

/* Polynomial in y over an FqContext. Normalized: no trailing zeros.
 */
class FqPoly {
 public:
  FqPoly() = default;
  FqPoly(FqContext::Ptr ctx, std::vector<FqElem> coeffs);

  static FqPoly zero(FqContext::Ptr ctx) { return FqPoly(std::move(ctx), {}); }
  static FqPoly one(FqContext::Ptr ctx);
  // y^k
  static FqPoly monomial(FqContext::Ptr ctx, std::size_t k);
  // Reduction of an integer polynomial modulo p, over the prime field ctx.
  static FqPoly reduce(FqContext::Ptr prime_ctx, const IntPoly& f);

  const FqContext::Ptr& context() const { return ctx_; }
  const FqContext& field() const { return *ctx_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monic() const;
  const std::vector<FqElem>& coeffs() const { return coeffs_; }
  FqElem coeff(std::size_t i) const;
  const FqElem& leading() const { return coeffs_.back(); }

  // Integer lift with coefficients in [0, p). Only for prime-field polynomials.
  IntPoly lift() const;

  std::string to_string(const std::string& var = "y") const;

  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  FqContext::Ptr ctx_;
  std::vector<FqElem> coeffs_;
};

FqPoly operator+(const FqPoly& a, const FqPoly& b);
FqPoly operator-(const FqPoly& a, const FqPoly& b);
FqPoly operator*(const FqPoly& a, const FqPoly& b);
FqPoly scale(const FqPoly& a, const FqElem& c);

// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b);
FqPoly operator%(const FqPoly& a, const FqPoly& b);
FqPoly operator/(const FqPoly& a, const FqPoly& b);

FqPoly make_monic(const FqPoly& a);
FqPoly derivative(const FqPoly& a);
// Monic gcd; gcd(0, 0) = 0.
FqPoly gcd(const FqPoly& a, const FqPoly& b);
// base^e mod m.
FqPoly powmod(const FqPoly& base, const Integer& e, const FqPoly& m);

// True iff gcd(g, g') is constant. Requires deg g >= 1.
bool is_separable(const FqPoly& g);

struct FqFactor {
  FqPoly factor;  // monic irreducible
  unsigned multiplicity;
};

// Complete factorization into monic irreducibles: squarefree decomposition,
// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting.
// Sorted by degree, then by coefficients.
std::vector<FqFactor> fq_factor(const FqPoly& g);

// Same result by trial division with every monic polynomial of degree up to
// deg g / 2. Only meant for tiny fields; throws std::length_error when
// q^deg g exceeds 10^4.
std::vector<FqFactor> fq_factor_exhaustive(const FqPoly& g);

// True when the exhaustive search is allowed for g (q^deg g <= 10^4).
bool exhaustive_factor_feasible(const FqPoly& g);

struct ModPFactor {
  IntPoly lift;  // monic, coefficients in [0, p)
  unsigned multiplicity;
};

// Distinct monic irreducible factors of f mod p with multiplicities, lifted
// to Z with coefficients in [0, p), ordered by degree then coefficients.
// Throws std::invalid_argument when f is not monic.
std::vector<ModPFactor> factor_mod_p(const IntPoly& f, std::uint64_t p);

}  // namespace monogen

#endif  // MONOGEN_FINITEFIELD_HPP_
