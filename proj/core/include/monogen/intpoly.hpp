#ifndef MONOGEN_INTPOLY_HPP_
#define MONOGEN_INTPOLY_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monogen {

using Integer = mpz_class;

/* Dense univariate polynomial with arbitrary-precision integer coefficients.
 *
 * coeffs()[i] is the coefficient of x^i. The representation is kept
 * normalized: there are no trailing zero coefficients, so the zero
 * polynomial is the empty sequence and degree() is size() - 1.
 */
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(Integer c);
  static IntPoly monomial(Integer c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  std::span<const Integer> coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero beyond the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const { return coeffs_.back(); }

  Integer eval(const Integer& x) const;
  IntPoly derivative() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const Integer& c) { return lhs *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly rhs) { return rhs *= c; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // Exact division of every coefficient by d; throws if d does not divide.
  IntPoly divexact(const Integer& d) const;

  // Human-readable form, highest degree first: "x^3 - 5".
  std::string to_string(std::string_view var = "x") const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

// Quotient and remainder of f by a monic divisor g.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& f, const IntPoly& g);

IntPoly pow(const IntPoly& f, unsigned e);

// f(g(x)), evaluated by Horner's rule over polynomials.
IntPoly compose(const IntPoly& f, const IntPoly& g);

// Largest degree iterate() will build.
inline constexpr std::size_t kMaxIterateDegree = 100000;

// The n-fold composition f o f o ... o f. Throws std::invalid_argument for
// n = 0 and std::length_error when the result would exceed kMaxIterateDegree.
IntPoly iterate(const IntPoly& f, unsigned n);

// x^p - a.
IntPoly radical_poly(unsigned long n, const Integer& a);

// f^n(0) for f = x^p - a through c_1 = -a, c_k = c_{k-1}^p - a.
Integer orbit_constant(unsigned long p, const Integer& a, unsigned n);

// The whole orbit c_1, ..., c_n.
std::vector<Integer> orbit(unsigned long p, const Integer& a, unsigned n);

// x^p - a over the rationals for p prime: irreducible iff a is not a p-th
// power in Z. Throws std::invalid_argument for a = 0.
bool is_irreducible_radical(unsigned long p, const Integer& a);

// Capelli's criterion for x^n - a, any n >= 1: irreducible iff a is not a
// q-th power for any prime q | n and, when 4 | n, a is not -4 b^4.
bool is_irreducible_binomial(unsigned long n, const Integer& a);

// Disc(x^n - alpha) = (-1)^((n^2 - n)/2) n^n (-alpha)^(n-1), n >= 2.
Integer disc_radical(unsigned long n, const Integer& alpha);

}  // namespace monogen

#endif  // MONOGEN_INTPOLY_HPP_
