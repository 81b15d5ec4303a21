#ifndef MONOGEN_ARITH_HPP_
#define MONOGEN_ARITH_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "monogen/intpoly.hpp"

namespace monogen {

/* A p-adic valuation: a nonnegative integer, or Infinity (the valuation of 0).
 * Infinity absorbs addition and compares above every finite value.
 */
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::uint64_t v) : value_(v) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  // Precondition: is_finite().
  std::uint64_t value() const;

  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Valuation a, std::uint64_t b) { return a == Valuation(b); }

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

// Largest k with p^k | x; Infinity for x = 0. Requires p >= 2.
Valuation vp(const Integer& x, const Integer& p);
inline Valuation vp(const Integer& x, unsigned long p) { return vp(x, Integer(p)); }

// min_i vp(a_i) over the coefficients of f; Infinity for the zero polynomial.
Valuation gauss_valuation(const IntPoly& f, const Integer& p);
inline Valuation gauss_valuation(const IntPoly& f, unsigned long p) { return gauss_valuation(f, Integer(p)); }

// v_p(a^p - a). Always >= 1 for p prime; the monogenicity condition on the
// p side is that this equals exactly 1. Infinity when a^p = a (a in {0, 1},
// or a = -1 with p odd).
Valuation fermat_valuation(unsigned long p, const Integer& a);

struct PerfectPower {
  Integer base;
  unsigned long exponent;
  friend bool operator==(const PerfectPower&, const PerfectPower&) = default;
};

// (b, k) with b^k = x and k >= 2 maximal, or nullopt. Requires |x| >= 2.
// For negative x only odd exponents qualify.
std::optional<PerfectPower> perfect_power(const Integer& x);

}  // namespace monogen

#endif  // MONOGEN_ARITH_HPP_
