#include "monogen/arith.hpp"

#include <stdexcept>

namespace monogen {

std::uint64_t Valuation::value() const {
  if (infinite_) throw std::logic_error("Valuation::value: valuation is infinite");
  return value_;
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

Valuation vp(const Integer& x, const Integer& p) {
  if (p < 2) throw std::invalid_argument("vp: p must be at least 2");
  if (x == 0) return Valuation::infinity();
  Integer rest;
  auto k = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return Valuation(k);
}

Valuation gauss_valuation(const IntPoly& f, const Integer& p) {
  Valuation best = Valuation::infinity();
  for (const auto& c : f.coeffs()) {
    Valuation v = vp(c, p);
    if (v < best) best = v;
    if (best == 0) break;
  }
  return best;
}

Valuation fermat_valuation(unsigned long p, const Integer& a) {
  if (p < 2) throw std::invalid_argument("fermat_valuation: p must be prime");
  const Integer pz(p);
  if (mpz_sizeinbase(a.get_mpz_t(), 2) <= 64) {
    Integer ap;
    mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), p);
    return vp(ap - a, pz);
  }
  // a^p - a = a (a^(p-1) - 1) and the second factor is -1 mod p when p | a.
  if (mpz_divisible_p(a.get_mpz_t(), pz.get_mpz_t())) return vp(a, pz);
  // Unit case: lift modulo p^K until a nonzero digit shows up.
  for (unsigned long K = 2; K <= 64; K *= 2) {
    Integer modulus, r;
    mpz_ui_pow_ui(modulus.get_mpz_t(), p, K);
    mpz_powm_ui(r.get_mpz_t(), a.get_mpz_t(), p, modulus.get_mpz_t());
    r -= a;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    if (r != 0) return vp(r, pz);
  }
  Integer ap;
  mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), p);
  return vp(ap - a, pz);
}

std::optional<PerfectPower> perfect_power(const Integer& x) {
  if (abs(x) < 2) throw std::invalid_argument("perfect_power: |x| must be at least 2");
  if (!mpz_perfect_power_p(x.get_mpz_t())) return std::nullopt;
  const unsigned long bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  // b^k = x with |b| >= 2 forces k <= log2|x|; scan downward so the first hit is maximal.
  for (unsigned long k = bits; k >= 2; --k) {
    if (x < 0 && k % 2 == 0) continue;
    Integer r;
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), k)) return PerfectPower{r, k};
  }
  return std::nullopt;
}

}  // namespace monogen
