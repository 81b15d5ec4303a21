#include "monogen/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace monogen {

namespace {

// Returns true and stores the root when x is an exact k-th power. Negative x
// only has odd roots.
bool exact_root(const Integer& x, unsigned long k, Integer* root) {
  if (x < 0 && k % 2 == 0) return false;
  Integer r;
  int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  if (exact && root) *root = r;
  return exact != 0;
}

std::vector<unsigned long> prime_divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

IntPoly IntPoly::monomial(Integer c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

IntPoly IntPoly::divexact(const Integer& d) const {
  if (d == 0) throw std::domain_error("IntPoly::divexact: division by zero");
  IntPoly r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
      throw std::domain_error("IntPoly::divexact: inexact division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

std::string IntPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& f, const IntPoly& g) {
  if (!g.is_monic()) throw std::invalid_argument("divrem_monic: divisor must be monic");
  if (f.degree() < g.degree()) return {IntPoly{}, f};
  std::vector<Integer> rem(f.coeffs().begin(), f.coeffs().end());
  const auto gc = g.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<Integer> quo(rem.size() - dg);
  for (std::size_t k = rem.size(); k-- > dg;) {
    const Integer q = rem[k];
    quo[k - dg] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      mpz_submul(rem[k - dg + j].get_mpz_t(), q.get_mpz_t(), gc[j].get_mpz_t());
    }
  }
  rem.resize(dg);
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly pow(const IntPoly& f, unsigned e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = f;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
  IntPoly acc;
  const auto c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc *= g;
    acc += IntPoly::constant(c[k]);
  }
  return acc;
}

IntPoly iterate(const IntPoly& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("iterate: n must be at least 1");
  if (f.degree() >= 2) {
    std::size_t deg = 1;
    for (unsigned i = 0; i < n; ++i) {
      deg *= static_cast<std::size_t>(f.degree());
      if (deg > kMaxIterateDegree)
        throw std::length_error("iterate: degree of f^n exceeds " + std::to_string(kMaxIterateDegree));
    }
  }
  IntPoly result = f;
  for (unsigned i = 1; i < n; ++i) result = compose(f, result);
  return result;
}

IntPoly radical_poly(unsigned long n, const Integer& a) {
  IntPoly f = IntPoly::monomial(1, n);
  f -= IntPoly::constant(a);
  return f;
}

Integer orbit_constant(unsigned long p, const Integer& a, unsigned n) {
  if (n == 0) throw std::invalid_argument("orbit_constant: n must be at least 1");
  Integer c = -a;
  for (unsigned k = 1; k < n; ++k) {
    mpz_pow_ui(c.get_mpz_t(), c.get_mpz_t(), p);
    c -= a;
  }
  return c;
}

std::vector<Integer> orbit(unsigned long p, const Integer& a, unsigned n) {
  if (n == 0) throw std::invalid_argument("orbit: n must be at least 1");
  std::vector<Integer> out;
  out.reserve(n);
  Integer c = -a;
  out.push_back(c);
  for (unsigned k = 1; k < n; ++k) {
    mpz_pow_ui(c.get_mpz_t(), c.get_mpz_t(), p);
    c -= a;
    out.push_back(c);
  }
  return out;
}

bool is_irreducible_radical(unsigned long p, const Integer& a) {
  if (a == 0) throw std::invalid_argument("is_irreducible_radical: a must be nonzero");
  return !exact_root(a, p, nullptr);
}

bool is_irreducible_binomial(unsigned long n, const Integer& a) {
  if (n == 0) throw std::invalid_argument("is_irreducible_binomial: n must be positive");
  if (n == 1) return true;
  if (a == 0) return false;
  for (unsigned long q : prime_divisors(n)) {
    if (exact_root(a, q, nullptr)) return false;
  }
  if (n % 4 == 0 && a < 0 && mpz_divisible_ui_p(a.get_mpz_t(), 4)) {
    Integer b4 = -a / 4;
    if (exact_root(b4, 4, nullptr)) return false;
  }
  return true;
}

Integer disc_radical(unsigned long n, const Integer& alpha) {
  if (n < 2) throw std::invalid_argument("disc_radical: n must be at least 2");
  Integer nn, tail;
  mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
  Integer neg_alpha = -alpha;
  mpz_pow_ui(tail.get_mpz_t(), neg_alpha.get_mpz_t(), n - 1);
  Integer d = nn * tail;
  // (n^2 - n)/2 is odd iff n = 2 or 3 mod 4.
  if (n % 4 == 2 || n % 4 == 3) d = -d;
  return d;
}

}  // namespace monogen
