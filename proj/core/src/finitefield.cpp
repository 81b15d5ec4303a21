#include "monogen/finitefield.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "monogen/factorint.hpp"

namespace monogen {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;
using Vec = std::vector<u64>;

u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod_u(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod_u(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("FqContext::inv: zero has no inverse");
  return powmod_u(a, p - 2, p);
}

// --- polynomials over F_p as trimmed coefficient vectors ---

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec pv_sub(Vec a, const Vec& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

Vec pv_mul(const Vec& a, const Vec& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = addmod(out[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(out);
  return out;
}

// a = q*b + r over F_p; b nonzero.
std::pair<Vec, Vec> pv_divrem(Vec a, const Vec& b, u64 p) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  const u64 inv_lead = invmod_u(b.back(), p);
  Vec q(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const u64 c = mulmod(a[k], inv_lead, p);
    q[k - b.size() + 1] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t idx = k - (b.size() - 1) + j;
      a[idx] = submod(a[idx], mulmod(c, b[j], p), p);
    }
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

// s with s*a = 1 mod m, for a coprime to m.
Vec pv_inverse_mod(const Vec& a, const Vec& m, u64 p) {
  Vec r0 = m, r1 = a, s0{}, s1{1};
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = pv_divrem(r0, r1, p);
    Vec s = pv_sub(s0, pv_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::domain_error("FqContext::inv: element is not invertible");
  const u64 c = invmod_u(r0[0], p);
  for (auto& x : s0) x = mulmod(x, c, p);
  return s0;
}

bool is_prime_u64(u64 p) { return p >= 2 && is_probable_prime(Integer(static_cast<unsigned long>(p))); }

u64 reduce_mod(const Integer& c, u64 p) {
  return static_cast<u64>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
}

}  // namespace

// ---------------------------------------------------------------- FqContext

FqContext::Ptr FqContext::prime_field(std::uint64_t p) {
  if (p >= (u64{1} << 63) || !is_prime_u64(p))
    throw std::invalid_argument("FqContext: characteristic must be a prime below 2^63");
  return Ptr(new FqContext(p, Vec{0, 1}));
}

FqContext::Ptr FqContext::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  Ptr base = prime_field(p);
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2) throw std::invalid_argument("FqContext: modulus must have positive degree");
  if (modulus.size() == 2 && modulus[0] == 0 && modulus[1] == 1) return base;
  const u64 inv_lead = invmod_u(modulus.back(), p);
  for (auto& c : modulus) c = mulmod(c, inv_lead, p);
  if (modulus.size() > 2) {
    std::vector<FqElem> coeffs;
    for (u64 c : modulus) coeffs.push_back(FqElem{{c}});
    auto fac = fq_factor(FqPoly(base, std::move(coeffs)));
    if (fac.size() != 1 || fac[0].multiplicity != 1)
      throw std::invalid_argument("FqContext: modulus is reducible over F_p");
  }
  return Ptr(new FqContext(p, std::move(modulus)));
}

FqContext::Ptr FqContext::residue_field(std::uint64_t p, const IntPoly& phi) {
  if (!phi.is_monic() || phi.degree() < 1)
    throw std::invalid_argument("FqContext::residue_field: phi must be monic of positive degree");
  Vec m;
  for (const auto& c : phi.coeffs()) m.push_back(reduce_mod(c, p));
  return extension(p, std::move(m));
}

Integer FqContext::order() const {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), degree());
  return q;
}

FqElem FqContext::zero() const { return FqElem{Vec(degree(), 0)}; }

FqElem FqContext::one() const {
  FqElem e = zero();
  e.rep[0] = 1 % p_;
  return e;
}

FqElem FqContext::from_int(const Integer& c) const {
  FqElem e = zero();
  e.rep[0] = reduce_mod(c, p_);
  return e;
}

FqElem FqContext::from_coeffs(std::vector<std::uint64_t> coeffs) const {
  for (auto& c : coeffs) c %= p_;
  trim(coeffs);
  if (coeffs.size() > degree()) coeffs = pv_divrem(std::move(coeffs), modulus_, p_).second;
  coeffs.resize(degree(), 0);
  return FqElem{std::move(coeffs)};
}

FqElem FqContext::from_index(std::uint64_t k) const {
  FqElem e = zero();
  for (unsigned i = 0; i < degree(); ++i) {
    e.rep[i] = k % p_;
    k /= p_;
  }
  return e;
}

bool FqContext::is_zero(const FqElem& a) const {
  return std::all_of(a.rep.begin(), a.rep.end(), [](u64 c) { return c == 0; });
}

bool FqContext::is_one(const FqElem& a) const { return a == one(); }

FqElem FqContext::add(const FqElem& a, const FqElem& b) const {
  FqElem r = a;
  for (std::size_t i = 0; i < r.rep.size(); ++i) r.rep[i] = addmod(r.rep[i], b.rep[i], p_);
  return r;
}

FqElem FqContext::sub(const FqElem& a, const FqElem& b) const {
  FqElem r = a;
  for (std::size_t i = 0; i < r.rep.size(); ++i) r.rep[i] = submod(r.rep[i], b.rep[i], p_);
  return r;
}

FqElem FqContext::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem FqContext::scale(const FqElem& a, std::uint64_t c) const {
  FqElem r = a;
  c %= p_;
  for (auto& x : r.rep) x = mulmod(x, c, p_);
  return r;
}

FqElem FqContext::mul(const FqElem& a, const FqElem& b) const {
  const unsigned d = degree();
  if (d == 1) return FqElem{{mulmod(a.rep[0], b.rep[0], p_)}};
  Vec prod(2 * d - 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    if (a.rep[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) prod[i + j] = addmod(prod[i + j], mulmod(a.rep[i], b.rep[j], p_), p_);
  }
  // modulus is monic: fold t^k for k >= d back down.
  for (std::size_t k = prod.size(); k-- > d;) {
    const u64 c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < d; ++j) prod[k - d + j] = submod(prod[k - d + j], mulmod(c, modulus_[j], p_), p_);
    prod[k] = 0;
  }
  prod.resize(d);
  return FqElem{std::move(prod)};
}

FqElem FqContext::inv(const FqElem& a) const {
  if (is_zero(a)) throw std::domain_error("FqContext::inv: zero has no inverse");
  if (degree() == 1) return FqElem{{invmod_u(a.rep[0], p_)}};
  Vec s = pv_inverse_mod(a.rep, modulus_, p_);
  s.resize(degree(), 0);
  return FqElem{std::move(s)};
}

FqElem FqContext::pow(const FqElem& a, const Integer& e) const {
  if (e < 0) return pow(inv(a), -e);
  FqElem r = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

std::string FqContext::to_string(const FqElem& a, const std::string& var) const {
  if (degree() == 1) return std::to_string(a.rep[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = a.rep.size(); k-- > 0;) {
    if (a.rep[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0 || a.rep[k] != 1) out << a.rep[k];
    if (k > 0) {
      if (a.rep[k] != 1) out << '*';
      out << var;
      if (k > 1) out << '^' << k;
    }
  }
  if (first) return "0";
  return "(" + out.str() + ")";
}

// ------------------------------------------------------------------- FqPoly

FqPoly::FqPoly(FqContext::Ptr ctx, std::vector<FqElem> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  normalize();
}

void FqPoly::normalize() {
  while (!coeffs_.empty() && ctx_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

FqPoly FqPoly::one(FqContext::Ptr ctx) {
  FqElem e = ctx->one();
  return FqPoly(std::move(ctx), {std::move(e)});
}

FqPoly FqPoly::monomial(FqContext::Ptr ctx, std::size_t k) {
  std::vector<FqElem> c(k + 1, ctx->zero());
  c[k] = ctx->one();
  return FqPoly(std::move(ctx), std::move(c));
}

FqPoly FqPoly::reduce(FqContext::Ptr prime_ctx, const IntPoly& f) {
  std::vector<FqElem> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(prime_ctx->from_int(a));
  return FqPoly(std::move(prime_ctx), std::move(c));
}

bool FqPoly::is_one() const { return coeffs_.size() == 1 && ctx_->is_one(coeffs_[0]); }
bool FqPoly::is_monic() const { return !coeffs_.empty() && ctx_->is_one(coeffs_.back()); }

FqElem FqPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ctx_->zero(); }

IntPoly FqPoly::lift() const {
  if (ctx_->degree() != 1) throw std::logic_error("FqPoly::lift: only defined over the prime field");
  std::vector<Integer> c;
  for (const auto& e : coeffs_) c.emplace_back(static_cast<unsigned long>(e.rep[0]));
  return IntPoly(std::move(c));
}

std::string FqPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (ctx_->is_zero(coeffs_[k])) continue;
    if (!first) out << " + ";
    first = false;
    const bool unit = ctx_->is_one(coeffs_[k]);
    if (k == 0 || !unit) out << ctx_->to_string(coeffs_[k]);
    if (k > 0) {
      if (!unit) out << '*';
      out << var;
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  const auto& F = *a.context();
  std::vector<FqElem> c(std::max(a.coeffs().size(), b.coeffs().size()), F.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return FqPoly(a.context(), std::move(c));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
  const auto& F = *a.context();
  std::vector<FqElem> c(std::max(a.coeffs().size(), b.coeffs().size()), F.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return FqPoly(a.context(), std::move(c));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return FqPoly::zero(a.context());
  const auto& F = *a.context();
  std::vector<FqElem> c(a.coeffs().size() + b.coeffs().size() - 1, F.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (F.is_zero(a.coeffs()[i])) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return FqPoly(a.context(), std::move(c));
}

FqPoly scale(const FqPoly& a, const FqElem& s) {
  const auto& F = *a.context();
  std::vector<FqElem> c;
  c.reserve(a.coeffs().size());
  for (const auto& e : a.coeffs()) c.push_back(F.mul(e, s));
  return FqPoly(a.context(), std::move(c));
}

std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw std::domain_error("divrem: division by the zero polynomial");
  const auto& F = *a.context();
  if (a.degree() < b.degree()) return {FqPoly::zero(a.context()), a};
  std::vector<FqElem> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<FqElem> q(r.size() - db, F.zero());
  const FqElem inv_lead = F.inv(b.leading());
  for (std::size_t k = r.size(); k-- > db;) {
    if (F.is_zero(r[k])) continue;
    const FqElem c = F.mul(r[k], inv_lead);
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = F.sub(r[k - db + j], F.mul(c, b.coeffs()[j]));
  }
  r.resize(db);
  return {FqPoly(a.context(), std::move(q)), FqPoly(a.context(), std::move(r))};
}

FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divrem(a, b).second; }
FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divrem(a, b).first; }

FqPoly make_monic(const FqPoly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.field().inv(a.leading()));
}

FqPoly derivative(const FqPoly& a) {
  const auto& F = *a.context();
  if (a.degree() < 1) return FqPoly::zero(a.context());
  std::vector<FqElem> c;
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) c.push_back(F.scale(a.coeffs()[i], i % F.characteristic()));
  return FqPoly(a.context(), std::move(c));
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

FqPoly powmod(const FqPoly& base, const Integer& e, const FqPoly& m) {
  if (e < 0) throw std::invalid_argument("powmod: negative exponent");
  FqPoly r = FqPoly::one(base.context()) % m;
  const FqPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

bool is_separable(const FqPoly& g) {
  if (g.degree() < 1) throw std::invalid_argument("is_separable: degree must be at least 1");
  return gcd(g, derivative(g)).degree() == 0;
}

// ------------------------------------------------------------ factorization

namespace {

bool factor_less(const FqFactor& a, const FqFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coeffs();
  const auto& cb = b.factor.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].rep != cb[i].rep) return ca[i].rep < cb[i].rep;
  }
  return a.multiplicity < b.multiplicity;
}

// For f with f' = 0: the polynomial g with g^p = f.
FqPoly pth_root(const FqPoly& f) {
  const auto& F = f.field();
  const u64 p = F.characteristic();
  // a^(1/p) = a^(p^(d-1)) in F_q
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), F.degree() - 1);
  std::vector<FqElem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(F.pow(f.coeffs()[i], e));
  return FqPoly(f.context(), std::move(c));
}

// Squarefree decomposition of a monic f: pairs (g_i, i) with f = prod g_i^i,
// every g_i squarefree and pairwise coprime.
std::vector<std::pair<FqPoly, unsigned>> squarefree_decomposition(const FqPoly& f) {
  std::vector<std::pair<FqPoly, unsigned>> out;
  const u64 p = f.field().characteristic();
  FqPoly c = gcd(f, derivative(f));
  FqPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    FqPoly y = gcd(w, c);
    FqPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(make_monic(fac), i);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(make_monic(pth_root(c))))
      out.emplace_back(std::move(g), static_cast<unsigned>(m * p));
  }
  return out;
}

// Distinct-degree factorization of a monic squarefree f: (g, k) with g the
// product of all irreducible factors of degree k.
std::vector<std::pair<FqPoly, unsigned>> distinct_degree(const FqPoly& f) {
  std::vector<std::pair<FqPoly, unsigned>> out;
  const Integer q = f.field().order();
  const FqPoly x = FqPoly::monomial(f.context(), 1);
  FqPoly rest = f;
  FqPoly h = x % rest;
  for (unsigned k = 1; 2 * k <= static_cast<unsigned>(rest.degree()); ++k) {
    h = powmod(h, q, rest);
    FqPoly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, k);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

FqPoly random_poly(const FqContext::Ptr& ctx, int max_degree, std::mt19937_64& rng) {
  const u64 p = ctx->characteristic();
  std::vector<FqElem> c;
  for (int i = 0; i <= max_degree; ++i) {
    FqElem e = ctx->zero();
    for (auto& x : e.rep) x = rng() % p;
    c.push_back(std::move(e));
  }
  return FqPoly(ctx, std::move(c));
}

// Cantor-Zassenhaus: split a monic squarefree f whose irreducible factors all
// have degree k.
void equal_degree(const FqPoly& f, unsigned k, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  if (static_cast<unsigned>(f.degree()) == k) {
    out.push_back(f);
    return;
  }
  const auto& F = f.field();
  const Integer q = F.order();
  Integer qk;
  mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
  const bool even = F.characteristic() == 2;
  while (true) {
    FqPoly h = random_poly(f.context(), f.degree() - 1, rng);
    if (h.degree() < 1) continue;
    FqPoly t;
    if (!even) {
      t = powmod(h, (qk - 1) / 2, f) - FqPoly::one(f.context());
    } else {
      // absolute trace h + h^2 + ... + h^(2^(dk-1))
      const unsigned terms = F.degree() * k;
      FqPoly term = h % f;
      t = term;
      for (unsigned j = 1; j < terms; ++j) {
        term = (term * term) % f;
        t = t + term;
      }
    }
    FqPoly u = gcd(f, t);
    if (u.degree() > 0 && u.degree() < f.degree()) {
      equal_degree(u, k, rng, out);
      equal_degree(make_monic(f / u), k, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FqFactor> fq_factor(const FqPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("fq_factor: zero polynomial");
  std::vector<FqFactor> out;
  if (g.degree() == 0) return out;
  std::mt19937_64 rng(kDefaultSeed);
  for (auto& [sqf, mult] : squarefree_decomposition(make_monic(g))) {
    for (auto& [part, k] : distinct_degree(sqf)) {
      std::vector<FqPoly> pieces;
      equal_degree(make_monic(part), k, rng, pieces);
      for (auto& piece : pieces) out.push_back({make_monic(piece), mult});
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

bool exhaustive_factor_feasible(const FqPoly& g) {
  if (g.degree() < 1) return true;
  Integer total;
  mpz_pow_ui(total.get_mpz_t(), g.field().order().get_mpz_t(), static_cast<unsigned long>(g.degree()));
  return total <= 10000;
}

std::vector<FqFactor> fq_factor_exhaustive(const FqPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("fq_factor_exhaustive: zero polynomial");
  if (!exhaustive_factor_feasible(g)) throw std::length_error("fq_factor_exhaustive: field and degree too large");
  const auto& ctx = g.context();
  const u64 q = g.field().order().get_ui();
  std::vector<FqFactor> out;
  FqPoly rest = make_monic(g);
  for (unsigned k = 1; 2 * k <= static_cast<unsigned>(std::max(rest.degree(), 0)); ++k) {
    u64 count = 1;
    for (unsigned i = 0; i < k; ++i) count *= q;
    for (u64 idx = 0; idx < count; ++idx) {
      std::vector<FqElem> c;
      u64 v = idx;
      for (unsigned i = 0; i < k; ++i) {
        c.push_back(ctx->from_index(v % q));
        v /= q;
      }
      c.push_back(ctx->one());
      FqPoly cand(ctx, std::move(c));
      unsigned mult = 0;
      while (rest.degree() >= cand.degree()) {
        auto [quo, rem] = divrem(rest, cand);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++mult;
      }
      // smallest-degree divisors are found first, so cand is irreducible
      if (mult > 0) out.push_back({cand, mult});
    }
  }
  if (rest.degree() > 0) out.push_back({rest, 1});
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::vector<ModPFactor> factor_mod_p(const IntPoly& f, std::uint64_t p) {
  if (!f.is_monic()) throw std::invalid_argument("factor_mod_p: polynomial must be monic");
  auto ctx = FqContext::prime_field(p);
  std::vector<ModPFactor> out;
  for (auto& [g, m] : fq_factor(FqPoly::reduce(ctx, f))) out.push_back({g.lift(), m});
  return out;
}

}  // namespace monogen
