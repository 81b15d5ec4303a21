#include "monogen/factorint.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "monogen/arith.hpp"

namespace monogen {

namespace {

constexpr unsigned long kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Miller-Rabin with the first 13 prime bases is deterministic below this.
const Integer& deterministic_mr_limit() {
  static const Integer limit("3317044064679887385961981");
  return limit;
}

bool miller_rabin_round(const Integer& n, const Integer& n_minus_1, const Integer& d, unsigned long s,
                        const Integer& base) {
  Integer x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Calls visit(q) for each prime q <= bound in increasing order until visit
// returns false.
template <typename Visit>
void for_each_prime(std::uint64_t bound, Visit&& visit) {
  if (bound < 2 || !visit(2UL)) return;
  // index i stands for the odd number 2i + 1
  const std::uint64_t half = (bound - 1) / 2;
  std::vector<bool> composite(half + 1, false);
  for (std::uint64_t i = 1; i <= half; ++i) {
    if (composite[i]) continue;
    const std::uint64_t q = 2 * i + 1;
    if (!visit(static_cast<unsigned long>(q))) return;
    for (std::uint64_t j = (q * q - 1) / 2; j <= half; j += q) composite[j] = true;
  }
}

Integer f_rho(const Integer& y, const Integer& c, const Integer& n) {
  Integer r = y * y + c;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Brent's variant of Pollard rho. Returns a proper divisor of n, or 0 when
// the iteration budget runs out. n must be odd, composite and not a perfect
// power.
Integer brent_split(const Integer& n, gmp_randclass& rng, std::uint64_t budget) {
  constexpr std::uint64_t kBatch = 128;
  std::uint64_t used = 0;
  const Integer n_minus_1 = n - 1;
  while (used < budget) {
    Integer y = rng.get_z_range(n_minus_1) + 1;
    Integer c = rng.get_z_range(n_minus_1) + 1;
    Integer g = 1, q = 1, x, ys;
    std::uint64_t r = 1;
    bool exhausted = false;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f_rho(y, c, n);
      used += r;
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t steps = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f_rho(y, c, n);
          q *= abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        used += steps;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
      if (used >= budget && g == 1) exhausted = true;
    } while (g == 1 && !exhausted);
    if (exhausted) break;
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      for (std::uint64_t i = 0; i < kBatch; ++i) {
        ys = f_rho(ys, c, n);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        if (g != 1) break;
      }
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

struct Splitter {
  const Budget& budget;
  gmp_randclass rng{gmp_randinit_mt};
  std::map<Integer, unsigned long> primes;
  std::vector<Integer> unsplit;

  explicit Splitter(const Budget& b) : budget(b) { rng.seed(static_cast<unsigned long>(b.seed)); }

  void add_prime(const Integer& q, unsigned long e) { primes[q] += e; }

  void split(const Integer& n) {
    std::vector<std::pair<Integer, unsigned long>> work{{n, 1}};
    while (!work.empty()) {
      auto [m, mult] = std::move(work.back());
      work.pop_back();
      if (m == 1) continue;
      if (is_probable_prime(m, budget.seed)) {
        add_prime(m, mult);
        continue;
      }
      if (auto pw = perfect_power(m)) {
        work.emplace_back(pw->base, mult * pw->exponent);
        continue;
      }
      if (mpz_even_p(m.get_mpz_t())) {
        work.emplace_back(Integer(2), mult);
        work.emplace_back(m / 2, mult);
        continue;
      }
      Integer d = brent_split(m, rng, budget.rho_iterations);
      if (d == 0) {
        for (unsigned long i = 0; i < mult; ++i) unsplit.push_back(m);
        continue;
      }
      work.emplace_back(m / d, mult);
      work.emplace_back(d, mult);
    }
  }

  // Pull known primes out of the unsplit pieces and split pieces against
  // each other by gcd; repeat until nothing changes.
  void refine() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& u : unsplit) {
        for (const auto& [q, e] : primes) {
          while (u != 1 && mpz_divisible_p(u.get_mpz_t(), q.get_mpz_t())) {
            u /= q;
            primes[q] += 1;
            changed = true;
          }
        }
      }
      std::erase_if(unsplit, [](const Integer& u) { return u == 1; });
      for (std::size_t i = 0; i < unsplit.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < unsplit.size() && !changed; ++j) {
          if (unsplit[i] == unsplit[j]) continue;
          Integer g;
          mpz_gcd(g.get_mpz_t(), unsplit[i].get_mpz_t(), unsplit[j].get_mpz_t());
          if (g == 1) continue;
          Integer a = unsplit[i], b = unsplit[j];
          unsplit.erase(unsplit.begin() + static_cast<std::ptrdiff_t>(j));
          unsplit.erase(unsplit.begin() + static_cast<std::ptrdiff_t>(i));
          // g is a proper divisor of at least one of a, b.
          const Integer pieces[] = {g, a / g, g, b / g};
          for (const Integer& piece : pieces) split(piece);
          changed = true;
        }
      }
    }
    std::sort(unsplit.begin(), unsplit.end());
  }
};

}  // namespace

Budget budget_for(Effort effort, std::uint64_t seed) {
  switch (effort) {
    case Effort::kQuick:
      return {10'000, 100'000, seed};
    case Effort::kDefault:
      return {1'000'000, 10'000'000, seed};
    case Effort::kDeep:
      return {100'000'000, 1'000'000'000, seed};
  }
  throw std::invalid_argument("budget_for: unknown effort");
}

Effort parse_effort(std::string_view name) {
  if (name == "quick") return Effort::kQuick;
  if (name == "default") return Effort::kDefault;
  if (name == "deep") return Effort::kDeep;
  throw std::invalid_argument("unknown effort '" + std::string(name) + "' (expected quick, default or deep)");
}

std::string_view to_string(Effort effort) {
  switch (effort) {
    case Effort::kQuick: return "quick";
    case Effort::kDefault: return "default";
    case Effort::kDeep: return "deep";
  }
  return "?";
}

std::string_view to_string(CofactorStatus status) {
  return status == CofactorStatus::kUnit ? "unit" : "composite";
}

Integer Factorization::product() const {
  Integer acc = cofactor;
  for (const auto& [q, e] : factors) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), e);
    acc *= t;
  }
  return acc;
}

bool is_probable_prime(const Integer& x, std::uint64_t seed) {
  if (x < 2) throw std::invalid_argument("is_probable_prime: x must be at least 2");
  for (unsigned long q : kSmallPrimes) {
    if (x == q) return true;
    if (mpz_divisible_ui_p(x.get_mpz_t(), q)) return false;
  }
  const Integer n_minus_1 = x - 1;
  Integer d;
  unsigned long s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), n_minus_1.get_mpz_t(), s);

  if (x < deterministic_mr_limit()) {
    for (unsigned long q : kSmallPrimes) {
      if (!miller_rabin_round(x, n_minus_1, d, s, Integer(q))) return false;
    }
    return true;
  }
  if (!miller_rabin_round(x, n_minus_1, d, s, Integer(2))) return false;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  const Integer span = x - 3;  // bases in [2, x - 2]
  for (int round = 0; round < 40; ++round) {
    Integer base = rng.get_z_range(span) + 2;
    if (!miller_rabin_round(x, n_minus_1, d, s, base)) return false;
  }
  return true;
}

namespace {

// Runs the whole pipeline and leaves the unsplit pieces visible, so callers
// can notice a composite piece that occurs more than once.
void run_factorization(const Integer& x, Splitter& splitter) {
  if (x == 0) throw std::invalid_argument("factor: x must be nonzero");
  const Budget& budget = splitter.budget;
  Integer m = abs(x);

  for_each_prime(budget.trial_bound, [&](unsigned long q) {
    if (m == 1) return false;
    if (Integer(q) * q > m) {
      // Every prime factor of m exceeds sqrt(m), so m is prime.
      splitter.add_prime(m, 1);
      m = 1;
      return false;
    }
    if (!mpz_divisible_ui_p(m.get_mpz_t(), q)) return true;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
      ++e;
    }
    splitter.add_prime(Integer(q), e);
    return true;
  });
  if (m != 1) splitter.split(m);
  splitter.refine();
}

Factorization to_factorization(const Splitter& splitter) {
  Factorization out;
  for (const auto& [q, e] : splitter.primes) out.factors.push_back({q, e});
  for (const auto& u : splitter.unsplit) out.cofactor *= u;
  out.cofactor_status = out.cofactor == 1 ? CofactorStatus::kUnit : CofactorStatus::kComposite;
  return out;
}

}  // namespace

Factorization factor(const Integer& x, const Budget& budget) {
  Splitter splitter(budget);
  run_factorization(x, splitter);
  return to_factorization(splitter);
}

SquarefreeStatus squarefree_status(const Factorization& fac, const Budget& budget) {
  for (const auto& [q, e] : fac.factors) {
    if (e >= 2) return NotSquarefree{q};
  }
  if (fac.complete()) return Squarefree{};
  if (auto pw = perfect_power(fac.cofactor)) {
    // cofactor = b^k with k >= 2; any prime of b is a witness.
    Factorization base = factor(pw->base, budget);
    if (!base.factors.empty()) return NotSquarefree{base.factors.front().prime};
    return NotSquarefree{abs(pw->base)};
  }
  return SquarefreeUnknown{budget.trial_bound};
}

SquarefreeStatus squarefree_status(const Integer& x, const Budget& budget) {
  Splitter splitter(budget);
  run_factorization(x, splitter);
  Factorization fac = to_factorization(splitter);
  for (const auto& [q, e] : fac.factors) {
    if (e >= 2) return NotSquarefree{q};
  }
  // unsplit is sorted, so a repeated piece sits next to its twin
  for (std::size_t i = 1; i < splitter.unsplit.size(); ++i) {
    if (splitter.unsplit[i] == splitter.unsplit[i - 1]) return NotSquarefree{splitter.unsplit[i]};
  }
  return squarefree_status(fac, budget);
}

}  // namespace monogen
