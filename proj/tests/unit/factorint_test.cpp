#include <gtest/gtest.h>

#include <random>

#include "monogen/factorint.hpp"
#include "oracles.hpp"

namespace monogen {
namespace {

std::vector<PrimePower> pp(std::initializer_list<std::pair<const char*, unsigned long>> list) {
  std::vector<PrimePower> out;
  for (const auto& [p, e] : list) out.push_back({Integer(p), e});
  return out;
}

TEST(Factor, Examples) {
  const auto a = factor(3130);
  EXPECT_EQ(a.factors, pp({{"2", 1}, {"5", 1}, {"313", 1}}));
  EXPECT_EQ(a.cofactor, 1);
  EXPECT_TRUE(a.complete());

  const auto b = factor(Integer("300415051279300005"));
  EXPECT_EQ(b.factors, pp({{"3", 5}, {"5", 1}, {"247255186238107", 1}}));
  EXPECT_TRUE(b.complete());

  const auto c = factor(2197005);
  EXPECT_EQ(c.factors, pp({{"3", 1}, {"5", 1}, {"149", 1}, {"983", 1}}));

  EXPECT_TRUE(factor(1).factors.empty());
  EXPECT_TRUE(factor(-1).complete());
  EXPECT_EQ(factor(-12).factors, pp({{"2", 2}, {"3", 1}}));
  EXPECT_THROW(factor(0), std::invalid_argument);
}

TEST(Factor, RhoSplitsBeyondTrialBound) {
  Budget small{1000, 10'000'000, kDefaultSeed};
  // Two primes above the trial bound, one squared.
  const Integer p("1000003"), q("998244353");
  const auto f = factor(p * p * q * 6, small);
  EXPECT_EQ(f.factors, (std::vector<PrimePower>{{2, 1}, {3, 1}, {p, 2}, {q, 1}}));
  EXPECT_TRUE(f.complete());
}

TEST(Factor, SemiprimeOfTwentyDigitPrimes) {
  const Integer p("1000000007"), q("4294967311");
  const auto f = factor(p * q);
  EXPECT_EQ(f.factors, (std::vector<PrimePower>{{p, 1}, {q, 1}}));
}

TEST(Factor, ExhaustedBudgetLeavesCompositeCofactor) {
  Budget tiny{100, 10, kDefaultSeed};
  const Integer p("1000000007"), q("1000000009");
  const auto f = factor(p * q * 4, tiny);
  EXPECT_EQ(f.factors, (std::vector<PrimePower>{{2, 2}}));
  EXPECT_EQ(f.cofactor, p * q);
  EXPECT_EQ(f.cofactor_status, CofactorStatus::kComposite);
  EXPECT_FALSE(f.complete());
  EXPECT_EQ(f.product(), p * q * 4);
}

TEST(IsProbablePrime, Examples) {
  EXPECT_TRUE(is_probable_prime(313));
  EXPECT_TRUE(is_probable_prime(Integer("247255186238107")));
  EXPECT_FALSE(is_probable_prime(341));
  EXPECT_FALSE(is_probable_prime(Integer("3215031751")));          // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(is_probable_prime(Integer("3825123056546413051")));  // spsp to bases up to 23
  EXPECT_TRUE(is_probable_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
  EXPECT_FALSE(is_probable_prime(Integer("170141183460469231731687303715884105727") * 3));
}

TEST(IsProbablePrime, MatchesSieve) {
  const auto prime = oracle::sieve(200000);
  for (unsigned long n = 2; n <= 200000; ++n) ASSERT_EQ(is_probable_prime(n), prime[n]) << n;
}

TEST(SquarefreeStatus, Examples) {
  EXPECT_TRUE(std::holds_alternative<Squarefree>(squarefree_status(-130)));
  EXPECT_EQ(squarefree_status(Integer("-300415051279300005")), SquarefreeStatus(NotSquarefree{3}));
  EXPECT_EQ(squarefree_status(4), SquarefreeStatus(NotSquarefree{2}));
  EXPECT_TRUE(std::holds_alternative<Squarefree>(squarefree_status(1)));
}

TEST(SquarefreeStatus, PerfectPowerCofactor) {
  const Budget small{100, 0, kDefaultSeed};
  const Integer p("1000000007");
  EXPECT_EQ(squarefree_status(p * p * 7, small), SquarefreeStatus(NotSquarefree{p}));
  // a prime cofactor is settled by Miller-Rabin
  EXPECT_TRUE(std::holds_alternative<Squarefree>(squarefree_status(p * 7, small)));
}

TEST(SquarefreeStatus, UnknownCarriesBound) {
  const Budget tiny{100, 10, kDefaultSeed};
  const Integer p("1000000007"), q("1000000009");
  EXPECT_EQ(squarefree_status(p * q * 6, tiny), SquarefreeStatus(SquarefreeUnknown{100}));
}

TEST(FactorProperty, ReassemblesAndPrimesAreProbablePrime) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    Integer x = 1;
    const int parts = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < parts; ++k) x *= Integer(static_cast<unsigned long>(rng() % 4'000'000'000ULL + 1));
    if (trial % 2) x = -x;
    const auto f = factor(x, Budget{10000, 100000, kDefaultSeed});
    EXPECT_EQ(f.product(), abs(x));
    EXPECT_EQ(f.cofactor == 1, f.cofactor_status == CofactorStatus::kUnit);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      EXPECT_TRUE(is_probable_prime(f.factors[i].prime));
      if (i) EXPECT_LT(f.factors[i - 1].prime, f.factors[i].prime);
    }
  }
}

TEST(FactorProperty, SquarefreeMatchesSieveOracle) {
  const std::size_t limit = 1'000'000;
  const auto prime = oracle::sieve(1000);
  std::vector<bool> square_free(limit + 1, true);
  for (std::size_t q = 2; q * q <= limit; ++q)
    if (prime[q])
      for (std::size_t m = q * q; m <= limit; m += q * q) square_free[m] = false;
  const Budget budget{1000, 100000, kDefaultSeed};
  for (std::size_t x = 1; x <= limit; x += (x < 20000 ? 1 : 37)) {
    const auto s = squarefree_status(Integer(static_cast<unsigned long>(x)), budget);
    ASSERT_FALSE(std::holds_alternative<SquarefreeUnknown>(s)) << x;
    ASSERT_EQ(std::holds_alternative<Squarefree>(s), square_free[x]) << x;
    if (const auto* ns = std::get_if<NotSquarefree>(&s))
      ASSERT_EQ(x % (ns->witness.get_ui() * ns->witness.get_ui()), 0u) << x;
  }
}

TEST(FactorProperty, Deterministic) {
  const Integer x = orbit_constant(3, 7, 3);
  EXPECT_EQ(factor(x), factor(x));
  EXPECT_EQ(squarefree_status(x), squarefree_status(x));
  const Budget other{1'000'000, 10'000'000, 12345};
  EXPECT_EQ(factor(x, other).product(), abs(x));
}

TEST(Effort, Budgets) {
  EXPECT_EQ(budget_for(Effort::kQuick), (Budget{10'000, 100'000, kDefaultSeed}));
  EXPECT_EQ(budget_for(Effort::kDefault), Budget{});
  EXPECT_EQ(budget_for(Effort::kDeep, 9), (Budget{100'000'000, 1'000'000'000, 9}));
  EXPECT_EQ(parse_effort("deep"), Effort::kDeep);
  EXPECT_THROW(parse_effort("max"), std::invalid_argument);
}

}  // namespace
}  // namespace monogen
