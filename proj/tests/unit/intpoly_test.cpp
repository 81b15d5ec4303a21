#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "monogen/intpoly.hpp"
#include "oracles.hpp"

namespace monogen {
namespace {

const IntPoly kF{-5, 0, 0, 1};  // x^3 - 5

TEST(IntPoly, NormalizesTrailingZeros) {
  IntPoly f(std::vector<Integer>{1, 2, 0, 0});
  EXPECT_EQ(f.degree(), 1);
  EXPECT_EQ(f.coeffs().size(), 2u);
  EXPECT_TRUE(IntPoly(std::vector<Integer>{0, 0}).is_zero());
  EXPECT_EQ(IntPoly().degree(), -1);
}

TEST(IntPoly, ToString) {
  EXPECT_EQ(kF.to_string(), "x^3 - 5");
  EXPECT_EQ((IntPoly{0, 3, -1}).to_string(), "-x^2 + 3*x");
  EXPECT_EQ(IntPoly().to_string(), "0");
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(kF, IntPoly::x()), kF);
  EXPECT_EQ(compose(kF, kF), (IntPoly{-130, 0, 0, 75, 0, 0, -15, 0, 0, 1}));
  EXPECT_EQ(compose(IntPoly{1, 0, 1}, IntPoly{1, 1}), (IntPoly{2, 2, 1}));
}

TEST(Iterate, Examples) {
  EXPECT_EQ(iterate(kF, 1), kF);
  EXPECT_EQ(iterate(kF, 2).to_string(), "x^9 - 15*x^6 + 75*x^3 - 130");
  EXPECT_EQ(iterate(IntPoly{-5, 0, 0, 0, 0, 1}, 2).to_string(),
            "x^25 - 25*x^20 + 250*x^15 - 1250*x^10 + 3125*x^5 - 3130");
}

TEST(Iterate, RejectsZeroAndHugeDegree) {
  EXPECT_THROW(iterate(kF, 0), std::invalid_argument);
  EXPECT_THROW(iterate(kF, 11), std::length_error);  // 3^11 > 10^5
}

TEST(OrbitConstant, Examples) {
  EXPECT_EQ(orbit_constant(3, 5, 2), -130);
  EXPECT_EQ(orbit_constant(3, 5, 3), -2197005);
  EXPECT_EQ(orbit_constant(5, 5, 3), Integer("-300415051279300005"));
  EXPECT_EQ(orbit_constant(3, 5, 4), Integer("-10604571775299775130"));
  const auto o = orbit(5, 5, 3);
  ASSERT_EQ(o.size(), 3u);
  EXPECT_EQ(o[1], -3130);
}

TEST(IrreducibleRadical, Examples) {
  EXPECT_TRUE(is_irreducible_radical(3, 5));
  EXPECT_FALSE(is_irreducible_radical(3, 8));
  EXPECT_FALSE(is_irreducible_radical(5, 32));
  EXPECT_FALSE(is_irreducible_radical(3, -8));
  EXPECT_TRUE(is_irreducible_radical(2, -4));  // x^2 + 4
  EXPECT_FALSE(is_irreducible_radical(2, 1));
  EXPECT_THROW(is_irreducible_radical(3, 0), std::invalid_argument);
}

TEST(IrreducibleBinomial, MatchesBruteForce) {
  for (unsigned long n = 1; n <= 8; ++n)
    for (long a = -300; a <= 300; ++a) {
      if (a == 0) continue;
      EXPECT_EQ(is_irreducible_binomial(n, a), oracle::binomial_irreducible_small(n, a)) << "n=" << n << " a=" << a;
    }
  EXPECT_FALSE(is_irreducible_binomial(4, -4));  // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
  EXPECT_FALSE(is_irreducible_binomial(4, -64));
}

TEST(DiscRadical, Examples) {
  EXPECT_EQ(disc_radical(2, 1), 4);
  EXPECT_EQ(disc_radical(3, 5), -675);
  EXPECT_EQ(disc_radical(3, 0), 0);
}

TEST(DiscRadical, MatchesResultantOracle) {
  for (unsigned long n = 2; n <= 6; ++n)
    for (long alpha = -10; alpha <= 10; ++alpha)
      EXPECT_EQ(disc_radical(n, alpha), oracle::discriminant(radical_poly(n, alpha))) << n << " " << alpha;
}

TEST(IntPolyProperty, ComposeIsAssociative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_poly(rng, 3, 5);
    const auto g = oracle::random_poly(rng, 3, 5);
    const auto h = oracle::random_poly(rng, 3, 5);
    EXPECT_EQ(compose(f, compose(g, h)), compose(compose(f, g), h));
  }
}

TEST(IntPolyProperty, ComposeDegreeAndEvaluation) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_poly(rng, 4, 9);
    const auto g = oracle::random_poly(rng, 4, 9);
    const auto fg = compose(f, g);
    if (f.degree() > 0 && g.degree() > 0) EXPECT_EQ(fg.degree(), f.degree() * g.degree());
    for (long x = -3; x <= 3; ++x) EXPECT_EQ(fg.eval(x), f.eval(g.eval(x)));
  }
}

TEST(IntPolyProperty, OrbitMatchesIterateAtZero) {
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (long a = -20; a <= 20; ++a)
      for (unsigned n = 1; n <= 4; ++n)
        EXPECT_EQ(orbit_constant(p, a, n), iterate(radical_poly(p, a), n).eval(0)) << p << " " << a << " " << n;
}

TEST(IntPolyProperty, IterateDegree) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = oracle::random_poly(rng, 3, 4);
    if (f.degree() < 1) continue;
    for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(iterate(f, n).degree(), static_cast<int>(std::pow(f.degree(), n)));
  }
}

TEST(IntPolyProperty, DivremMonicReassembles) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_poly(rng, 8, 20);
    auto g = oracle::random_poly(rng, 3, 20);
    g += IntPoly::monomial(1, 4) - IntPoly::monomial(g.coeff(4), 4);  // force monic degree 4
    const auto [q, r] = divrem_monic(f, g);
    EXPECT_EQ(q * g + r, f);
    EXPECT_LT(r.degree(), g.degree());
  }
}

}  // namespace
}  // namespace monogen
