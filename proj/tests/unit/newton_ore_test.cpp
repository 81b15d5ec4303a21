#include <gtest/gtest.h>

#include <random>

#include "monogen/newton_ore.hpp"
#include "oracles.hpp"

namespace monogen {
namespace {

const IntPoly kX3m5{-5, 0, 0, 1};
const IntPoly kX3m9{-9, 0, 0, 1};
const IntPoly kF2{-130, 0, 0, 75, 0, 0, -15, 0, 0, 1};  // (x^3 - 5) o (x^3 - 5)

std::vector<PrimeShape> splitting(const IntPoly& f, std::uint64_t p) {
  const auto r = dissect(f, p);
  EXPECT_TRUE(r.complete());
  return r.splitting.value_or(std::vector<PrimeShape>{});
}

std::vector<LatticePoint> to_points(const std::vector<oracle::Pt>& pts) {
  std::vector<LatticePoint> out;
  for (const auto& p : pts) out.push_back({p.x, Valuation(static_cast<std::uint64_t>(p.y))});
  return out;
}

TEST(PhiDevelopment, Examples) {
  auto d = phi_development(kX3m5, IntPoly::x());
  EXPECT_EQ(d.coefficients, (std::vector<IntPoly>{IntPoly{-5}, IntPoly{}, IntPoly{}, IntPoly{1}}));
  d = phi_development(kX3m5, IntPoly{1, 1});
  EXPECT_EQ(d.coefficients, (std::vector<IntPoly>{IntPoly{-6}, IntPoly{3}, IntPoly{-3}, IntPoly{1}}));
  EXPECT_EQ(d.reassemble(), kX3m5);
  d = phi_development(IntPoly{1, 0, 1}, IntPoly{1, 0, 1});
  EXPECT_EQ(d.coefficients, (std::vector<IntPoly>{IntPoly{}, IntPoly{1}}));
  EXPECT_THROW(phi_development(kX3m5, IntPoly{1, 2}), std::invalid_argument);
  EXPECT_THROW(phi_development(IntPoly{1, 1}, IntPoly{1, 0, 1}), std::invalid_argument);
}

TEST(PrincipalPolygon, Examples) {
  auto poly = principal_polygon(phi_development(kX3m5, IntPoly{1, 1}), 3);
  ASSERT_EQ(poly.sides.size(), 1u);
  EXPECT_EQ(poly.sides[0], (Side{0, 1, 3, 0, 1, 3}));
  EXPECT_EQ(poly.points.size(), 4u);

  poly = principal_polygon(phi_development(kX3m9, IntPoly::x()), 3);
  ASSERT_EQ(poly.sides.size(), 1u);
  EXPECT_EQ(poly.sides[0], (Side{0, 2, 3, 0, 2, 3}));

  // x^2 - 3x + 2 = (x-1)^2 - (x-1): a_0 = 0 drops out, the rest sit at height 0.
  poly = principal_polygon(phi_development(IntPoly{2, -3, 1}, IntPoly{-1, 1}), 5);
  EXPECT_TRUE(poly.empty());
  EXPECT_EQ(poly.points.front().x, 1);
}

TEST(IndPhi, Examples) {
  EXPECT_EQ(ind_phi(principal_polygon(phi_development(kX3m5, IntPoly{1, 1}), 3)), 0u);
  EXPECT_EQ(ind_phi(principal_polygon(phi_development(kX3m9, IntPoly::x()), 3)), 1u);
  EXPECT_EQ(ind_phi(NewtonPolygon{}), 0u);
}

TEST(ResidualPolynomial, Examples) {
  auto dev = phi_development(kX3m5, IntPoly{1, 1});
  auto poly = principal_polygon(dev, 3);
  auto r = residual_polynomial(dev, poly.sides[0], 3);
  EXPECT_EQ(r.poly.to_string(), "y + 1");

  dev = phi_development(kX3m9, IntPoly::x());
  poly = principal_polygon(dev, 3);
  r = residual_polynomial(dev, poly.sides[0], 3);
  EXPECT_EQ(r.poly.to_string(), "y + 2");

  // 7-Eisenstein: one side of slope -1/4, linear residual.
  const IntPoly eis{14, -7, 0, 21, 1};
  dev = phi_development(eis, IntPoly::x());
  poly = principal_polygon(dev, 7);
  ASSERT_EQ(poly.sides.size(), 1u);
  EXPECT_EQ(poly.sides[0].e, 4);
  r = residual_polynomial(dev, poly.sides[0], 7);
  EXPECT_EQ(r.poly.degree(), 1);
  EXPECT_TRUE(is_separable(r.poly));

  EXPECT_THROW(residual_polynomial(dev, Side{0, 5, 4, 0, 5, 4}, 7), std::invalid_argument);
}

TEST(ResidualPolynomial, OverExtensionResidueField) {
  // (x^2 + 1)^2 + 3 at p = 3: phi = x^2 + 1 irreducible mod 3, residue field F_9.
  const IntPoly f = pow(IntPoly{1, 0, 1}, 2) + IntPoly{3};
  const auto analyses = analyze_phis(f, 3);
  ASSERT_EQ(analyses.size(), 1u);
  EXPECT_EQ(analyses[0].phi, (IntPoly{1, 0, 1}));
  EXPECT_EQ(analyses[0].multiplicity, 2u);
  ASSERT_EQ(analyses[0].residuals.size(), 1u);
  EXPECT_EQ(analyses[0].residuals[0].poly.field().degree(), 2u);
  EXPECT_EQ(splitting(f, 3), (std::vector<PrimeShape>{{2, 2}}));
}

TEST(OreIndex, Examples) {
  EXPECT_EQ(ore_index(kX3m5, 3), (OreIndex{0, true}));
  EXPECT_EQ(ore_index(kX3m9, 3), (OreIndex{1, true}));
  EXPECT_EQ(ore_index(kX3m5, 7), (OreIndex{0, true}));
  // x^2 + 4 at 2: residual (y + 1)^2, index bound not exact.
  EXPECT_EQ(ore_index(IntPoly{4, 0, 1}, 2), (OreIndex{1, false}));
}

TEST(IsPMaximalOre, Examples) {
  EXPECT_TRUE(is_p_maximal_ore(kX3m5, 3));
  EXPECT_FALSE(is_p_maximal_ore(kX3m9, 3));
  EXPECT_TRUE(is_p_maximal_ore(kF2, 2));
  EXPECT_TRUE(dedekind_maximality(kF2, 2));
}

TEST(Dissect, Examples) {
  EXPECT_EQ(splitting(kX3m5, 2), (std::vector<PrimeShape>{{1, 1}, {1, 2}}));
  EXPECT_EQ(splitting(kX3m5, 3), (std::vector<PrimeShape>{{3, 1}}));
  EXPECT_EQ(splitting(kF2, 3), (std::vector<PrimeShape>{{9, 1}}));
  const auto r = dissect(kX3m5, 2);
  EXPECT_TRUE(r.factors[0].hensel);
}

TEST(Dissect, InseparableResidualIsIncomplete) {
  const auto r = dissect(IntPoly{4, 0, 1}, 2);
  EXPECT_FALSE(r.complete());
  ASSERT_EQ(r.factors.size(), 1u);
  ASSERT_EQ(r.factors[0].sides.size(), 1u);
  EXPECT_TRUE(r.factors[0].sides[0].requires_higher_order);
}

TEST(DedekindMaximality, Examples) {
  EXPECT_TRUE(dedekind_maximality(kX3m5, 3));
  EXPECT_FALSE(dedekind_maximality(IntPoly{-10, 0, 0, 1}, 3));
  EXPECT_FALSE(dedekind_maximality(kX3m9, 3));
}

// ---------------------------------------------------------------- properties

struct Sample {
  IntPoly f;
  std::uint64_t p;
};

std::vector<IntPoly> small_irreducibles(std::mt19937_64& rng, int count) {
  std::vector<IntPoly> out;
  std::uniform_int_distribution<long long> c(-20, 20);
  while (static_cast<int>(out.size()) < count) {
    const std::size_t deg = 2 + rng() % 3;
    std::vector<long long> coeffs(deg + 1);
    for (auto& x : coeffs) x = c(rng);
    coeffs.back() = 1;
    if (!oracle::irreducible_monic_small(coeffs)) continue;
    out.push_back(oracle::to_poly(coeffs));
  }
  return out;
}

TEST(NewtonOreProperty, OreAgreesWithDedekind) {
  std::mt19937_64 rng(51);
  auto sample = small_irreducibles(rng, 400);
  // degree 5, kept when irreducible modulo some small prime
  std::uniform_int_distribution<long> c(-20, 20);
  while (sample.size() < 500) {
    std::vector<Integer> z(6);
    for (auto& x : z) x = c(rng);
    z.back() = 1;
    IntPoly f(std::move(z));
    for (std::uint64_t q : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
      const auto fac = factor_mod_p(f, q);
      if (fac.size() == 1 && fac[0].multiplicity == 1) {
        sample.push_back(f);
        break;
      }
    }
  }
  int disagreements = 0, non_maximal = 0;
  for (const auto& f : sample)
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
      const bool ore = is_p_maximal_ore(f, p);
      if (ore != dedekind_maximality(f, p)) {
        ++disagreements;
        ADD_FAILURE() << f.to_string() << " at " << p;
      }
      non_maximal += !ore;
    }
  EXPECT_EQ(disagreements, 0);
  EXPECT_GT(non_maximal, 20);
}

// v_p of the index of Z[sqrt d] in the ring of integers of Q(sqrt d).
long quadratic_index_valuation(long d, long p) {
  long s = 1, d0 = d;
  for (long q = 2; q * q <= (d0 < 0 ? -d0 : d0); ++q)
    while (d0 % (q * q) == 0) {
      d0 /= q * q;
      s *= q;
    }
  long index = s * (((d0 % 4) + 4) % 4 == 1 ? 2 : 1);
  return oracle::valuation(index, p);
}

TEST(NewtonOreProperty, QuadraticIndexOracle) {
  int exact_cases = 0;
  for (long d = -200; d <= 200; ++d) {
    long long r = 0;
    if (d == 0 || oracle::is_square_ll(d, r)) continue;
    const IntPoly f{-d, 0, 1};
    for (long p : {2L, 3L, 5L, 7L}) {
      const auto idx = ore_index(f, static_cast<std::uint64_t>(p));
      const auto truth = static_cast<std::uint64_t>(quadratic_index_valuation(d, p));
      EXPECT_LE(idx.total_index, truth) << d << " " << p;
      if (idx.exact) {
        EXPECT_EQ(idx.total_index, truth) << d << " " << p;
        ++exact_cases;
      }
    }
  }
  EXPECT_GT(exact_cases, 1000);
}

TEST(NewtonOreProperty, DevelopmentReassemblesWithSmallDegrees) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly f = oracle::random_poly(rng, 7, 100) + IntPoly::monomial(1, 8);
    const IntPoly phi = oracle::random_poly(rng, 2, 10) + IntPoly::monomial(1, 3);
    const auto dev = phi_development(f, phi);
    EXPECT_EQ(dev.reassemble(), f);
    for (const auto& a : dev.coefficients) EXPECT_LT(a.degree(), phi.degree());
  }
}

TEST(NewtonOreProperty, DegreeSumAndResidualEndpoints) {
  std::mt19937_64 rng(53);
  const auto sample = small_irreducibles(rng, 600);
  int complete = 0;
  for (const auto& f : sample)
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
      for (const auto& a : analyze_phis(f, p))
        for (const auto& r : a.residuals) {
          EXPECT_EQ(r.poly.degree(), r.side.degree());
          EXPECT_FALSE(r.poly.field().is_zero(r.poly.coeff(0)));
          EXPECT_FALSE(r.poly.field().is_zero(r.poly.leading()));
        }
      const auto rep = dissect(f, p);
      if (!rep.complete()) continue;
      ++complete;
      unsigned sum = 0;
      for (const auto& s : *rep.splitting) sum += s.e * s.f;
      EXPECT_EQ(sum, static_cast<unsigned>(f.degree())) << f.to_string() << " at " << p;
    }
  EXPECT_GT(complete, 2000);
}

TEST(NewtonOreProperty, EisensteinIsTotallyRamified) {
  std::mt19937_64 rng(54);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
    for (int trial = 0; trial < 40; ++trial) {
      const int deg = 2 + static_cast<int>(rng() % 5);
      std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = Integer(static_cast<long>(rng() % 21) - 10) * Integer(static_cast<unsigned long>(p));
      long unit = static_cast<long>(rng() % 20) + 1;
      if (unit % static_cast<long>(p) == 0) ++unit;
      c[0] = Integer(unit) * Integer(static_cast<unsigned long>(p));
      c.back() = 1;
      const IntPoly f(std::move(c));
      EXPECT_EQ(splitting(f, p), (std::vector<PrimeShape>{{static_cast<unsigned>(deg), 1}})) << f.to_string();
      EXPECT_EQ(ore_index(f, p).total_index, 0u);
    }
}

TEST(NewtonOreProperty, HullMatchesBruteForce) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> xs(16);
    std::iota(xs.begin(), xs.end(), 0);
    std::shuffle(xs.begin(), xs.end(), rng);
    std::vector<oracle::Pt> pts;
    for (int i = 0; i < n; ++i) pts.push_back({xs[static_cast<std::size_t>(i)], static_cast<long long>(rng() % 11)});
    const auto poly = principal_polygon(to_points(pts));
    const auto expect = oracle::lower_hull_negative(pts);
    ASSERT_EQ(poly.sides.size(), expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
      const auto& s = poly.sides[i];
      EXPECT_EQ((oracle::Seg{s.start_x, s.start_y, s.end_x, s.end_y}), expect[i]);
      EXPECT_EQ(std::gcd(s.h, s.e), 1);
      EXPECT_EQ(s.h * (s.end_x - s.start_x), s.e * (s.start_y - s.end_y));
      EXPECT_EQ(s.length() % s.e, 0);
      if (i) {
        EXPECT_EQ(poly.sides[i - 1].end_x, s.start_x);
        EXPECT_GT(poly.sides[i - 1].h * s.e, s.h * poly.sides[i - 1].e);  // strictly increasing slopes
      }
      for (const auto& p : pts) EXPECT_GE(oracle::cross({s.start_x, s.start_y}, {s.end_x, s.end_y}, p), 0);
    }
    EXPECT_EQ(ind_phi(poly), oracle::lattice_count(expect));
  }
}

TEST(NewtonOreProperty, InfiniteOrdinatesAreIgnored) {
  std::vector<LatticePoint> pts{{0, Valuation::infinity()}, {1, Valuation(3)}, {2, Valuation::infinity()}, {4, Valuation(0)}};
  const auto poly = principal_polygon(pts);
  ASSERT_EQ(poly.sides.size(), 1u);
  EXPECT_EQ(poly.sides[0], (Side{1, 3, 4, 0, 1, 1}));
  EXPECT_EQ(ind_phi(poly), 6u);  // heights 3, 2, 1, 0 at x = 1..4
}

}  // namespace
}  // namespace monogen
