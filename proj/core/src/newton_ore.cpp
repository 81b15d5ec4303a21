#include "monogen/newton_ore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace monogen {

IntPoly PhiDevelopment::reassemble() const {
  IntPoly acc;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    acc *= phi;
    acc += coefficients[k];
  }
  return acc;
}

PhiDevelopment phi_development(const IntPoly& f, const IntPoly& phi) {
  if (!phi.is_monic() || phi.degree() < 1)
    throw std::invalid_argument("phi_development: phi must be monic of positive degree");
  if (phi.degree() > f.degree()) throw std::invalid_argument("phi_development: deg phi exceeds deg f");
  PhiDevelopment dev{phi, f, {}};
  IntPoly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = divrem_monic(rest, phi);
    dev.coefficients.push_back(std::move(r));
    rest = std::move(q);
  }
  return dev;
}

NewtonPolygon principal_polygon(std::vector<LatticePoint> points) {
  std::erase_if(points, [](const LatticePoint& pt) { return pt.y.is_infinite(); });
  std::sort(points.begin(), points.end(), [](const LatticePoint& a, const LatticePoint& b) { return a.x < b.x; });

  std::vector<std::pair<std::int64_t, std::int64_t>> hull;
  for (const auto& pt : points) {
    const std::int64_t x = pt.x;
    const auto y = static_cast<std::int64_t>(pt.y.value());
    while (hull.size() >= 2) {
      const auto& [ax, ay] = hull[hull.size() - 2];
      const auto& [bx, by] = hull.back();
      // drop b unless a -> b -> (x, y) turns strictly left
      const std::int64_t cross = (bx - ax) * (y - ay) - (by - ay) * (x - ax);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.emplace_back(x, y);
  }

  NewtonPolygon polygon;
  polygon.points = std::move(points);
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const auto [sx, sy] = hull[i - 1];
    const auto [kx, ky] = hull[i];
    if (ky >= sy) break;
    const std::int64_t dy = sy - ky;
    const std::int64_t dx = kx - sx;
    const std::int64_t g = std::gcd(dy, dx);
    polygon.sides.push_back(Side{sx, sy, kx, ky, dy / g, dx / g});
  }
  return polygon;
}

NewtonPolygon principal_polygon(const PhiDevelopment& dev, std::uint64_t p) {
  std::vector<LatticePoint> points;
  const Integer pz(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < dev.coefficients.size(); ++i)
    points.push_back({static_cast<std::int64_t>(i), gauss_valuation(dev.coefficients[i], pz)});
  return principal_polygon(std::move(points));
}

std::uint64_t ind_phi(const NewtonPolygon& polygon) {
  std::uint64_t count = 0;
  for (const auto& side : polygon.sides) {
    // half-open [start_x, end_x) per side; the terminal vertex has the
    // smallest ordinate, and ordinate 0 never counts.
    for (std::int64_t x = std::max<std::int64_t>(1, side.start_x); x < side.end_x; ++x) {
      const std::int64_t num = side.start_y * side.e - side.h * (x - side.start_x);
      if (num > 0) count += static_cast<std::uint64_t>(num / side.e);
    }
  }
  if (!polygon.sides.empty()) {
    const auto& last = polygon.sides.back();
    if (last.end_x >= 1 && last.end_y > 0) count += static_cast<std::uint64_t>(last.end_y);
  }
  return count;
}

ResidualPoly residual_polynomial(const PhiDevelopment& dev, const Side& side, std::uint64_t p,
                                 const FqContext::Ptr& residue_field) {
  const Integer pz(static_cast<unsigned long>(p));
  std::vector<FqElem> coeffs;
  const std::int64_t d = side.degree();
  for (std::int64_t j = 0; j <= d; ++j) {
    const std::int64_t i = side.start_x + j * side.e;
    const std::int64_t expected = side.start_y - j * side.h;
    const IntPoly a = i < static_cast<std::int64_t>(dev.coefficients.size())
                          ? dev.coefficients[static_cast<std::size_t>(i)]
                          : IntPoly{};
    const Valuation v = gauss_valuation(a, pz);
    if (v.is_finite() && v.value() < static_cast<std::uint64_t>(expected))
      throw std::invalid_argument("residual_polynomial: point lies below the side");
    if (v.is_infinite() || v.value() > static_cast<std::uint64_t>(expected)) {
      coeffs.push_back(residue_field->zero());
      continue;
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p), v.value());
    const IntPoly unit = a.divexact(scale);
    std::vector<std::uint64_t> red;
    for (const auto& c : unit.coeffs()) red.push_back(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
    coeffs.push_back(residue_field->from_coeffs(std::move(red)));
  }
  ResidualPoly out{side, FqPoly(residue_field, std::move(coeffs))};
  if (out.poly.degree() != d || residue_field->is_zero(out.poly.coeff(0)))
    throw std::invalid_argument("residual_polynomial: side endpoints are not development points");
  return out;
}

ResidualPoly residual_polynomial(const PhiDevelopment& dev, const Side& side, std::uint64_t p) {
  return residual_polynomial(dev, side, p, FqContext::residue_field(p, dev.phi));
}

std::vector<PhiAnalysis> analyze_phis(const IntPoly& f, std::uint64_t p) {
  std::vector<PhiAnalysis> out;
  for (auto& [phi, r] : factor_mod_p(f, p)) {
    PhiAnalysis a;
    a.phi = phi;
    a.multiplicity = r;
    a.development = phi_development(f, phi);
    a.polygon = principal_polygon(a.development, p);
    const auto field = FqContext::residue_field(p, phi);
    for (const auto& side : a.polygon.sides) {
      a.residuals.push_back(residual_polynomial(a.development, side, p, field));
      if (!is_separable(a.residuals.back().poly)) a.regular = false;
    }
    a.lattice_points = ind_phi(a.polygon);
    a.index_contribution = static_cast<std::uint64_t>(phi.degree()) * a.lattice_points;
    out.push_back(std::move(a));
  }
  return out;
}

OreIndex ore_index(const IntPoly& f, std::uint64_t p) {
  OreIndex idx;
  for (const auto& a : analyze_phis(f, p)) {
    idx.total_index += a.index_contribution;
    idx.exact = idx.exact && a.regular;
  }
  return idx;
}

bool is_p_maximal_ore(const IntPoly& f, std::uint64_t p) {
  const auto analyses = analyze_phis(f, p);
  std::uint64_t total = 0;
  for (const auto& a : analyses) total += a.index_contribution;
  if (total != 0) return false;
  for (const auto& a : analyses) {
    if (a.polygon.sides.size() > 1)
      throw std::logic_error("is_p_maximal_ore: index 0 but principal polygon has several sides");
  }
  return true;
}

DissectionReport dissect(const IntPoly& f, std::uint64_t p) {
  DissectionReport report;
  std::vector<PrimeShape> shapes;
  bool complete = true;
  for (auto& a : analyze_phis(f, p)) {
    PhiDissection pd;
    pd.phi = a.phi;
    pd.multiplicity = a.multiplicity;
    const auto deg_phi = static_cast<unsigned>(a.phi.degree());
    if (a.multiplicity == 1) {
      pd.hensel = true;
      shapes.push_back({1, deg_phi});
    } else {
      for (const auto& res : a.residuals) {
        SideDissection sd;
        sd.side = res.side;
        if (!is_separable(res.poly)) {
          sd.requires_higher_order = true;
          complete = false;
        } else {
          for (const auto& gamma : fq_factor(res.poly)) {
            PrimeShape shape{static_cast<unsigned>(res.side.e), deg_phi * static_cast<unsigned>(gamma.factor.degree())};
            sd.primes.push_back(shape);
            shapes.push_back(shape);
          }
        }
        pd.sides.push_back(std::move(sd));
      }
    }
    report.factors.push_back(std::move(pd));
  }
  if (complete) report.splitting = std::move(shapes);
  return report;
}

bool dedekind_maximality(const IntPoly& f, std::uint64_t p) {
  const auto factors = factor_mod_p(f, p);
  IntPoly g = IntPoly::constant(1);
  IntPoly h = IntPoly::constant(1);
  for (const auto& [phi, r] : factors) {
    g *= phi;
    if (r > 1) h *= pow(phi, r - 1);
  }
  const IntPoly F = (g * h - f).divexact(Integer(static_cast<unsigned long>(p)));
  const auto ctx = FqContext::prime_field(p);
  const FqPoly common = gcd(gcd(FqPoly::reduce(ctx, F), FqPoly::reduce(ctx, g)), FqPoly::reduce(ctx, h));
  return common.degree() == 0;
}

}  // namespace monogen
