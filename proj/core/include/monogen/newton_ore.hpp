#ifndef MONOGEN_NEWTON_ORE_HPP_
#define MONOGEN_NEWTON_ORE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "monogen/arith.hpp"
#include "monogen/finitefield.hpp"
#include "monogen/intpoly.hpp"

namespace monogen {

/* f = sum_i coefficients[i] * phi^i with deg coefficients[i] < deg phi. */
struct PhiDevelopment {
  IntPoly phi;
  IntPoly base_poly;
  std::vector<IntPoly> coefficients;

  // sum coefficients[i] * phi^i, for checking the development.
  IntPoly reassemble() const;

  friend bool operator==(const PhiDevelopment&, const PhiDevelopment&) = default;
};

// Repeated division with remainder by phi. Throws std::invalid_argument
// when phi is not monic of positive degree or deg phi > deg f.
PhiDevelopment phi_development(const IntPoly& f, const IntPoly& phi);

struct LatticePoint {
  std::int64_t x = 0;
  Valuation y;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/* One side of a Newton polygon, from (s, v_s) to (k, v_k), slope -h/e in
 * lowest terms. length = k - s, degree = length / e.
 */
struct Side {
  std::int64_t start_x = 0;
  std::int64_t start_y = 0;
  std::int64_t end_x = 0;
  std::int64_t end_y = 0;
  std::int64_t h = 0;  // slope numerator (positive)
  std::int64_t e = 1;  // slope denominator (positive), gcd(h, e) = 1

  std::int64_t length() const { return end_x - start_x; }
  std::int64_t degree() const { return length() / e; }

  friend bool operator==(const Side&, const Side&) = default;
};

/* points: every (i, v(a_i)) with finite ordinate, in increasing i.
 * sides: the negative-slope part of the lower convex hull, left to right,
 * slopes strictly increasing. Vertices are extreme points only; collinear
 * points lie on a side without splitting it.
 */
struct NewtonPolygon {
  std::vector<LatticePoint> points;
  std::vector<Side> sides;

  bool empty() const { return sides.empty(); }
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

// Lower convex hull of the given points (finite ordinates only), keeping the
// sides of negative slope.
NewtonPolygon principal_polygon(std::vector<LatticePoint> points);
// The principal phi-polygon: points (i, gauss_valuation(a_i, p)).
NewtonPolygon principal_polygon(const PhiDevelopment& dev, std::uint64_t p);

// Lattice points (x, y) with x, y >= 1 on or under the polygon, for x
// between its initial and terminal abscissae.
std::uint64_t ind_phi(const NewtonPolygon& polygon);

/* Residual polynomial c_s + c_{s+e} y + ... + c_{s+de} y^d over the residue
 * field F_p[t]/(phi mod p).
 */
struct ResidualPoly {
  Side side;
  FqPoly poly;
  friend bool operator==(const ResidualPoly&, const ResidualPoly&) = default;
};

// Throws std::invalid_argument if the side does not match the development.
ResidualPoly residual_polynomial(const PhiDevelopment& dev, const Side& side, std::uint64_t p);
// Same, reusing an already built residue field for phi.
ResidualPoly residual_polynomial(const PhiDevelopment& dev, const Side& side, std::uint64_t p,
                                 const FqContext::Ptr& residue_field);

/* Everything the Ore layer computes for one irreducible factor phi of f mod p. */
struct PhiAnalysis {
  IntPoly phi;
  unsigned multiplicity = 0;
  PhiDevelopment development;
  NewtonPolygon polygon;
  std::vector<ResidualPoly> residuals;  // one per side
  std::uint64_t lattice_points = 0;     // ind_phi(polygon)
  // deg(phi) * lattice_points: the contribution of phi to v_p(index).
  std::uint64_t index_contribution = 0;
  bool regular = true;  // all residual polynomials separable
  friend bool operator==(const PhiAnalysis&, const PhiAnalysis&) = default;
};

// One PhiAnalysis per distinct irreducible factor of f mod p, in the order
// of factor_mod_p.
std::vector<PhiAnalysis> analyze_phis(const IntPoly& f, std::uint64_t p);

struct OreIndex {
  std::uint64_t total_index = 0;
  // true when every residual polynomial is separable, so total_index equals
  // v_p([O_K : Z[alpha]]); otherwise it is a lower bound.
  bool exact = true;
  friend bool operator==(const OreIndex&, const OreIndex&) = default;
};

OreIndex ore_index(const IntPoly& f, std::uint64_t p);

// p does not divide the index of Z[alpha] iff total_index is 0. Throws
// std::logic_error if an index-0 polygon has more than one side.
bool is_p_maximal_ore(const IntPoly& f, std::uint64_t p);

struct PrimeShape {
  unsigned e = 1;  // ramification index
  unsigned f = 1;  // residue degree
  friend bool operator==(const PrimeShape&, const PrimeShape&) = default;
};

struct SideDissection {
  Side side;
  // One shape per irreducible factor of the residual polynomial; empty when
  // requires_higher_order is set.
  std::vector<PrimeShape> primes;
  bool requires_higher_order = false;
  friend bool operator==(const SideDissection&, const SideDissection&) = default;
};

struct PhiDissection {
  IntPoly phi;
  unsigned multiplicity = 0;
  // multiplicity 1: f has a Hensel factor lifting phi, one unramified prime.
  bool hensel = false;
  std::vector<SideDissection> sides;
  friend bool operator==(const PhiDissection&, const PhiDissection&) = default;
};

struct DissectionReport {
  std::vector<PhiDissection> factors;
  // Concatenated prime shapes; nullopt when some side needs higher order.
  std::optional<std::vector<PrimeShape>> splitting;

  bool complete() const { return splitting.has_value(); }
  friend bool operator==(const DissectionReport&, const DissectionReport&) = default;
};

DissectionReport dissect(const IntPoly& f, std::uint64_t p);

// Dedekind's criterion. With g the product of the distinct irreducible
// factors of f mod p, h = f / g mod p and F = (g h - f) / p, p does not
// divide the index iff gcd(F, g, h) = 1 over F_p.
bool dedekind_maximality(const IntPoly& f, std::uint64_t p);

}  // namespace monogen

#endif  // MONOGEN_NEWTON_ORE_HPP_
