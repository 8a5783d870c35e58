#include "gratom/potentials.hpp"

#include <cmath>

#include "gratom/errors.hpp"

namespace gratom {

double ScalarTerm::eval(double x, double y, double z) const {
  const double r = std::sqrt(x * x + y * y + z * z);
  return coeff * std::pow(r, r_power) * poly.eval(x, y, z);
}

double PotentialSolution::a0_eval(double x, double y, double z) const {
  double sum = 0.0;
  for (const auto& t : a0_terms) sum += t.eval(x, y, z);
  return sum;
}

PotentialSolution nuclear_potential(const PhysicalContext&,
                                    const CurvatureTensor& curv, double Q) {
  PotentialSolution sol;
  sol.source_label = SourceLabel::nucleus;
  // flat Coulomb
  sol.a0_terms.push_back({-Q, -1, PolyField::constant(1)});
  // (Q/12)(R + 4 R_00) r
  const double ricci_term = curv.ricci_scalar() + 4.0 * curv.ricci00();
  sol.a0_terms.push_back({Q / 12.0 * ricci_term, 1, PolyField::constant(1)});
  // (Q/12)(3 R_{0j0j} - R_jj) x_j^2 / r per diagonal axis
  const auto rjj = curv.ricci_spatial_diag();
  for (int j = 0; j < 3; ++j) {
    const double cj = Q / 12.0 * (3.0 * curv.r0i0j[j] - rjj[j]);
    PolyField xj2 = PolyField::monomial(j == 0 ? 2 : 0, j == 1 ? 2 : 0,
                                        j == 2 ? 2 : 0, 1);
    sol.a0_terms.push_back({cj, -1, xj2});
  }
  // The vector piece (1/6) Q R^0_{jmk} x^j x^k / r needs time-space
  // Riemann components, which vanish for every tensor this type houses.
  return sol;
}

PotentialSolution uniform_b_potential(const PhysicalContext&,
                                      const CurvatureTensor& curv, double B0) {
  if (B0 < 0.0)
    throw Error(ErrorCode::invalid_argument, "B0 must be non-negative");
  PotentialSolution sol;
  sol.source_label = SourceLabel::uniform_B;

  // flat symmetric gauge (-y/2, x/2, 0) * B0
  VectorTerm flat;
  flat.coeff = B0;
  flat.components[0] = PolyField::monomial(0, 1, 0, BigRat(-1, 2));
  flat.components[1] = PolyField::monomial(1, 0, 0, BigRat(1, 2));
  sol.a_terms.push_back(flat);

  // curvature correction: lap(A1) = c (y, -x, 0),
  // c = (B0/6)(3 R^2_002 + 2 R^1_212) with R^2_002 = -R_{0202}.
  const double coupling = -3.0 * curv.r0i0j[1] + 2.0 * curv.r1212;
  VectorTerm corr;
  corr.coeff = B0 / 6.0 * coupling;
  // (y^3/3 - x^2 y / 2, -x^3/3 + x y^2 / 2, 0): divergence-free and
  // lap = (y, -x, 0) exactly. The printed cubic is harmonic; the y^3
  // coefficient is kept and the mixed term adjusted to carry the source.
  corr.components[0] = PolyField::monomial(0, 3, 0, BigRat(1, 3)) +
                       PolyField::monomial(2, 1, 0, BigRat(-1, 2));
  corr.components[1] = PolyField::monomial(3, 0, 0, BigRat(-1, 3)) +
                       PolyField::monomial(1, 2, 0, BigRat(1, 2));
  corr.source[0] = PolyField::monomial(0, 1, 0, 1);
  corr.source[1] = PolyField::monomial(1, 0, 0, -1);
  sol.a_terms.push_back(corr);
  return sol;
}

PotentialSolution uniform_e_potential(const PhysicalContext&,
                                      const CurvatureTensor& curv, double E0) {
  if (E0 < 0.0)
    throw Error(ErrorCode::invalid_argument, "E0 must be non-negative");
  PotentialSolution sol;
  sol.source_label = SourceLabel::dipole_pair_E;
  sol.a0_terms.push_back({-E0, 0, PolyField::monomial(0, 0, 1, 1)});
  for (int i = 0; i < 3; ++i) {
    PolyField xi2z = PolyField::monomial(i == 0 ? 2 : 0, i == 1 ? 2 : 0,
                                         i == 2 ? 3 : 1, 1);
    sol.a0_terms.push_back({-E0 / 4.0 * curv.r0i0j[i], 0, xi2z});
  }
  return sol;
}

}  // namespace gratom
