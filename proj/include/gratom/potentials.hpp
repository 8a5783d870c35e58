#ifndef GRATOM_POTENTIALS_HPP_
#define GRATOM_POTENTIALS_HPP_

#include <vector>

#include "gratom/curvature.hpp"
#include "gratom/polyfield.hpp"

namespace gratom {

enum class SourceLabel { nucleus, uniform_B, dipole_pair_E };

/// Scalar-potential term coeff * r^p * poly(x). 1/r factors live in the
/// r_power tag because they are not polynomial.
struct ScalarTerm {
  double coeff = 0.0;
  int r_power = 0;
  PolyField poly;
  double eval(double x, double y, double z) const;
};

/// Vector-potential contribution coeff * poly(x) per component, with the
/// polynomial the contribution's flat Laplacian must reproduce (zero for
/// harmonic/flat pieces).
struct VectorTerm {
  double coeff = 0.0;
  std::array<PolyField, 3> components;
  std::array<PolyField, 3> source;
};

struct PotentialSolution {
  std::vector<ScalarTerm> a0_terms;
  std::vector<VectorTerm> a_terms;
  SourceLabel source_label;
  double a0_eval(double x, double y, double z) const;
};

/// Point-nucleus solution of the curvature-deformed Maxwell equations:
/// the flat Coulomb piece plus the Ricci and Riemann corrections. The
/// Ricci-bearing terms are kept for general curvature input and vanish
/// for Schwarzschild vacuum.
PotentialSolution nuclear_potential(const PhysicalContext& ctx,
                                    const CurvatureTensor& curv, double Q);

/// Uniform magnetic field B0 along local axis 3: flat symmetric gauge
/// plus the cubic curvature correction solving
/// lap(A1_i) = (B0/6)(3 R^2_002 + 2 R^1_212) eps_{ij3} x^j in Coulomb
/// gauge.
PotentialSolution uniform_b_potential(const PhysicalContext& ctx,
                                      const CurvatureTensor& curv, double B0);

/// Uniform electric field E0 along local axis 3 from the dipole-pair
/// construction taken in the infinite-separation limit:
/// A0 = -E0 z - (E0/4) R_{0i0j} x^i x^j z.
PotentialSolution uniform_e_potential(const PhysicalContext& ctx,
                                      const CurvatureTensor& curv, double E0);

}  // namespace gratom

#endif  // GRATOM_POTENTIALS_HPP_
