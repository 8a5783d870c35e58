#ifndef GRATOM_SEMICLASSICAL_HPP_
#define GRATOM_SEMICLASSICAL_HPP_

#include <optional>

#include "gratom/curvature.hpp"

namespace gratom {

struct SemiclassicalResult {
  int n;
  double rho;       // orbit radius, cm
  double v;         // orbital speed, cm/s
  double r_a;       // curvature radius, cm (+inf when R <= 0)
  double residual;  // |F(rho)| / max term
};

/// Root of the Bohr-quantized circular-orbit condition
///   (n - (e B0 / 2 c hbar) rho^2)^2 =
///     (m Q e / hbar^2) rho + (m Q e R / 4 hbar^2) rho^3
///     + (m^2 c^2 R / hbar^2 + e^2 B0^2 / 4 c^2 hbar^2) rho^4,
/// R = R_{0202} of the permuted tensor. The physical root is continued
/// from the flat Bohr radius n^2 a as (R, B0) are switched on in 8
/// homotopy steps. `nuclear_charge` overrides Q = Z e; passing 0 selects
/// the free-charge (Landau) branch.
SemiclassicalResult orbit_radius(const PhysicalContext& ctx,
                                 const CurvatureTensor& curv, double B0, int n,
                                 std::optional<double> nuclear_charge = {},
                                 const std::array<int, 3>& perm = kIdentityPerm);

/// r_a = (4 hbar^2 / (3 m Q e |R|))^{1/3}; +inf for R <= 0 (motion on
/// the straight line).
double curvature_radius(const PhysicalContext& ctx,
                        const CurvatureTensor& curv);

}  // namespace gratom

#endif  // GRATOM_SEMICLASSICAL_HPP_
