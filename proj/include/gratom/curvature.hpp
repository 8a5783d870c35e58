#ifndef GRATOM_CURVATURE_HPP_
#define GRATOM_CURVATURE_HPP_

#include <array>

#include "gratom/units.hpp"

namespace gratom {

enum class CurvatureMode { exact_printed, leading_orthonormal };

/// Nonvanishing Riemann components of a static, axially symmetric
/// vacuum-type background at the atom's location. Index 0 is time,
/// spatial axes 1..3 with axis 1 the special (radial) axis by the
/// Schwarzschild convention.
struct CurvatureTensor {
  // R_{0101}, R_{0202}, R_{0303}  (cm^-2 in leading_orthonormal mode)
  std::array<double, 3> r0i0j{};
  // purely spatial pair components
  double r1212 = 0.0;
  double r1313 = 0.0;
  double r2323 = 0.0;
  CurvatureMode mode = CurvatureMode::leading_orthonormal;

  double spatial(int i, int j) const;  // R_{ijij}, 1 <= i < j <= 3
  double max_abs() const;

  // Ricci pieces derived from the stored components (orthonormal frame).
  double ricci00() const;  // R_{00} = sum_i R_{0i0i}
  std::array<double, 3> ricci_spatial_diag() const;
  double ricci_scalar() const;

  // Full R_{abcd} (a..d in 0..3) reconstructed through the tensor
  // symmetries; components outside the stored patterns are zero.
  double riemann(int a, int b, int c, int d) const;
};

inline constexpr std::array<int, 3> kIdentityPerm{1, 2, 3};

/// Relabel spatial axes: new axis i carries old axis perm[i-1].
CurvatureTensor permute_axes(const CurvatureTensor& curv,
                             const std::array<int, 3>& perm);

/// Schwarzschild components at radius r.
///  - exact_printed: the closed forms in the coordinate basis,
///    e.g. R^1_010 = 2GM(2GM - r c^2)/(c^4 r^4).
///  - leading_orthonormal: local orthonormal-frame values to leading
///    order in r_s/r, axis 1 radial.
CurvatureTensor schwarzschild_curvature(const PhysicalContext& ctx, double M,
                                        double r,
                                        CurvatureMode mode =
                                            CurvatureMode::leading_orthonormal);

struct MetricSample {
  double g00;
  std::array<double, 3> g0i;
  std::array<std::array<double, 3>, 3> gij;
  double det_g;
};

struct ConnectionSample {
  // gamma[upper][lower1][lower2]
  double gamma[4][4][4];
  double at(int upper, int lower1, int lower2) const {
    return gamma[upper][lower1][lower2];
  }
};

/// Riemann-normal-coordinate metric at local point x, first order in R.
/// Requires |x| sqrt(max|R|) < 1.
MetricSample rnc_metric(const CurvatureTensor& curv,
                        const std::array<double, 3>& x);

/// Affine connections at local point x, linear in x.
ConnectionSample rnc_connections(const CurvatureTensor& curv,
                                 const std::array<double, 3>& x);

}  // namespace gratom

#endif  // GRATOM_CURVATURE_HPP_
