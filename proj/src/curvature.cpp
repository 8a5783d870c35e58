#include "gratom/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gratom/errors.hpp"

namespace gratom {

double CurvatureTensor::spatial(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 2) return r1212;
  if (i == 1 && j == 3) return r1313;
  if (i == 2 && j == 3) return r2323;
  throw Error(ErrorCode::invalid_argument, "bad spatial index pair");
}

double CurvatureTensor::max_abs() const {
  double m = 0.0;
  for (double v : r0i0j) m = std::max(m, std::abs(v));
  m = std::max({m, std::abs(r1212), std::abs(r1313), std::abs(r2323)});
  return m;
}

double CurvatureTensor::ricci00() const {
  return r0i0j[0] + r0i0j[1] + r0i0j[2];
}

std::array<double, 3> CurvatureTensor::ricci_spatial_diag() const {
  // R_jj = -R_{0j0j} + sum_{i != j} R_{ijij} in the orthonormal frame
  std::array<double, 3> out{};
  for (int j = 1; j <= 3; ++j) {
    double v = -r0i0j[j - 1];
    for (int i = 1; i <= 3; ++i)
      if (i != j) v += spatial(i, j);
    out[j - 1] = v;
  }
  return out;
}

double CurvatureTensor::ricci_scalar() const {
  const auto d = ricci_spatial_diag();
  return -ricci00() + d[0] + d[1] + d[2];
}

double CurvatureTensor::riemann(int a, int b, int c, int d) const {
  if (a == b || c == d) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  if (c > d) {
    std::swap(c, d);
    sign = -sign;
  }
  if (a != c || b != d) return 0.0;  // only diagonal pair components stored
  if (a == 0) return sign * r0i0j[b - 1];
  return sign * spatial(a, b);
}

CurvatureTensor permute_axes(const CurvatureTensor& curv,
                             const std::array<int, 3>& perm) {
  bool seen[4] = {false, false, false, false};
  for (int p : perm) {
    if (p < 1 || p > 3 || seen[p])
      throw Error(ErrorCode::invalid_argument,
                  "axis permutation must be a permutation of {1,2,3}");
    seen[p] = true;
  }
  CurvatureTensor out;
  out.mode = curv.mode;
  for (int i = 0; i < 3; ++i) out.r0i0j[i] = curv.r0i0j[perm[i] - 1];
  out.r1212 = curv.spatial(perm[0], perm[1]);
  out.r1313 = curv.spatial(perm[0], perm[2]);
  out.r2323 = curv.spatial(perm[1], perm[2]);
  return out;
}

CurvatureTensor schwarzschild_curvature(const PhysicalContext& ctx, double M,
                                        double r, CurvatureMode mode) {
  if (M < 0.0) throw Error(ErrorCode::invalid_argument, "mass must be non-negative");
  if (r <= 0.0) throw Error(ErrorCode::invalid_argument, "radius must be positive");
  const double rs = ctx.schwarzschild_radius(M);
  if (M > 0.0 && r <= rs)
    throw Error(ErrorCode::horizon,
                "r inside or at the horizon: r = " + std::to_string(r) +
                    " cm, r_s = " + std::to_string(rs) + " cm");
  CurvatureTensor t;
  t.mode = mode;
  if (M == 0.0) return t;
  const double GM = ctx.G * M;
  const double c2 = ctx.c * ctx.c;
  if (mode == CurvatureMode::leading_orthonormal) {
    const double kappa = GM / (c2 * r * r * r);
    t.r0i0j = {-2.0 * kappa, kappa, kappa};
    t.r1212 = -kappa;
    t.r1313 = -kappa;
    t.r2323 = 2.0 * kappa;
  } else {
    // closed forms in the coordinate basis (mixed indices as printed);
    // R3232 is dimensionless, R1212/R1313 carry the metric factor.
    const double r1010 = 2.0 * GM * (2.0 * GM - r * c2) / (c2 * c2 * r * r * r * r);
    t.r0i0j = {r1010, -0.5 * r1010, -0.5 * r1010};
    t.r2323 = 2.0 * GM / (c2 * r);
    t.r1212 = GM / (r * r * (2.0 * GM - r * c2));
    t.r1313 = t.r1212;
  }
  return t;
}

namespace {

void check_regime(const CurvatureTensor& curv, const std::array<double, 3>& x) {
  const double xn = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  const double p = xn * std::sqrt(curv.max_abs());
  if (p >= 1.0)
    throw Error(ErrorCode::regime,
                "point outside the normal-coordinate expansion regime: "
                "|x| sqrt(max|R|) = " +
                    std::to_string(p));
}

double det4(const double g[4][4]) {
  double a[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = g[i][j];
  double det = 1.0;
  for (int k = 0; k < 4; ++k) {
    int piv = k;
    for (int i = k + 1; i < 4; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (piv != k) {
      for (int j = 0; j < 4; ++j) std::swap(a[k][j], a[piv][j]);
      det = -det;
    }
    if (a[k][k] == 0.0) return 0.0;
    det *= a[k][k];
    for (int i = k + 1; i < 4; ++i) {
      const double f = a[i][k] / a[k][k];
      for (int j = k; j < 4; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace

MetricSample rnc_metric(const CurvatureTensor& curv,
                        const std::array<double, 3>& x) {
  check_regime(curv, x);
  MetricSample s;
  double q00 = 0.0;
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= 3; ++k)
      q00 += curv.riemann(0, l, 0, k) * x[l - 1] * x[k - 1];
  s.g00 = -1.0 - q00;
  for (int i = 1; i <= 3; ++i) {
    double v = 0.0;
    for (int l = 1; l <= 3; ++l)
      for (int k = 1; k <= 3; ++k)
        v += curv.riemann(0, l, i, k) * x[l - 1] * x[k - 1];
    s.g0i[i - 1] = -(2.0 / 3.0) * v;
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      double v = 0.0;
      for (int l = 1; l <= 3; ++l)
        for (int k = 1; k <= 3; ++k)
          v += curv.riemann(i, l, j, k) * x[l - 1] * x[k - 1];
      s.gij[i - 1][j - 1] = (i == j ? 1.0 : 0.0) - v / 3.0;
    }
  double g[4][4];
  g[0][0] = s.g00;
  for (int i = 1; i <= 3; ++i) {
    g[0][i] = g[i][0] = s.g0i[i - 1];
    for (int j = 1; j <= 3; ++j) g[i][j] = s.gij[i - 1][j - 1];
  }
  s.det_g = det4(g);
  return s;
}

ConnectionSample rnc_connections(const CurvatureTensor& curv,
                                 const std::array<double, 3>& x) {
  check_regime(curv, x);
  ConnectionSample s{};
  // Gamma^0_{0i} = Gamma^i_{00} = R_{0i0k} x^k
  for (int i = 1; i <= 3; ++i) {
    double v = 0.0;
    for (int k = 1; k <= 3; ++k) v += curv.riemann(0, i, 0, k) * x[k - 1];
    s.gamma[0][0][i] = s.gamma[0][i][0] = v;
    s.gamma[i][0][0] = v;
  }
  // Gamma^0_{ij} = (1/3)(R_{0ijk} + R_{0jik}) x^k
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      double v = 0.0;
      for (int k = 1; k <= 3; ++k)
        v += (curv.riemann(0, i, j, k) + curv.riemann(0, j, i, k)) * x[k - 1];
      s.gamma[0][i][j] = v / 3.0;
    }
  // Gamma^i_{0j} = R_{0kji} x^k
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      double v = 0.0;
      for (int k = 1; k <= 3; ++k) v += curv.riemann(0, k, j, i) * x[k - 1];
      s.gamma[i][0][j] = s.gamma[i][j][0] = v;
    }
  // Gamma^i_{jk} = (1/3)(R_{jikl} + R_{kijl}) x^l
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        double v = 0.0;
        for (int l = 1; l <= 3; ++l)
          v += (curv.riemann(j, i, k, l) + curv.riemann(k, i, j, l)) * x[l - 1];
        s.gamma[i][j][k] = v / 3.0;
      }
  return s;
}

}  // namespace gratom
