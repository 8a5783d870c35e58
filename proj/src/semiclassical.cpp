#include "gratom/semiclassical.hpp"

#include <cmath>
#include <limits>

#include "gratom/errors.hpp"

namespace gratom {

namespace {

struct OrbitEquation {
  double n;
  double b;   // e B0 / (2 c hbar)
  double c1;  // m Q e / hbar^2
  double c3;  // m Q e R / (4 hbar^2)
  double c4;  // m^2 c^2 R / hbar^2 + b^2

  double residual(double rho) const {
    const double lhs = n - b * rho * rho;
    return lhs * lhs - c1 * rho - c3 * rho * rho * rho -
           c4 * rho * rho * rho * rho;
  }
  double max_term(double rho) const {
    const double lhs = n - b * rho * rho;
    double m = std::abs(lhs * lhs);
    m = std::max(m, std::abs(c1 * rho));
    m = std::max(m, std::abs(c3 * rho * rho * rho));
    m = std::max(m, std::abs(c4 * rho * rho * rho * rho));
    return std::max(m, 1.0);
  }
  double derivative(double rho) const {
    const double lhs = n - b * rho * rho;
    return -4.0 * b * rho * lhs - c1 - 3.0 * c3 * rho * rho -
           4.0 * c4 * rho * rho * rho;
  }
};

// Newton polished by bisection inside a bracket around the seed.
double polish_root(const OrbitEquation& eq, double seed, double lo, double hi) {
  // widen around the seed until a sign change is found
  double a = std::max(lo, seed * 0.5), b = std::min(hi, seed * 2.0);
  double fa = eq.residual(a), fb = eq.residual(b);
  int tries = 0;
  while (fa * fb > 0.0 && tries++ < 60) {
    a = std::max(lo, a * 0.7);
    b = std::min(hi, b * 1.4);
    fa = eq.residual(a);
    fb = eq.residual(b);
    if (a <= lo && b >= hi) break;
  }
  if (fa * fb > 0.0)
    throw Error(ErrorCode::no_root,
                "no sign change inside the orbit-radius bracket");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = eq.residual(mid);
    if (fm == 0.0) return mid;
    if (fa * fm < 0.0) {
      b = mid;
      fb = fm;
    } else {
      a = mid;
      fa = fm;
    }
  }
  double rho = 0.5 * (a + b);
  for (int it = 0; it < 50; ++it) {
    const double d = eq.derivative(rho);
    if (d == 0.0) break;
    const double step = eq.residual(rho) / d;
    const double next = rho - step;
    if (next <= a || next >= b) break;
    rho = next;
    if (std::abs(step) < 1e-16 * rho) break;
  }
  return rho;
}

}  // namespace

SemiclassicalResult orbit_radius(const PhysicalContext& ctx,
                                 const CurvatureTensor& curv, double B0, int n,
                                 std::optional<double> nuclear_charge,
                                 const std::array<int, 3>& perm) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  if (B0 < 0.0)
    throw Error(ErrorCode::invalid_argument, "B0 must be non-negative");
  const CurvatureTensor pc = permute_axes(curv, perm);
  const double Q = nuclear_charge.value_or(ctx.nuclear_charge());
  if (Q < 0.0)
    throw Error(ErrorCode::invalid_argument, "nuclear charge must be >= 0");
  const double R = pc.r0i0j[1];  // R_{0202}
  const double m = ctx.m_electron;
  const double hbar = ctx.hbar;
  const double e = ctx.e_charge;
  const double c = ctx.c;

  const double b_full = e * B0 / (2.0 * c * hbar);
  const double c1 = m * Q * e / (hbar * hbar);
  const double a_flat = (Q > 0.0) ? n * n / c1 * 1.0 : 0.0;  // n^2 hbar^2/(mQe)
  const double a_scale =
      (Q > 0.0) ? a_flat : std::sqrt(n / std::max(b_full, 1e-300));
  const double lo = 1e-3 * a_scale, hi = 1e3 * a_scale;

  double rho;
  OrbitEquation eq{double(n), b_full, c1, 0.0, 0.0};
  if (Q > 0.0) {
    rho = a_flat;
    const int steps = 8;
    for (int k = 1; k <= steps; ++k) {
      const double t = double(k) / steps;
      const double bt = t * b_full;
      const double Rt = t * R;
      eq = OrbitEquation{double(n), bt, c1, m * Q * e * Rt / (4.0 * hbar * hbar),
                         m * m * c * c * Rt / (hbar * hbar) + bt * bt};
      rho = polish_root(eq, rho, lo, hi);
    }
  } else {
    if (B0 <= 0.0)
      throw Error(ErrorCode::no_root,
                  "no bound orbit with Q = 0 and B0 = 0");
    // free charge: start from the flat Landau radius, continue in R
    rho = std::sqrt(n / b_full / 2.0);
    const int steps = 8;
    for (int k = 0; k <= steps; ++k) {
      const double Rt = R * double(k) / steps;
      eq = OrbitEquation{double(n), b_full, 0.0, 0.0,
                         m * m * c * c * Rt / (hbar * hbar) +
                             b_full * b_full};
      rho = polish_root(eq, rho, lo, hi);
    }
  }
  SemiclassicalResult res;
  res.n = n;
  res.rho = rho;
  res.v = n * hbar / (m * rho);
  res.r_a = curvature_radius(ctx, pc);
  res.residual = std::abs(eq.residual(rho)) / eq.max_term(rho);
  if (res.residual > 1e-12)
    throw Error(ErrorCode::no_root,
                "orbit-radius residual above 1e-12 after continuation");
  return res;
}

double curvature_radius(const PhysicalContext& ctx,
                        const CurvatureTensor& curv) {
  const double R = curv.r0i0j[1];  // R_{0202}
  if (R <= 0.0) return std::numeric_limits<double>::infinity();
  const double Q = ctx.nuclear_charge();
  return std::cbrt(4.0 * ctx.hbar * ctx.hbar /
                   (3.0 * ctx.m_electron * Q * ctx.e_charge * std::abs(R)));
}

}  // namespace gratom
