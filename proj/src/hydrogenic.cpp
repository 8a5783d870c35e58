#include "gratom/hydrogenic.hpp"

#include <cmath>
#include <vector>

#include "gratom/errors.hpp"
#include "gratom/exact.hpp"

namespace gratom {

void validate_state(const AtomState& state) {
  if (state.n < 1)
    throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  if (state.l < 0 || state.l >= state.n)
    throw Error(ErrorCode::invalid_argument, "l must satisfy 0 <= l < n");
  if (std::abs(state.m_l) > state.l)
    throw Error(ErrorCode::invalid_argument, "|m_l| must be <= l");
}

double flat_energy(const PhysicalContext& ctx, int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  return -ctx.nuclear_charge() * ctx.e_charge /
         (2.0 * ctx.bohr_radius() * n * n);
}

double radial_expectation(const PhysicalContext& ctx, const AtomState& state,
                          int k) {
  validate_state(state);
  if (k < -2 || k > 3)
    throw Error(ErrorCode::unsupported, "radial moment k outside [-2, 3]");
  const double a = ctx.bohr_radius();
  const double n = state.n;
  const double ll1 = double(state.l) * (state.l + 1);
  switch (k) {
    case 0:
      return 1.0;
    case -1:
      return 1.0 / (a * n * n);
    case -2:
      return 1.0 / (a * a * n * n * n * (state.l + 0.5));
    case 1:
      return 0.5 * a * (3.0 * n * n - ll1);
    case 2:
      return 0.5 * a * a * n * n * (5.0 * n * n + 1.0 - 3.0 * ll1);
    case 3: {
      // Kramers recursion at k = 3 solved for <r^3>
      const double r1 = 0.5 * a * (3.0 * n * n - ll1);
      const double r2 = 0.5 * a * a * n * n * (5.0 * n * n + 1.0 - 3.0 * ll1);
      const double twol1 = 2.0 * state.l + 1.0;
      return (n * n / 4.0) *
             (7.0 * a * r2 - 0.75 * (twol1 * twol1 - 9.0) * a * a * r1);
    }
  }
  return 0.0;  // unreachable
}

namespace {

// Exact-rational coefficients of the associated Laguerre polynomial
// L^{2l+1}_{n-l-1}, rendered to double at the end.
std::vector<double> laguerre_coeffs(int n, int l) {
  const int kmax = n - l - 1;
  const int alpha = 2 * l + 1;
  std::vector<double> out(kmax + 1);
  BigInt fact_i = 1;
  for (int i = 0; i <= kmax; ++i) {
    if (i > 0) fact_i *= i;
    // binom(kmax + alpha, kmax - i)
    BigInt b = 1;
    for (int j = 0; j < kmax - i; ++j) b *= (kmax + alpha - j);
    BigInt bd = 1;
    for (int j = 2; j <= kmax - i; ++j) bd *= j;
    BigRat c(b, bd * fact_i);
    if (i % 2) c = -c;
    out[i] = c.convert_to<double>();
  }
  return out;
}

double radial_norm(const PhysicalContext& ctx, int n, int l) {
  const double a = ctx.bohr_radius();
  double lf = 1.0;  // (n-l-1)!/(2n (n+l)!)
  BigInt num = 1, den = 1;
  for (int i = 2; i <= n - l - 1; ++i) num *= i;
  for (int i = 2; i <= n + l; ++i) den *= i;
  den *= 2 * n;
  lf = BigRat(num, den).convert_to<double>();
  return std::sqrt(std::pow(2.0 / (n * a), 3) * lf);
}

struct GaussLegendre {
  std::vector<double> x, w;  // nodes/weights on [-1, 1]
  explicit GaussLegendre(int npts) {
    x.resize(npts);
    w.resize(npts);
    const int m = (npts + 1) / 2;
    for (int i = 0; i < m; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (npts + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p1 = 1.0, p2 = 0.0;
        for (int j = 0; j < npts; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
        }
        pp = npts * (z * p1 - p2) / (z * z - 1.0);
        const double z1 = z;
        z = z1 - p1 / pp;
        if (std::abs(z - z1) < 1e-15) break;
      }
      x[i] = -z;
      x[npts - 1 - i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
      w[npts - 1 - i] = w[i];
    }
  }
};

double integrate_product(const PhysicalContext& ctx, int n, int l1, int l2,
                         int k, int panels) {
  static const GaussLegendre gl(16);
  const double a = ctx.bohr_radius();
  const double r_max = 40.0 * n * n * a;
  const auto c1 = laguerre_coeffs(n, l1);
  const auto c2 = laguerre_coeffs(n, l2);
  const double n1 = radial_norm(ctx, n, l1);
  const double n2 = radial_norm(ctx, n, l2);
  const double h = r_max / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    double acc = 0.0;
    for (size_t q = 0; q < gl.x.size(); ++q) {
      const double r = mid + 0.5 * h * gl.x[q];
      if (r <= 0.0) continue;
      const double rho = 2.0 * r / (n * a);
      double L1 = 0.0, L2 = 0.0, rp = 1.0;
      for (size_t i = 0; i < std::max(c1.size(), c2.size()); ++i) {
        if (i < c1.size()) L1 += c1[i] * rp;
        if (i < c2.size()) L2 += c2[i] * rp;
        rp *= rho;
      }
      const double R1 = n1 * std::pow(rho, l1) * L1 * std::exp(-0.5 * rho);
      const double R2 = n2 * std::pow(rho, l2) * L2 * std::exp(-0.5 * rho);
      acc += gl.w[q] * R1 * R2 * std::pow(r, k + 2);
    }
    sum += 0.5 * h * acc;
  }
  return sum;
}

double converged_integral(const PhysicalContext& ctx, int n, int l1, int l2,
                          int k) {
  const double scale = std::pow(n * n * ctx.bohr_radius(), k);
  const int base_panels = 128;  // 2048 nodes
  const double coarse = integrate_product(ctx, n, l1, l2, k, base_panels);
  const double fine = integrate_product(ctx, n, l1, l2, k, 2 * base_panels);
  if (std::abs(fine - coarse) > 1e-9 * std::max(std::abs(fine), scale))
    throw Error(ErrorCode::nonconvergence,
                "radial quadrature did not converge under node doubling");
  return fine;
}

}  // namespace

double radial_expectation_quadrature(const PhysicalContext& ctx,
                                     const AtomState& state, int k) {
  validate_state(state);
  if (k < -2)
    throw Error(ErrorCode::unsupported, "radial moment k below -2");
  return converged_integral(ctx, state.n, state.l, state.l, k);
}

double radial_cross_moment(const PhysicalContext& ctx, int n, int l1, int l2,
                           int k) {
  validate_state(AtomState{n, l1, 0});
  validate_state(AtomState{n, l2, 0});
  if (k < -2)
    throw Error(ErrorCode::unsupported, "radial moment k below -2");
  return converged_integral(ctx, n, l1, l2, k);
}

}  // namespace gratom
