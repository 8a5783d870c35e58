#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "gratom/errors.hpp"
#include "gratom/semiclassical.hpp"

using namespace gratom;

namespace {

const PhysicalContext ctx = make_context(UnitSystem::gaussian_cgs);
const double kMSun = 1.98892e33;
const double kRSun = 6.96e10;

// Durand-Kerner roots of sum_k c[k] x^k (c.back() != 0).
std::vector<std::complex<double>> poly_roots(std::vector<double> c) {
  const int deg = static_cast<int>(c.size()) - 1;
  for (auto& v : c) v /= c[deg];
  auto eval = [&](std::complex<double> x) {
    std::complex<double> p = 0.0;
    for (int k = deg; k >= 0; --k) p = p * x + c[k];
    return p;
  };
  std::vector<std::complex<double>> r(deg);
  for (int i = 0; i < deg; ++i)
    r[i] = std::pow(std::complex<double>(0.4, 0.9), i);
  for (int it = 0; it < 500; ++it) {
    double move = 0.0;
    for (int i = 0; i < deg; ++i) {
      std::complex<double> d = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) d *= r[i] - r[j];
      const std::complex<double> step = eval(r[i]) / d;
      r[i] -= step;
      move = std::max(move, std::abs(step));
    }
    if (move < 1e-15) break;
  }
  return r;
}

}  // namespace

TEST_CASE("flat limit recovers the Bohr radius") {
  const auto flat = schwarzschild_curvature(ctx, 0.0, 1.0);
  for (int n : {1, 2, 5}) {
    const auto res = orbit_radius(ctx, flat, 0.0, n);
    CHECK(res.rho ==
          doctest::Approx(n * n * ctx.bohr_radius()).epsilon(1e-10));
    // v = Z e^2 / (n hbar)
    CHECK(res.v == doctest::Approx(ctx.e_charge * ctx.e_charge /
                                   (n * ctx.hbar))
                       .epsilon(1e-10));
    CHECK(res.residual < 1e-12);
    CHECK(std::isinf(res.r_a));
  }
}

TEST_CASE("free charge in a pure magnetic field sits on the Landau radius") {
  const auto flat = schwarzschild_curvature(ctx, 0.0, 1.0);
  const double B0 = 1e4;
  for (int n : {1, 2, 3}) {
    const auto res = orbit_radius(ctx, flat, B0, n, 0.0);
    const double want =
        std::sqrt(n * ctx.c * ctx.hbar / (ctx.e_charge * B0));
    CHECK(res.rho == doctest::Approx(want).epsilon(1e-10));
    CHECK(res.residual < 1e-12);
  }
}

TEST_CASE("curvature nudges the Bohr orbit and the root stays certified") {
  const auto curv = schwarzschild_curvature(ctx, kMSun, kRSun);
  for (double B0 : {0.0, 1e-3, 1e2}) {
    for (int n : {1, 3, 10}) {
      const auto res = orbit_radius(ctx, curv, B0, n);
      CHECK(res.residual < 1e-12);
      CHECK(res.rho > 0.0);
      // curvature correction to the radius is tiny at solar-surface R
      CHECK(res.rho == doctest::Approx(n * n * ctx.bohr_radius())
                           .epsilon(B0 > 1.0 ? 1e-2 : 1e-6));
    }
  }
}

TEST_CASE("returned root matches an independent quartic solve") {
  // Synthetic curvature and field chosen so every quartic coefficient
  // contributes at O(1) after rescaling by the flat radius.
  CurvatureTensor curv;
  curv.r0i0j = {-2e10, 1e10, 1e10};
  curv.r1212 = curv.r1313 = -1e10;
  curv.r2323 = 2e10;
  const double B0 = 1e7;
  const int n = 2;
  const auto res = orbit_radius(ctx, curv, B0, n);

  const double b = ctx.e_charge * B0 / (2.0 * ctx.c * ctx.hbar);
  const double Q = ctx.nuclear_charge();
  const double R = curv.r0i0j[1];
  const double c1 = ctx.m_electron * Q * ctx.e_charge / (ctx.hbar * ctx.hbar);
  const double c3 = c1 * R / 4.0;
  const double c4 = ctx.m_electron * ctx.m_electron * ctx.c * ctx.c * R /
                        (ctx.hbar * ctx.hbar) +
                    b * b;
  // (n - b rho^2)^2 = c1 rho + c3 rho^3 + c4 rho^4, expanded in powers.
  // Scale rho by the flat Bohr radius to keep the solver conditioned.
  const double s = n * n * ctx.bohr_radius();
  std::vector<double> coeff = {
      -double(n) * n, c1 * s, 2.0 * n * b * s * s, c3 * s * s * s,
      (c4 - b * b) * s * s * s * s};
  double best = std::numeric_limits<double>::infinity();
  for (const auto& root : poly_roots(coeff)) {
    if (std::fabs(root.imag()) > 1e-8 * std::fabs(root.real())) continue;
    if (root.real() <= 0.0) continue;
    best = std::min(best, std::fabs(root.real() * s - res.rho));
  }
  CHECK(best < 1e-10 * res.rho);
}

TEST_CASE("curvature radius scaling") {
  const auto curv = schwarzschild_curvature(ctx, kMSun, kRSun);
  auto scaled = curv;
  for (auto& v : scaled.r0i0j) v *= 8.0;
  scaled.r1212 *= 8.0;
  scaled.r1313 *= 8.0;
  scaled.r2323 *= 8.0;
  const double ra = curvature_radius(ctx, curv);
  CHECK(curvature_radius(ctx, scaled) == doctest::Approx(ra / 2.0).epsilon(1e-14));
  // closed form
  const double want = std::cbrt(
      4.0 * ctx.hbar * ctx.hbar /
      (3.0 * ctx.m_electron * ctx.nuclear_charge() * ctx.e_charge *
       std::fabs(curv.r0i0j[1])));
  CHECK(ra == doctest::Approx(want).epsilon(1e-14));
  // flat space: straight-line motion marker
  const auto flat = schwarzschild_curvature(ctx, 0.0, 1.0);
  CHECK(std::isinf(curvature_radius(ctx, flat)));
}

TEST_CASE("axis permutation moves the governing component") {
  // Synthetic tensor whose curvature scale is large enough for the
  // orbit shift to register in double precision yet still leaves a
  // bound orbit in place.
  CurvatureTensor curv;
  curv.r0i0j = {-2e10, 1e10, 1e10};
  curv.r1212 = curv.r1313 = -1e10;
  curv.r2323 = 2e10;
  const auto a = orbit_radius(ctx, curv, 0.0, 1);
  CHECK(a.residual < 1e-12);
  // old axes 2 and 3 are both tangential, so relabeling (2 3 1) agrees...
  const auto b = orbit_radius(ctx, curv, 0.0, 1, std::nullopt, {2, 3, 1});
  CHECK(b.rho == doctest::Approx(a.rho).epsilon(1e-12));
  // ...while pulling the radial axis into slot 2 flips the sign of R
  const auto c = orbit_radius(ctx, curv, 0.0, 1, std::nullopt, {2, 1, 3});
  CHECK(std::fabs(c.rho - a.rho) > 1e-8 * a.rho);
}

TEST_CASE("bad inputs") {
  const auto flat = schwarzschild_curvature(ctx, 0.0, 1.0);
  CHECK_THROWS_AS(orbit_radius(ctx, flat, 0.0, 0), Error);
  CHECK_THROWS_AS(orbit_radius(ctx, flat, -1.0, 1), Error);
  // free charge with no field has no bound orbit
  CHECK_THROWS_AS(orbit_radius(ctx, flat, 0.0, 1, 0.0), Error);
}
