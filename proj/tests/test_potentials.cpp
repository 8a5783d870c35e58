#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gratom/potentials.hpp"

using namespace gratom;

namespace {

const PhysicalContext ctx = make_context(UnitSystem::gaussian_cgs);
const double kMSun = 1.98892e33;

CurvatureTensor nonvacuum() {
  CurvatureTensor t;
  t.r0i0j = {2e-4, -1e-4, 3e-4};  // trace 4e-4: synthetic matter source
  t.r1212 = 1e-4;
  t.r1313 = -2e-4;
  t.r2323 = 5e-4;
  return t;
}

}  // namespace

TEST_CASE("nuclear potential in Schwarzschild vacuum: Coulomb + traceless quadrupole") {
  const auto curv = schwarzschild_curvature(ctx, kMSun, 6.96e10);
  const double Q = ctx.nuclear_charge();
  const auto sol = nuclear_potential(ctx, curv, Q);
  CHECK(sol.source_label == SourceLabel::nucleus);
  CHECK(sol.a_terms.empty());
  REQUIRE(sol.a0_terms.size() == 5);
  CHECK(sol.a0_terms[0].coeff == doctest::Approx(-Q));
  CHECK(sol.a0_terms[0].r_power == -1);
  const double scale = Q * curv.max_abs();
  // vacuum Ricci kills the linear-in-r term ...
  CHECK(std::fabs(sol.a0_terms[1].coeff) <= 1e-12 * scale);
  // ... while the per-axis piece survives as (Q/4) R_{0j0j} x_j^2 / r,
  // traceless with the Schwarzschild -2 : 1 : 1 pattern
  double tracesum = 0.0;
  for (int j = 0; j < 3; ++j) {
    CHECK(sol.a0_terms[2 + j].coeff ==
          doctest::Approx(0.25 * Q * curv.r0i0j[j]).epsilon(1e-12));
    tracesum += sol.a0_terms[2 + j].coeff;
  }
  CHECK(std::fabs(tracesum) <= 1e-12 * scale);
  // the quadrupole correction is ~1e-27 of Coulomb at the Bohr radius
  const double r0 = 3.7e-8;
  CHECK(sol.a0_eval(r0, 0.0, 0.0) == doctest::Approx(-Q / r0).epsilon(1e-12));
}

TEST_CASE("nuclear potential carries the Ricci terms off vacuum") {
  const auto curv = nonvacuum();
  const double Q = 1.0;
  const auto sol = nuclear_potential(ctx, curv, Q);
  const double ricci = curv.ricci_scalar() + 4.0 * curv.ricci00();
  CHECK(sol.a0_terms[1].coeff == doctest::Approx(Q / 12.0 * ricci));
  CHECK(sol.a0_terms[1].r_power == 1);
  const auto rjj = curv.ricci_spatial_diag();
  for (int j = 0; j < 3; ++j) {
    CHECK(sol.a0_terms[2 + j].coeff ==
          doctest::Approx(Q / 12.0 * (3.0 * curv.r0i0j[j] - rjj[j])));
    CHECK(sol.a0_terms[2 + j].r_power == -1);
  }
}

TEST_CASE("uniform B: flat part carries curl B0 along axis 3") {
  const auto curv = schwarzschild_curvature(ctx, kMSun, 6.96e10);
  const double B0 = 1e-3;
  const auto sol = uniform_b_potential(ctx, curv, B0);
  REQUIRE(sol.a_terms.size() == 2);
  const auto& flat = sol.a_terms[0];
  CHECK(flat.coeff == doctest::Approx(B0));
  // curl_z = d(A_y)/dx - d(A_x)/dy = 1 for the unit-coefficient pattern
  const PolyField curl_z =
      flat.components[1].derivative(0) - flat.components[0].derivative(1);
  CHECK(curl_z == PolyField::constant(BigRat(1)));
  CHECK(flat.components[2].is_zero());
  for (const auto& s : flat.source) CHECK(s.is_zero());
}

TEST_CASE("uniform B: correction solves its Poisson problem exactly") {
  const auto curv = schwarzschild_curvature(ctx, kMSun, 6.96e10);
  const auto sol = uniform_b_potential(ctx, curv, 2.5);
  const auto& corr = sol.a_terms[1];
  // exact rational identity, zero tolerance
  for (int i = 0; i < 3; ++i)
    CHECK(corr.components[i].laplacian() == corr.source[i]);
  // Coulomb gauge holds term by term
  CHECK(divergence(sol.a_terms[0].components).is_zero());
  CHECK(divergence(corr.components).is_zero());
  // coupling constant (B0/6)(-3 R_0202 + 2 R_1212)
  CHECK(corr.coeff ==
        doctest::Approx(2.5 / 6.0 *
                        (-3.0 * curv.r0i0j[1] + 2.0 * curv.r1212))
            .epsilon(1e-14));
}

TEST_CASE("uniform B: correction vanishes in the flat limit") {
  const auto flat = schwarzschild_curvature(ctx, 0.0, 1.0);
  const auto sol = uniform_b_potential(ctx, flat, 1.0);
  CHECK(sol.a_terms[1].coeff == 0.0);
}

TEST_CASE("uniform E: scalar potential and its curvature cubic") {
  const auto curv = schwarzschild_curvature(ctx, kMSun, 6.96e10);
  const double E0 = 0.7;
  const auto sol = uniform_e_potential(ctx, curv, E0);
  CHECK(sol.a_terms.empty());
  const double x = 1e-9, y = -2e-9, z = 3e-9;
  const double want =
      -E0 * z - E0 / 4.0 *
                    (curv.r0i0j[0] * x * x + curv.r0i0j[1] * y * y +
                     curv.r0i0j[2] * z * z) *
                    z;
  CHECK(sol.a0_eval(x, y, z) == doctest::Approx(want).epsilon(1e-14));
  // flat limit is exactly -E0 z
  const auto fsol =
      uniform_e_potential(ctx, schwarzschild_curvature(ctx, 0.0, 1.0), E0);
  CHECK(fsol.a0_eval(x, y, z) == doctest::Approx(-E0 * z).epsilon(1e-15));
}

TEST_CASE("negative field strengths are rejected") {
  const auto curv = schwarzschild_curvature(ctx, 0.0, 1.0);
  CHECK_THROWS(uniform_b_potential(ctx, curv, -1.0));
  CHECK_THROWS(uniform_e_potential(ctx, curv, -1.0));
}
