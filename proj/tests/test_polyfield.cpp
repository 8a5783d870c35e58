#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gratom/polyfield.hpp"

using namespace gratom;

namespace {

PolyField random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> ed(0, 3), cd(-6, 6), nd(1, 4);
  PolyField p;
  const int nterms = nd(rng);
  for (int t = 0; t < nterms; ++t) {
    int num = cd(rng);
    int den = 1 + std::abs(cd(rng));
    p.add_term({ed(rng), ed(rng), ed(rng)}, BigRat(num, den));
  }
  return p;
}

}  // namespace

TEST_CASE("canonical form drops zero terms") {
  PolyField p = PolyField::monomial(1, 0, 0, BigRat(2));
  p.add_term({1, 0, 0}, BigRat(-2));
  CHECK(p.is_zero());
  CHECK((PolyField::constant(BigRat(0))).is_zero());
  CHECK((p + PolyField()).is_zero());
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const PolyField p = random_poly(rng), q = random_poly(rng),
                    r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p - q) + q == p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p.scaled(BigRat(3, 2)).scaled(BigRat(2, 3)) == p);
  }
}

TEST_CASE("derivative satisfies the product rule exactly") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    const PolyField p = random_poly(rng), q = random_poly(rng);
    for (int axis = 0; axis < 3; ++axis)
      CHECK((p * q).derivative(axis) ==
            p.derivative(axis) * q + p * q.derivative(axis));
  }
}

TEST_CASE("laplacian hand cases") {
  // harmonic: x^2 - y^2, x y z
  const PolyField h = PolyField::monomial(2, 0, 0, BigRat(1)) -
                      PolyField::monomial(0, 2, 0, BigRat(1));
  CHECK(h.laplacian().is_zero());
  CHECK(PolyField::monomial(1, 1, 1, BigRat(1)).laplacian().is_zero());
  // lap(x^2 y) = 2 y
  CHECK(PolyField::monomial(2, 1, 0, BigRat(1)).laplacian() ==
        PolyField::monomial(0, 1, 0, BigRat(2)));
  // lap(r^2) = 6
  PolyField r2;
  r2.add_term({2, 0, 0}, BigRat(1));
  r2.add_term({0, 2, 0}, BigRat(1));
  r2.add_term({0, 0, 2}, BigRat(1));
  CHECK(r2.laplacian() == PolyField::constant(BigRat(6)));
}

TEST_CASE("evaluation agrees with term-by-term arithmetic") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xd(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const PolyField p = random_poly(rng), q = random_poly(rng);
    const double x = xd(rng), y = xd(rng), z = xd(rng);
    CHECK((p * q).eval(x, y, z) ==
          doctest::Approx(p.eval(x, y, z) * q.eval(x, y, z)).epsilon(1e-12));
    CHECK((p + q).eval(x, y, z) ==
          doctest::Approx(p.eval(x, y, z) + q.eval(x, y, z)).epsilon(1e-12));
  }
}

TEST_CASE("divergence") {
  // div(x^2, x y, -3 x z) = 2x + x - 3x = 0
  const std::array<PolyField, 3> v{PolyField::monomial(2, 0, 0, BigRat(1)),
                                   PolyField::monomial(1, 1, 0, BigRat(1)),
                                   PolyField::monomial(1, 0, 1, BigRat(-3))};
  CHECK(divergence(v).is_zero());
  const std::array<PolyField, 3> w{PolyField::monomial(1, 0, 0, BigRat(1)),
                                   PolyField(), PolyField()};
  CHECK(divergence(w) == PolyField::constant(BigRat(1)));
}
