#include "gratom/angular.hpp"

#include <algorithm>
#include <cmath>

#include "gratom/errors.hpp"

namespace gratom {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

SqrtRat clebsch_gordan_exact(int l1, int m1, int l2, int m2, int l, int m) {
  if (l1 < 0 || l2 < 0 || l < 0)
    throw Error(ErrorCode::invalid_argument, "negative angular momentum");
  if (m1 + m2 != m) return SqrtRat();
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m) > l) return SqrtRat();
  if (l < std::abs(l1 - l2) || l > l1 + l2) return SqrtRat();

  // Racah sum
  BigRat sum = 0;
  const int k_lo = std::max({0, l2 - l - m1, l1 - l + m2});
  const int k_hi = std::min({l1 + l2 - l, l1 - m1, l2 + m2});
  for (int k = k_lo; k <= k_hi; ++k) {
    BigInt den = factorial(k) * factorial(l1 + l2 - l - k) *
                 factorial(l1 - m1 - k) * factorial(l2 + m2 - k) *
                 factorial(l - l2 + m1 + k) * factorial(l - l1 - m2 + k);
    BigRat term(1, den);
    if (k % 2) term = -term;
    sum += term;
  }
  if (sum == 0) return SqrtRat();

  BigRat norm(BigInt(2 * l + 1) * factorial(l1 + l2 - l) *
                  factorial(l1 - l2 + l) * factorial(-l1 + l2 + l),
              factorial(l1 + l2 + l + 1));
  norm *= BigRat(factorial(l + m) * factorial(l - m) * factorial(l1 - m1) *
                 factorial(l1 + m1) * factorial(l2 - m2) * factorial(l2 + m2));
  // value = sum * sqrt(norm); fold sqrt(p/q) = sqrt(pq)/q
  const BigInt p = numerator(norm);
  const BigInt q = denominator(norm);
  return SqrtRat(sum / q, p * q);
}

double clebsch_gordan(int l1, int m1, int l2, int m2, int l, int m) {
  return clebsch_gordan_exact(l1, m1, l2, m2, l, m).to_double();
}

double triple_y_integral(int l1, int m1, int l2, int m2, int l, int m) {
  const double cg0 = clebsch_gordan(l1, 0, l2, 0, l, 0);
  if (cg0 == 0.0) return 0.0;
  const double cgm = clebsch_gordan(l1, m1, l2, m2, l, m);
  if (cgm == 0.0) return 0.0;
  const double pref = std::sqrt(double(2 * l1 + 1) * double(2 * l2 + 1) /
                                (4.0 * M_PI * double(2 * l + 1)));
  return pref * cg0 * cgm;
}

QuadraticHarmonicDecomposition quadratic_decomposition(Axis axis) {
  QuadraticHarmonicDecomposition d;
  const double c00 = std::sqrt(4.0 * M_PI) / 3.0;
  const double c20 = std::sqrt(16.0 * M_PI / 5.0);
  const double c22 = std::sqrt(32.0 * M_PI / 15.0);
  d.coefficients[{0, 0}] = c00;
  switch (axis) {
    case Axis::x:
      d.coefficients[{2, 0}] = -c20 / 6.0;
      d.coefficients[{2, 2}] = c22 / 4.0;
      d.coefficients[{2, -2}] = c22 / 4.0;
      break;
    case Axis::y:
      d.coefficients[{2, 0}] = -c20 / 6.0;
      d.coefficients[{2, 2}] = -c22 / 4.0;
      d.coefficients[{2, -2}] = -c22 / 4.0;
      break;
    case Axis::z:
      d.coefficients[{2, 0}] = c20 / 3.0;
      break;
  }
  return d;
}

}  // namespace gratom
