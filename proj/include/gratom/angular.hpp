#ifndef GRATOM_ANGULAR_HPP_
#define GRATOM_ANGULAR_HPP_

#include <map>
#include <utility>

#include "gratom/exact.hpp"

namespace gratom {

/// Clebsch-Gordan coefficient <l1 m1 l2 m2 | l m>, Condon-Shortley
/// convention, integer angular momenta, evaluated through the Racah
/// closed-form sum in exact arithmetic. Selection-rule violations give
/// an exact zero.
SqrtRat clebsch_gordan_exact(int l1, int m1, int l2, int m2, int l, int m);
double clebsch_gordan(int l1, int m1, int l2, int m2, int l, int m);

/// Gaunt integral of Y*_{lm} Y_{l1m1} Y_{l2m2} over the sphere.
double triple_y_integral(int l1, int m1, int l2, int m2, int l, int m);

enum class Axis { x = 0, y = 1, z = 2 };

/// Coefficients of x_axis^2/r^2 over {Y00, Y20, Y2,2, Y2,-2}.
struct QuadraticHarmonicDecomposition {
  std::map<std::pair<int, int>, double> coefficients;
};

QuadraticHarmonicDecomposition quadratic_decomposition(Axis axis);

}  // namespace gratom

#endif  // GRATOM_ANGULAR_HPP_
