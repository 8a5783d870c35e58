#ifndef GRATOM_EXACT_HPP_
#define GRATOM_EXACT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace gratom {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact value of the form coef * sqrt(radicand) with radicand a
/// squarefree non-negative integer. Closed under multiplication;
/// sums are handled by the callers grouping on the radicand.
struct SqrtRat {
  BigRat coef{0};
  BigInt radicand{1};

  SqrtRat() = default;
  SqrtRat(BigRat c, BigInt rad);  // canonicalizes

  bool is_zero() const { return coef == 0; }
  SqrtRat operator*(const SqrtRat& o) const;
  SqrtRat operator-() const;
  double to_double() const;
};

/// Splits n >= 0 as s^2 * f with f squarefree; returns {s, f}.
std::pair<BigInt, BigInt> squarefree_split(BigInt n);

}  // namespace gratom

#endif  // GRATOM_EXACT_HPP_
