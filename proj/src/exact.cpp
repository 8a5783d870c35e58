#include "gratom/exact.hpp"

#include <cmath>
#include <utility>

#include "gratom/errors.hpp"

namespace gratom {

std::pair<BigInt, BigInt> squarefree_split(BigInt n) {
  if (n < 0)
    throw Error(ErrorCode::invalid_argument, "negative radicand");
  if (n == 0) return {0, 1};
  BigInt square_part = 1, free_part = 1;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square_part *= p;
    if (e % 2) free_part *= p;
  }
  free_part *= n;  // leftover prime
  return {square_part, free_part};
}

SqrtRat::SqrtRat(BigRat c, BigInt rad) {
  if (c == 0) {
    coef = 0;
    radicand = 1;
    return;
  }
  auto [sq, fr] = squarefree_split(std::move(rad));
  if (fr == 0) {
    coef = 0;
    radicand = 1;
    return;
  }
  coef = c * sq;
  radicand = fr;
}

SqrtRat SqrtRat::operator*(const SqrtRat& o) const {
  return SqrtRat(coef * o.coef, radicand * o.radicand);
}

SqrtRat SqrtRat::operator-() const {
  SqrtRat r;
  r.coef = -coef;
  r.radicand = radicand;
  return r;
}

double SqrtRat::to_double() const {
  return coef.convert_to<double>() *
         std::sqrt(radicand.convert_to<double>());
}

}  // namespace gratom
