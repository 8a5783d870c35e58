#ifndef GRATOM_POLYFIELD_HPP_
#define GRATOM_POLYFIELD_HPP_

#include <array>
#include <map>

#include "gratom/exact.hpp"

namespace gratom {

/// Sparse multivariate polynomial in local coordinates (x, y, z) with
/// exact rational coefficients. Canonical form stores no zero terms.
class PolyField {
 public:
  using Exponents = std::array<int, 3>;

  PolyField() = default;
  static PolyField constant(const BigRat& c);
  static PolyField monomial(int i, int j, int k, const BigRat& c);

  const std::map<Exponents, BigRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PolyField operator+(const PolyField& o) const;
  PolyField operator-(const PolyField& o) const;
  PolyField operator*(const PolyField& o) const;
  PolyField scaled(const BigRat& c) const;
  bool operator==(const PolyField& o) const { return terms_ == o.terms_; }

  PolyField derivative(int axis) const;  // axis 0..2
  PolyField laplacian() const;
  double eval(double x, double y, double z) const;

  void add_term(const Exponents& e, const BigRat& c);

 private:
  std::map<Exponents, BigRat> terms_;
};

/// Divergence of a vector of polynomial components.
PolyField divergence(const std::array<PolyField, 3>& v);

}  // namespace gratom

#endif  // GRATOM_POLYFIELD_HPP_
