#include "gratom/polyfield.hpp"

#include <cmath>

namespace gratom {

PolyField PolyField::constant(const BigRat& c) { return monomial(0, 0, 0, c); }

PolyField PolyField::monomial(int i, int j, int k, const BigRat& c) {
  PolyField p;
  p.add_term({i, j, k}, c);
  return p;
}

void PolyField::add_term(const Exponents& e, const BigRat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

PolyField PolyField::operator+(const PolyField& o) const {
  PolyField r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

PolyField PolyField::operator-(const PolyField& o) const {
  PolyField r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

PolyField PolyField::operator*(const PolyField& o) const {
  PolyField r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
  return r;
}

PolyField PolyField::scaled(const BigRat& c) const {
  PolyField r;
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

PolyField PolyField::derivative(int axis) const {
  PolyField r;
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    Exponents d = e;
    d[axis] -= 1;
    r.add_term(d, c * e[axis]);
  }
  return r;
}

PolyField PolyField::laplacian() const {
  PolyField r;
  for (int axis = 0; axis < 3; ++axis)
    r = r + derivative(axis).derivative(axis);
  return r;
}

double PolyField::eval(double x, double y, double z) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_)
    sum += c.convert_to<double>() * std::pow(x, e[0]) * std::pow(y, e[1]) *
           std::pow(z, e[2]);
  return sum;
}

PolyField divergence(const std::array<PolyField, 3>& v) {
  return v[0].derivative(0) + v[1].derivative(1) + v[2].derivative(2);
}

}  // namespace gratom
