#ifndef GRATOM_HYDROGENIC_HPP_
#define GRATOM_HYDROGENIC_HPP_

#include "gratom/units.hpp"

namespace gratom {

struct AtomState {
  int n = 1;
  int l = 0;
  int m_l = 0;
};

/// Throws on out-of-range quantum numbers.
void validate_state(const AtomState& state);

/// Flat-space hydrogenic level E_n = -Qe/(2 a n^2).
double flat_energy(const PhysicalContext& ctx, int n);

/// Closed-form <r^k>_{n,l} (Kramers), k in [-2, 3], in cm^k.
double radial_expectation(const PhysicalContext& ctx, const AtomState& state,
                          int k);

/// Quadrature oracle: integrates |R_nl|^2 r^{k+2} with the explicit
/// associated-Laguerre radial function on [0, 40 n^2 a]. Node-doubles
/// internally and throws on non-convergence (> 1e-9 relative drift).
double radial_expectation_quadrature(const PhysicalContext& ctx,
                                     const AtomState& state, int k);

/// Cross moment integral R_{n l1} R_{n l2} r^{k+2} dr by the same
/// quadrature; needed for the Stark assembly. Validated for n <= 4.
double radial_cross_moment(const PhysicalContext& ctx, int n, int l1, int l2,
                           int k);

}  // namespace gratom

#endif  // GRATOM_HYDROGENIC_HPP_
