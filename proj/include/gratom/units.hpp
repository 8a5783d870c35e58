#ifndef GRATOM_UNITS_HPP_
#define GRATOM_UNITS_HPP_

#include <map>
#include <string>
#include <vector>

namespace gratom {

enum class UnitSystem { gaussian_cgs, atomic };

/// Immutable bundle of physical constants; Gaussian cgs internally
/// (lengths cm, masses g, charges statC, energies erg).
struct PhysicalContext {
  double G;           // cm^3 g^-1 s^-2
  double c;           // cm/s
  double hbar;        // erg s
  double e_charge;    // statC
  double m_electron;  // g
  int Z;              // nuclear charge number
  UnitSystem unit_system;

  // hbar^2 / (m_e Z e^2)
  double bohr_radius() const;
  // Z e
  double nuclear_charge() const;
  // Schwarzschild radius 2GM/c^2 of a mass M
  double schwarzschild_radius(double M) const;
};

// CODATA 2018, Gaussian cgs
namespace codata {
inline constexpr double kG = 6.67430e-8;
inline constexpr double kC = 2.99792458e10;
inline constexpr double kHbar = 1.054571817e-27;
inline constexpr double kECharge = 4.80320471257e-10;
inline constexpr double kMElectron = 9.1093837015e-28;
}  // namespace codata

/// Build a context from defaults plus overrides keyed by
/// {"G","c","hbar","e_charge","m_electron","Z"}. Throws on unknown
/// names or non-positive values.
PhysicalContext make_context(UnitSystem system,
                             const std::map<std::string, double>& overrides = {});

struct ValidityReport {
  double weak_field_parameter;      // 2GM/(c^2 r)
  double curvature_atom_parameter;  // |R|_max * a0^2
  bool weak_b_field;                // B0 <= 1e-2 G
  std::vector<std::string> warnings;
};

/// Annotates the regime; never blocks except for r at or inside the horizon.
ValidityReport validity_report(const PhysicalContext& ctx, double M, double r,
                               double B0);

}  // namespace gratom

#endif  // GRATOM_UNITS_HPP_
