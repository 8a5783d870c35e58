#include "gratom/units.hpp"

#include <cmath>

#include "gratom/errors.hpp"

namespace gratom {

double PhysicalContext::bohr_radius() const {
  return hbar * hbar / (m_electron * Z * e_charge * e_charge);
}

double PhysicalContext::nuclear_charge() const { return Z * e_charge; }

double PhysicalContext::schwarzschild_radius(double M) const {
  return 2.0 * G * M / (c * c);
}

PhysicalContext make_context(UnitSystem system,
                             const std::map<std::string, double>& overrides) {
  PhysicalContext ctx;
  ctx.unit_system = system;
  ctx.Z = 1;
  if (system == UnitSystem::gaussian_cgs) {
    ctx.G = codata::kG;
    ctx.c = codata::kC;
    ctx.hbar = codata::kHbar;
    ctx.e_charge = codata::kECharge;
    ctx.m_electron = codata::kMElectron;
  } else {
    // hbar = e = m_e = 1; c = 1/alpha; G converted from cgs via the
    // atomic length/mass/time units a0, m_e, hbar^3/(m_e e^4).
    ctx.hbar = 1.0;
    ctx.e_charge = 1.0;
    ctx.m_electron = 1.0;
    const double a0 = codata::kHbar * codata::kHbar /
                      (codata::kMElectron * codata::kECharge * codata::kECharge);
    const double t_au = codata::kHbar * codata::kHbar * codata::kHbar /
                        (codata::kMElectron * std::pow(codata::kECharge, 4));
    ctx.c = codata::kC * t_au / a0;  // = 1/alpha ~ 137.036
    ctx.G = codata::kG * codata::kMElectron * t_au * t_au / (a0 * a0 * a0);
  }
  for (const auto& [name, value] : overrides) {
    if (name == "Z") {
      if (value < 1.0 || value != std::floor(value))
        throw Error(ErrorCode::invalid_argument,
                    "Z must be a positive integer, got " + std::to_string(value));
      ctx.Z = static_cast<int>(value);
      continue;
    }
    if (value <= 0.0)
      throw Error(ErrorCode::invalid_argument,
                  "constant '" + name + "' must be positive");
    if (name == "G")
      ctx.G = value;
    else if (name == "c")
      ctx.c = value;
    else if (name == "hbar")
      ctx.hbar = value;
    else if (name == "e_charge")
      ctx.e_charge = value;
    else if (name == "m_electron")
      ctx.m_electron = value;
    else
      throw Error(ErrorCode::invalid_argument, "unknown constant '" + name + "'");
  }
  return ctx;
}

ValidityReport validity_report(const PhysicalContext& ctx, double M, double r,
                               double B0) {
  if (r <= 0.0) throw Error(ErrorCode::invalid_argument, "radius must be positive");
  if (M < 0.0) throw Error(ErrorCode::invalid_argument, "mass must be non-negative");
  if (B0 < 0.0) throw Error(ErrorCode::invalid_argument, "B0 must be non-negative");
  const double rs = ctx.schwarzschild_radius(M);
  if (M > 0.0 && r <= rs)
    throw Error(ErrorCode::horizon, "r = " + std::to_string(r) +
                                        " cm is at or inside the horizon r_s = " +
                                        std::to_string(rs) + " cm");
  ValidityReport rep;
  rep.weak_field_parameter = rs / r;
  const double a0 = ctx.bohr_radius();
  const double r_max = 2.0 * ctx.G * M / (ctx.c * ctx.c * r * r * r);
  rep.curvature_atom_parameter = r_max * a0 * a0;
  rep.weak_b_field = B0 <= 1e-2;
  if (rep.weak_field_parameter > 1e-2)
    rep.warnings.push_back("weak_field_parameter exceeds 1e-2");
  if (rep.curvature_atom_parameter > 1e-2)
    rep.warnings.push_back("curvature_atom_parameter exceeds 1e-2");
  if (!rep.weak_b_field)
    rep.warnings.push_back("B0 exceeds the weak-field bound 1e-2 G");
  return rep;
}

}  // namespace gratom
