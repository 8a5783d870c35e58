#ifndef GRATOM_PERTURBATION_HPP_
#define GRATOM_PERTURBATION_HPP_

#include <map>
#include <vector>

#include "gratom/curvature.hpp"
#include "gratom/hydrogenic.hpp"

namespace gratom {

enum class TermTag {
  mass_quadrupole,
  nuclear_curvature,
  zeeman_flat,
  zeeman_curvature,
  stark_flat,
  stark_curvature,
};

const char* term_tag_name(TermTag tag);

/// Small Hermitian (here real symmetric) matrix over a labeled
/// degenerate basis, entries in erg.
struct PerturbationMatrix {
  std::vector<AtomState> basis;
  std::vector<double> entries;  // row-major dim x dim
  TermTag tag;

  int dim() const { return static_cast<int>(basis.size()); }
  double at(int i, int j) const { return entries[i * basis.size() + j]; }
  double& at(int i, int j) { return entries[i * basis.size() + j]; }
  double trace() const;
  double spectral_norm() const;
};

struct EigenMode {
  double value;
  int multiplicity;  // cluster size after merging at 1e-10 relative
  std::vector<double> vector;
};

/// Eigen-decomposition: closed-form for dim <= 3, cyclic Jacobi for
/// 4..16. Sorted ascending; degenerate values merged at 1e-10 relative.
std::vector<EigenMode> diagonalize(const PerturbationMatrix& pm);

/// Raw sorted eigensystem without degeneracy merging.
struct Eigensystem {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] is k-th eigenvector
};
Eigensystem eigensystem(const std::vector<double>& sym, int dim);

/// Mass-quadrupole and nuclear-curvature blocks over the (n, l)
/// manifold, basis ordered m_l = -l..+l.
std::vector<PerturbationMatrix> bare_atom_matrix(
    const PhysicalContext& ctx, const CurvatureTensor& curv, int n, int l,
    const std::array<int, 3>& perm = kIdentityPerm);

struct PintoRatio {
  double formula_value;  // 0.1 Qe <r> / (m c^2 <r^2>)
  double direct_ratio;   // ||nuclear block|| / ||mass block||
};

PintoRatio pinto_ratio(const PhysicalContext& ctx, const CurvatureTensor& curv,
                       int n, int l);

struct EnergyCorrection {
  AtomState state;
  double flat_energy;
  std::map<TermTag, double> terms;
  double total;
  ValidityReport validity;
};

/// Normal Zeeman shift plus the curvature correction for one state.
EnergyCorrection zeeman_correction(const PhysicalContext& ctx,
                                   const CurvatureTensor& curv, double B0,
                                   const AtomState& state,
                                   const std::array<int, 3>& perm = kIdentityPerm,
                                   const ValidityReport* validity = nullptr);

/// Flat and curvature Stark blocks plus the two bare-atom blocks over
/// the full n-manifold (dimension n^2), basis ordered by (l, m_l).
/// Supported for n <= 4.
std::vector<PerturbationMatrix> stark_matrix(
    const PhysicalContext& ctx, const CurvatureTensor& curv, double E0, int n,
    const std::array<int, 3>& perm = kIdentityPerm);

}  // namespace gratom

#endif  // GRATOM_PERTURBATION_HPP_
