#include "gratom/perturbation.hpp"

#include <algorithm>
#include <cmath>

#include "gratom/angular.hpp"
#include "gratom/errors.hpp"

namespace gratom {

const char* term_tag_name(TermTag tag) {
  switch (tag) {
    case TermTag::mass_quadrupole: return "mass_quadrupole";
    case TermTag::nuclear_curvature: return "nuclear_curvature";
    case TermTag::zeeman_flat: return "zeeman_flat";
    case TermTag::zeeman_curvature: return "zeeman_curvature";
    case TermTag::stark_flat: return "stark_flat";
    case TermTag::stark_curvature: return "stark_curvature";
  }
  return "?";
}

double PerturbationMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim(); ++i) t += at(i, i);
  return t;
}

double PerturbationMatrix::spectral_norm() const {
  const auto es = eigensystem(entries, dim());
  double m = 0.0;
  for (double v : es.values) m = std::max(m, std::abs(v));
  return m;
}

namespace {

// <Y_l'm' | x_axis^2 / r^2 | Y_lm>
double angular_quadratic(int lp, int mp, int l, int m, Axis axis) {
  double sum = 0.0;
  for (const auto& [lm, c] : quadratic_decomposition(axis).coefficients)
    sum += c * triple_y_integral(lm.first, lm.second, l, m, lp, mp);
  return sum;
}

// <Y_l'm' | (x_axis^2 / r^2)(z / r) | Y_lm> via Gaunt chaining of the
// product Y_LM Y_10.
double angular_quadratic_z(int lp, int mp, int l, int m, Axis axis) {
  const double zc = std::sqrt(4.0 * M_PI / 3.0);
  double sum = 0.0;
  for (const auto& [lm, c] : quadratic_decomposition(axis).coefficients) {
    const int L = lm.first, M = lm.second;
    for (int lam = std::abs(L - 1); lam <= L + 1; ++lam) {
      const double expand = triple_y_integral(L, M, 1, 0, lam, M);
      if (expand == 0.0) continue;
      sum += c * zc * expand * triple_y_integral(lam, M, l, m, lp, mp);
    }
  }
  return sum;
}

// S_{m'm} = sum_i R_{0i0i} <Y_lm' | x_i^2/r^2 | Y_lm>
std::vector<double> curvature_angular_matrix(const CurvatureTensor& curv,
                                             int l) {
  const int dim = 2 * l + 1;
  std::vector<double> s(dim * dim, 0.0);
  for (int ip = 0; ip < dim; ++ip)
    for (int jq = 0; jq < dim; ++jq) {
      const int mp = ip - l, m = jq - l;
      double v = 0.0;
      for (int ax = 0; ax < 3; ++ax)
        v += curv.r0i0j[ax] *
             angular_quadratic(l, mp, l, m, static_cast<Axis>(ax));
      s[ip * dim + jq] = v;
    }
  return s;
}

void jacobi_eigen(std::vector<double> a, int n, std::vector<double>& values,
                  std::vector<std::vector<double>>& vectors) {
  std::vector<double> v(n * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;
  double norm = 0.0;
  for (double x : a) norm = std::max(norm, std::abs(x));
  if (norm == 0.0) norm = 1.0;
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    if (std::sqrt(off) < 1e-15 * norm) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });
  values.resize(n);
  vectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    values[k] = a[order[k] * n + order[k]];
    int imax = 0;
    for (int i = 0; i < n; ++i) {
      vectors[k][i] = v[i * n + order[k]];
      if (std::abs(vectors[k][i]) > std::abs(vectors[k][imax])) imax = i;
    }
    if (vectors[k][imax] < 0.0)
      for (double& x : vectors[k]) x = -x;
  }
}

// trigonometric closed form for a symmetric 3x3
std::array<double, 3> closed_form_3x3(const std::vector<double>& a) {
  const double p1 = a[1] * a[1] + a[2] * a[2] + a[5] * a[5];
  if (p1 == 0.0) {
    std::array<double, 3> d{a[0], a[4], a[8]};
    std::sort(d.begin(), d.end());
    return d;
  }
  const double q = (a[0] + a[4] + a[8]) / 3.0;
  const double p2 = (a[0] - q) * (a[0] - q) + (a[4] - q) * (a[4] - q) +
                    (a[8] - q) * (a[8] - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  double b[9];
  for (int i = 0; i < 9; ++i) b[i] = a[i];
  b[0] -= q;
  b[4] -= q;
  b[8] -= q;
  for (int i = 0; i < 9; ++i) b[i] /= p;
  const double detb = b[0] * (b[4] * b[8] - b[5] * b[7]) -
                      b[1] * (b[3] * b[8] - b[5] * b[6]) +
                      b[2] * (b[3] * b[7] - b[4] * b[6]);
  const double r = std::clamp(detb / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
  const double e2 = 3.0 * q - e1 - e3;
  std::array<double, 3> d{e3, e2, e1};
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

Eigensystem eigensystem(const std::vector<double>& sym, int dim) {
  Eigensystem es;
  jacobi_eigen(sym, dim, es.values, es.vectors);
  if (dim == 1) {
    es.values = {sym[0]};
  } else if (dim == 2) {
    const double tr = sym[0] + sym[3];
    const double disc =
        std::sqrt((sym[0] - sym[3]) * (sym[0] - sym[3]) + 4.0 * sym[1] * sym[1]);
    es.values = {(tr - disc) / 2.0, (tr + disc) / 2.0};
  } else if (dim == 3) {
    // A 3x3 closed form exists (trigonometric cubic), but any
    // characteristic-polynomial route splits a double eigenvalue by
    // O(sqrt(eps) * norm), which defeats 1e-10 degeneracy merging.
    // Keep the machine-accurate Jacobi values and use the closed form
    // only as a bracket against gross failure.
    const auto d = closed_form_3x3(sym);
    double norm = 0.0;
    for (double x : sym) norm = std::max(norm, std::abs(x));
    for (int k = 0; k < 3; ++k)
      if (std::abs(es.values[k] - d[k]) > 1e-6 * norm)
        throw Error(ErrorCode::nonconvergence, "3x3 eigenvalue paths disagree");
  }
  return es;
}

std::vector<EigenMode> diagonalize(const PerturbationMatrix& pm) {
  if (pm.dim() > 16)
    throw Error(ErrorCode::unsupported, "matrix dimension > 16");
  const auto es = eigensystem(pm.entries, pm.dim());
  double scale = 0.0;
  for (double v : es.values) scale = std::max(scale, std::abs(v));
  std::vector<EigenMode> out;
  for (int k = 0; k < pm.dim(); ++k) {
    if (!out.empty() &&
        std::abs(es.values[k] - out.back().value) <= 1e-10 * scale) {
      out.back().multiplicity += 1;
      continue;
    }
    out.push_back({es.values[k], 1, es.vectors[k]});
  }
  return out;
}

std::vector<PerturbationMatrix> bare_atom_matrix(
    const PhysicalContext& ctx, const CurvatureTensor& curv, int n, int l,
    const std::array<int, 3>& perm) {
  validate_state(AtomState{n, l, 0});
  const CurvatureTensor pc = permute_axes(curv, perm);
  const int dim = 2 * l + 1;
  const auto s = curvature_angular_matrix(pc, l);
  const AtomState probe{n, l, 0};
  const double r1 = radial_expectation(ctx, probe, 1);
  const double r2 = radial_expectation(ctx, probe, 2);
  // (1/2) m c^2 R_{0i0j} x^i x^j ; c^2 restores erg units for the
  // geometric curvature components
  const double mass_scale = 0.5 * ctx.m_electron * ctx.c * ctx.c * r2;
  // (1/4) Q e R_{0i0j} x^i x^j / r
  const double nuc_scale =
      0.25 * ctx.nuclear_charge() * ctx.e_charge * r1;

  std::vector<PerturbationMatrix> out(2);
  for (auto& pm : out) {
    pm.basis.resize(dim);
    for (int i = 0; i < dim; ++i) pm.basis[i] = AtomState{n, l, i - l};
    pm.entries.resize(dim * dim);
  }
  out[0].tag = TermTag::mass_quadrupole;
  out[1].tag = TermTag::nuclear_curvature;
  for (int i = 0; i < dim * dim; ++i) {
    out[0].entries[i] = mass_scale * s[i];
    out[1].entries[i] = nuc_scale * s[i];
  }
  return out;
}

PintoRatio pinto_ratio(const PhysicalContext& ctx, const CurvatureTensor& curv,
                       int n, int l) {
  if (l < 1)
    throw Error(ErrorCode::invalid_argument,
                "pinto_ratio needs l >= 1 (both blocks vanish for l = 0)");
  const AtomState probe{n, l, 0};
  const double r1 = radial_expectation(ctx, probe, 1);
  const double r2 = radial_expectation(ctx, probe, 2);
  PintoRatio pr;
  pr.formula_value = 0.1 * ctx.nuclear_charge() * ctx.e_charge * r1 /
                     (ctx.m_electron * ctx.c * ctx.c * r2);
  const auto blocks = bare_atom_matrix(ctx, curv, n, l);
  const double mass_norm = blocks[0].spectral_norm();
  const double nuc_norm = blocks[1].spectral_norm();
  pr.direct_ratio = nuc_norm / mass_norm;
  return pr;
}

EnergyCorrection zeeman_correction(const PhysicalContext& ctx,
                                   const CurvatureTensor& curv, double B0,
                                   const AtomState& state,
                                   const std::array<int, 3>& perm,
                                   const ValidityReport* validity) {
  validate_state(state);
  if (B0 < 0.0)
    throw Error(ErrorCode::invalid_argument, "B0 must be non-negative");
  const CurvatureTensor pc = permute_axes(curv, perm);
  EnergyCorrection ec;
  ec.state = state;
  ec.flat_energy = flat_energy(ctx, state.n);
  const double larmor =
      ctx.e_charge * B0 / (2.0 * ctx.m_electron * ctx.c) * ctx.hbar;
  ec.terms[TermTag::zeeman_flat] = -larmor * state.m_l;
  const double coupling = -3.0 * pc.r0i0j[1] + 2.0 * pc.r1212;
  const double r2 = radial_expectation(ctx, state, 2);
  const double bracket =
      1.0 - clebsch_gordan(2, 0, state.l, 0, state.l, 0) *
                clebsch_gordan(2, 0, state.l, state.m_l, state.l, state.m_l);
  ec.terms[TermTag::zeeman_curvature] = ctx.e_charge * B0 /
                                        (18.0 * ctx.m_electron * ctx.c) *
                                        coupling * r2 * state.m_l * ctx.hbar *
                                        bracket;
  ec.total = ec.flat_energy;
  for (const auto& [tag, v] : ec.terms) ec.total += v;
  if (validity)
    ec.validity = *validity;
  else
    ec.validity = ValidityReport{0.0, 0.0, B0 <= 1e-2, {}};
  return ec;
}

std::vector<PerturbationMatrix> stark_matrix(
    const PhysicalContext& ctx, const CurvatureTensor& curv, double E0, int n,
    const std::array<int, 3>& perm) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  if (n > 4)
    throw Error(ErrorCode::unsupported,
                "stark_matrix validated only up to n = 4");
  if (E0 < 0.0)
    throw Error(ErrorCode::invalid_argument, "E0 must be non-negative");
  const CurvatureTensor pc = permute_axes(curv, perm);
  std::vector<AtomState> basis;
  for (int l = 0; l < n; ++l)
    for (int m = -l; m <= l; ++m) basis.push_back(AtomState{n, l, m});
  const int dim = static_cast<int>(basis.size());

  std::vector<PerturbationMatrix> out(4);
  const TermTag tags[4] = {TermTag::mass_quadrupole, TermTag::nuclear_curvature,
                           TermTag::stark_flat, TermTag::stark_curvature};
  for (int b = 0; b < 4; ++b) {
    out[b].tag = tags[b];
    out[b].basis = basis;
    out[b].entries.assign(dim * dim, 0.0);
  }

  const double e = ctx.e_charge;
  const double Qe = ctx.nuclear_charge() * e;
  const double zc = std::sqrt(4.0 * M_PI / 3.0);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const AtomState& sp = basis[i];
      const AtomState& sq = basis[j];
      double mass = 0.0, nuc = 0.0, sflat = 0.0, scurv = 0.0;
      if ((sp.l + sq.l) % 2 == 0) {
        // parity-even blocks
        double ang = 0.0;
        for (int ax = 0; ax < 3; ++ax)
          ang += pc.r0i0j[ax] * angular_quadratic(sp.l, sp.m_l, sq.l, sq.m_l,
                                                  static_cast<Axis>(ax));
        if (ang != 0.0) {
          mass = 0.5 * ctx.m_electron * ctx.c * ctx.c *
                 radial_cross_moment(ctx, n, sp.l, sq.l, 2) * ang;
          nuc = 0.25 * Qe * radial_cross_moment(ctx, n, sp.l, sq.l, 1) * ang;
        }
      } else {
        // parity-odd blocks
        const double angz =
            zc * triple_y_integral(1, 0, sq.l, sq.m_l, sp.l, sp.m_l);
        if (angz != 0.0)
          sflat = e * E0 * radial_cross_moment(ctx, n, sp.l, sq.l, 1) * angz;
        double ang3 = 0.0;
        for (int ax = 0; ax < 3; ++ax)
          ang3 += pc.r0i0j[ax] * angular_quadratic_z(sp.l, sp.m_l, sq.l,
                                                     sq.m_l, static_cast<Axis>(ax));
        if (ang3 != 0.0)
          scurv = 0.25 * e * E0 * radial_cross_moment(ctx, n, sp.l, sq.l, 3) *
                  ang3;
      }
      const double vals[4] = {mass, nuc, sflat, scurv};
      for (int b = 0; b < 4; ++b) {
        out[b].at(i, j) = vals[b];
        out[b].at(j, i) = vals[b];
      }
    }
  return out;
}

}  // namespace gratom
