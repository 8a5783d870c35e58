#include "gratom.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gratom/angular.hpp"
#include "gratom/curvature.hpp"
#include "gratom/errors.hpp"
#include "gratom/hydrogenic.hpp"
#include "gratom/perturbation.hpp"
#include "gratom/semiclassical.hpp"
#include "gratom/sweep.hpp"
#include "gratom/units.hpp"

struct gratom_context {
  gratom::PhysicalContext ctx;
};

namespace {

thread_local std::string g_last_error;

int to_code(const gratom::Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case gratom::ErrorCode::invalid_argument: return GRATOM_ERR_INVALID_ARGUMENT;
    case gratom::ErrorCode::horizon: return GRATOM_ERR_HORIZON;
    case gratom::ErrorCode::regime: return GRATOM_ERR_REGIME;
    case gratom::ErrorCode::unsupported: return GRATOM_ERR_UNSUPPORTED;
    case gratom::ErrorCode::no_root: return GRATOM_ERR_NO_ROOT;
    case gratom::ErrorCode::nonconvergence: return GRATOM_ERR_NONCONVERGENCE;
    case gratom::ErrorCode::parse_error: return GRATOM_ERR_PARSE;
    case gratom::ErrorCode::io_error: return GRATOM_ERR_IO;
  }
  return GRATOM_ERR_INVALID_ARGUMENT;
}

template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const gratom::Error& e) {
    return to_code(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GRATOM_ERR_INVALID_ARGUMENT;
  }
}

}  // namespace

extern "C" {

const char* gratom_last_error(void) { return g_last_error.c_str(); }

int gratom_context_create(const char* unit_system, const char* const* names,
                          const double* values, int n_overrides,
                          gratom_context** out) {
  return guarded([&]() {
    if (!unit_system || !out) {
      g_last_error = "null argument";
      return GRATOM_ERR_INVALID_ARGUMENT;
    }
    gratom::UnitSystem sys;
    if (std::strcmp(unit_system, "gaussian_cgs") == 0)
      sys = gratom::UnitSystem::gaussian_cgs;
    else if (std::strcmp(unit_system, "atomic") == 0)
      sys = gratom::UnitSystem::atomic;
    else {
      g_last_error = std::string("unknown unit system '") + unit_system + "'";
      return GRATOM_ERR_INVALID_ARGUMENT;
    }
    std::map<std::string, double> overrides;
    for (int i = 0; i < n_overrides; ++i) overrides[names[i]] = values[i];
    *out = new gratom_context{gratom::make_context(sys, overrides)};
    return GRATOM_OK;
  });
}

void gratom_context_free(gratom_context* ctx) { delete ctx; }

double gratom_bohr_radius(const gratom_context* ctx) {
  return ctx->ctx.bohr_radius();
}

int gratom_validity_report(const gratom_context* ctx, double M, double r,
                           double B0, double* weak_field,
                           double* curvature_atom, int* weak_b, char* warnings,
                           int warnings_len) {
  return guarded([&]() {
    const auto rep = gratom::validity_report(ctx->ctx, M, r, B0);
    if (weak_field) *weak_field = rep.weak_field_parameter;
    if (curvature_atom) *curvature_atom = rep.curvature_atom_parameter;
    if (weak_b) *weak_b = rep.weak_b_field ? 1 : 0;
    if (warnings && warnings_len > 0) {
      std::string joined;
      for (const auto& w : rep.warnings) {
        if (!joined.empty()) joined += "; ";
        joined += w;
      }
      std::snprintf(warnings, warnings_len, "%s", joined.c_str());
    }
    return GRATOM_OK;
  });
}

int gratom_schwarzschild_curvature(const gratom_context* ctx, double M,
                                   double r, int mode, double r0i0i[3],
                                   double spatial[3]) {
  return guarded([&]() {
    const auto cm = mode == 1 ? gratom::CurvatureMode::exact_printed
                              : gratom::CurvatureMode::leading_orthonormal;
    const auto t = gratom::schwarzschild_curvature(ctx->ctx, M, r, cm);
    if (r0i0i)
      for (int i = 0; i < 3; ++i) r0i0i[i] = t.r0i0j[i];
    if (spatial) {
      spatial[0] = t.r1212;
      spatial[1] = t.r1313;
      spatial[2] = t.r2323;
    }
    return GRATOM_OK;
  });
}

double gratom_clebsch_gordan(int l1, int m1, int l2, int m2, int l, int m) {
  try {
    return gratom::clebsch_gordan(l1, m1, l2, m2, l, m);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 0.0;
  }
}

double gratom_triple_y_integral(int l1, int m1, int l2, int m2, int l, int m) {
  try {
    return gratom::triple_y_integral(l1, m1, l2, m2, l, m);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 0.0;
  }
}

int gratom_radial_expectation(const gratom_context* ctx, int n, int l, int k,
                              double* out) {
  return guarded([&]() {
    *out = gratom::radial_expectation(ctx->ctx, gratom::AtomState{n, l, 0}, k);
    return GRATOM_OK;
  });
}

int gratom_bare_atom_matrix(const gratom_context* ctx, double M, double r,
                            int n, int l, double* mass_block,
                            double* nuclear_block, double* mass_eigs,
                            double* nuclear_eigs) {
  return guarded([&]() {
    const auto curv = gratom::schwarzschild_curvature(ctx->ctx, M, r);
    const auto blocks = gratom::bare_atom_matrix(ctx->ctx, curv, n, l);
    const int dim = blocks[0].dim();
    if (mass_block)
      std::memcpy(mass_block, blocks[0].entries.data(),
                  sizeof(double) * dim * dim);
    if (nuclear_block)
      std::memcpy(nuclear_block, blocks[1].entries.data(),
                  sizeof(double) * dim * dim);
    if (mass_eigs) {
      const auto es = gratom::eigensystem(blocks[0].entries, dim);
      std::memcpy(mass_eigs, es.values.data(), sizeof(double) * dim);
    }
    if (nuclear_eigs) {
      const auto es = gratom::eigensystem(blocks[1].entries, dim);
      std::memcpy(nuclear_eigs, es.values.data(), sizeof(double) * dim);
    }
    return GRATOM_OK;
  });
}

int gratom_zeeman_correction(const gratom_context* ctx, double M, double r,
                             double B0, int n, int l, int m_l, double* flat,
                             double* curvature) {
  return guarded([&]() {
    const auto curv = gratom::schwarzschild_curvature(ctx->ctx, M, r);
    const auto ec = gratom::zeeman_correction(ctx->ctx, curv, B0,
                                              gratom::AtomState{n, l, m_l});
    if (flat) *flat = ec.terms.at(gratom::TermTag::zeeman_flat);
    if (curvature) *curvature = ec.terms.at(gratom::TermTag::zeeman_curvature);
    return GRATOM_OK;
  });
}

int gratom_stark_eigenvalues(const gratom_context* ctx, double M, double r,
                             double E0, int n, double* eigs) {
  return guarded([&]() {
    const auto curv = gratom::schwarzschild_curvature(ctx->ctx, M, r);
    const auto blocks = gratom::stark_matrix(ctx->ctx, curv, E0, n);
    const int dim = blocks[0].dim();
    std::vector<double> total(dim * dim, 0.0);
    for (const auto& b : blocks)
      for (int i = 0; i < dim * dim; ++i) total[i] += b.entries[i];
    const auto es = gratom::eigensystem(total, dim);
    if (eigs) std::memcpy(eigs, es.values.data(), sizeof(double) * dim);
    return GRATOM_OK;
  });
}

int gratom_orbit_radius(const gratom_context* ctx, double M, double r,
                        double B0, int n, double* rho, double* v,
                        double* residual) {
  return guarded([&]() {
    const auto curv = gratom::schwarzschild_curvature(ctx->ctx, M, r);
    const auto res = gratom::orbit_radius(ctx->ctx, curv, B0, n);
    if (rho) *rho = res.rho;
    if (v) *v = res.v;
    if (residual) *residual = res.residual;
    return GRATOM_OK;
  });
}

int gratom_curvature_radius(const gratom_context* ctx, double M, double r,
                            double* r_a) {
  return guarded([&]() {
    const auto curv = gratom::schwarzschild_curvature(ctx->ctx, M, r);
    *r_a = gratom::curvature_radius(ctx->ctx, curv);
    return GRATOM_OK;
  });
}

int gratom_sweep_run_text(const char* config_text, const char* out_path,
                          const char* format) {
  return guarded([&]() {
    gratom::SweepConfig cfg = gratom::parse_config(config_text);
    if (out_path) cfg.out_path = out_path;
    if (format) cfg.format = format;
    std::ostringstream err;
    const int rc = gratom::run_sweep(cfg, err);
    if (rc != 0) {
      g_last_error = err.str();
      return rc == 1 ? GRATOM_ERR_PARSE : GRATOM_ERR_HORIZON;
    }
    return GRATOM_OK;
  });
}

int gratom_sweep_run(const char* config_path, const char* out_path,
                     const char* format) {
  return guarded([&]() {
    std::ifstream f(config_path);
    if (!f) {
      g_last_error = std::string("cannot open config file '") + config_path + "'";
      return GRATOM_ERR_IO;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return gratom_sweep_run_text(ss.str().c_str(), out_path, format);
  });
}

}  // extern "C"
