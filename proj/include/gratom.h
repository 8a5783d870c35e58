/* C interface to the gratom library: curvature corrections to
 * hydrogenic energy levels on a Schwarzschild background.
 *
 * All functions return GRATOM_OK (0) on success or a negative error
 * code; gratom_last_error() describes the most recent failure on the
 * calling thread. Handles are opaque and freed by their *_free call.
 * Units are Gaussian cgs throughout (cm, g, s, statC, erg, G).
 */
#ifndef GRATOM_H_
#define GRATOM_H_

#ifdef __cplusplus
extern "C" {
#endif

#define GRATOM_OK 0
#define GRATOM_ERR_INVALID_ARGUMENT -1
#define GRATOM_ERR_HORIZON -2
#define GRATOM_ERR_REGIME -3
#define GRATOM_ERR_UNSUPPORTED -4
#define GRATOM_ERR_NO_ROOT -5
#define GRATOM_ERR_NONCONVERGENCE -6
#define GRATOM_ERR_PARSE -7
#define GRATOM_ERR_IO -8

typedef struct gratom_context gratom_context;

/* Message for the last error raised on this thread. */
const char* gratom_last_error(void);

/* unit_system: "gaussian_cgs" or "atomic". names/values carry
 * constant overrides ("G", "c", "hbar", "e_charge", "m_electron", "Z");
 * pass n_overrides = 0 for defaults. */
int gratom_context_create(const char* unit_system, const char* const* names,
                          const double* values, int n_overrides,
                          gratom_context** out);
void gratom_context_free(gratom_context* ctx);

double gratom_bohr_radius(const gratom_context* ctx);

/* weak_field <- 2GM/(c^2 r); curvature_atom <- |R|_max a0^2;
 * weak_b <- 1 when B0 is inside the weak-field bound. warnings (optional,
 * may be NULL) receives a semicolon-joined summary. */
int gratom_validity_report(const gratom_context* ctx, double M, double r,
                           double B0, double* weak_field,
                           double* curvature_atom, int* weak_b, char* warnings,
                           int warnings_len);

/* mode: 0 = leading orthonormal frame, 1 = exact printed closed forms.
 * r0i0i receives {R_0101, R_0202, R_0303}; spatial receives
 * {R_1212, R_1313, R_2323}. */
int gratom_schwarzschild_curvature(const gratom_context* ctx, double M,
                                   double r, int mode, double r0i0i[3],
                                   double spatial[3]);

/* Exact-arithmetic Clebsch-Gordan coefficient (Condon-Shortley),
 * rendered to double; zero on selection-rule failure. */
double gratom_clebsch_gordan(int l1, int m1, int l2, int m2, int l, int m);

/* Gaunt integral of Y*_{lm} Y_{l1m1} Y_{l2m2}. */
double gratom_triple_y_integral(int l1, int m1, int l2, int m2, int l, int m);

/* Closed-form <r^k>_{n,l}, k in [-2, 3], cm^k. */
int gratom_radial_expectation(const gratom_context* ctx, int n, int l, int k,
                              double* out);

/* Bare-atom first-order blocks over the (n, l) manifold, dim = 2l+1.
 * mass_block/nuclear_block are row-major dim x dim (erg); the eigs
 * arrays receive the ascending eigenvalues of each block. Any output
 * pointer may be NULL. */
int gratom_bare_atom_matrix(const gratom_context* ctx, double M, double r,
                            int n, int l, double* mass_block,
                            double* nuclear_block, double* mass_eigs,
                            double* nuclear_eigs);

/* Normal-Zeeman flat shift and its curvature correction (erg). */
int gratom_zeeman_correction(const gratom_context* ctx, double M, double r,
                             double B0, int n, int l, int m_l, double* flat,
                             double* curvature);

/* Eigenvalues (ascending, erg) of the full Stark perturbation over the
 * n-manifold (dim = n^2 values), n <= 4. */
int gratom_stark_eigenvalues(const gratom_context* ctx, double M, double r,
                             double E0, int n, double* eigs);

/* Bohr-quantized circular orbit in the curved background. Outputs may
 * be NULL. */
int gratom_orbit_radius(const gratom_context* ctx, double M, double r,
                        double B0, int n, double* rho, double* v,
                        double* residual);

/* r_a = (4 hbar^2/(3 m Q e |R_0202|))^{1/3}; +inf when R_0202 <= 0. */
int gratom_curvature_radius(const gratom_context* ctx, double M, double r,
                            double* r_a);

/* Run a sweep from config text (see README grammar). out_path/format,
 * when non-NULL, override the config values ("-" = stdout). Returns
 * GRATOM_ERR_PARSE on grammar errors, GRATOM_ERR_HORIZON etc. on row
 * precondition failures. */
int gratom_sweep_run_text(const char* config_text, const char* out_path,
                          const char* format);

/* Same, reading the config from a file. */
int gratom_sweep_run(const char* config_path, const char* out_path,
                     const char* format);

#ifdef __cplusplus
}
#endif

#endif /* GRATOM_H_ */
