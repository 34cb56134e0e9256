#ifndef HOROCYCLIC_H
#define HOROCYCLIC_H

/* C interface to the horocyclic geometry library. All functions return an
 * hc_status; computed values come back through out-parameters. Small value
 * types are plain structs; orbits and verification runs are opaque handles
 * with explicit destroy functions. */

#include <stdint.h>

#if defined(_WIN32)
#  if defined(HC_BUILD_SHARED)
#    define HC_API __declspec(dllexport)
#  else
#    define HC_API __declspec(dllimport)
#  endif
#else
#  define HC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERROR_INVALID_POINT,
  HC_ERROR_INVALID_MAP,
  HC_ERROR_SINGULAR_MAP,
  HC_ERROR_UNSUPPORTED_CURVATURE,
  HC_ERROR_ZERO_FOLIATION,
  HC_ERROR_INVALID_CURVE,
  HC_ERROR_INVALID_COORDINATES,
  HC_ERROR_NOT_A_CURVE,
  HC_ERROR_ZERO_VECTOR,
  HC_ERROR_INVALID_RANGE,
  HC_ERROR_BASE_MISMATCH,
  HC_ERROR_NOT_QUASICONFORMAL,
  HC_ERROR_UNDEFINED_DISC,
  HC_ERROR_INVALID_ARGUMENT,
  HC_ERROR_INTERNAL,
} hc_status;

HC_API const char* hc_status_name(hc_status status);

/* tau = u + i v with v > 0 */
typedef struct hc_point {
  double u;
  double v;
} hc_point;

typedef struct hc_mobius {
  double m11, m12, m21, m22;
} hc_mobius;

/* tangent vector xi + i eta at base */
typedef struct hc_tangent {
  hc_point base;
  double xi;
  double eta;
} hc_tangent;

/* one-form p du + q dv at base */
typedef struct hc_one_form {
  hc_point base;
  double p;
  double q;
} hc_one_form;

/* measured foliation class [a,b]; canonical form has b > 0, or b = 0, a > 0 */
typedef struct hc_foliation {
  double a;
  double b;
} hc_foliation;

typedef struct hc_fn_coords {
  double ell;
  double theta;
} hc_fn_coords;

/* quadratic differential (zeta_re + i zeta_im) dz^2 on the torus at base */
typedef struct hc_quad_diff {
  hc_point base;
  double zeta_re;
  double zeta_im;
} hc_quad_diff;

typedef enum hc_norm_kind {
  HC_NORM_TEICHMULLER = 0,
  HC_NORM_HOROCYCLIC = 1,
  HC_NORM_THURSTON = 2,
  HC_NORM_WEIL_PETERSSON = 3,
} hc_norm_kind;

/* ---- half-plane geometry ---- */

HC_API hc_status hc_mobius_apply(hc_mobius m, hc_point tau, hc_point* out);
HC_API hc_status hc_mobius_normalized(hc_mobius m, hc_mobius* out);
HC_API hc_status hc_hyperbolic_element(hc_tangent w, double curvature, double* out);
HC_API hc_status hc_hyperbolic_distance(hc_point t1, hc_point t2, double* out);
HC_API hc_status hc_j0_apply(hc_tangent w, hc_tangent* out);

/* ---- measured foliations ---- */

HC_API hc_status hc_foliation_canonicalize(double a, double b, hc_foliation* out);
HC_API hc_status hc_foliation_from_curve(double weight, long p, long q, hc_foliation* out);
HC_API hc_status hc_intersection(hc_foliation f1, hc_foliation f2, double* out);
HC_API hc_status hc_slope(hc_foliation f, double* out); /* +inf when b = 0 */
HC_API hc_status hc_flat_length(hc_foliation f, hc_point tau, double* out);
HC_API hc_status hc_extremal_length(hc_foliation f, hc_point tau, double* out);
HC_API hc_status hc_d_length(hc_foliation f, hc_point tau, hc_one_form* out);

/* ---- deformations ---- */

HC_API hc_status hc_fn_from_point(hc_point tau, hc_fn_coords* out);
HC_API hc_status hc_fn_to_point(hc_fn_coords c, hc_point* out);
HC_API hc_status hc_earthquake_map(hc_foliation f, double t, hc_point tau, hc_mobius* out);
HC_API hc_status hc_earthquake_apply(hc_foliation f, double t, hc_point tau, hc_point* out);
HC_API hc_status hc_dehn_twist_point(hc_foliation f, hc_point tau, hc_point* out);
HC_API hc_status hc_horocyclic_vector(hc_foliation f, hc_point tau, hc_tangent* out);
HC_API hc_status hc_foliation_from_vector(hc_tangent w, hc_foliation* out);

/* ---- Weil-Petersson form ---- */

HC_API hc_status hc_wp_inner(hc_tangent w1, hc_tangent w2, double* out);
HC_API hc_status hc_wp_omega(hc_tangent w1, hc_tangent w2, double* out);
HC_API hc_status hc_contract_omega(hc_tangent w, hc_one_form* out);
HC_API hc_status hc_wp_gradient_length(hc_foliation f, hc_point tau, hc_tangent* out);

/* ---- norms and duality ---- */

HC_API hc_status hc_norm(hc_norm_kind kind, hc_tangent w, double* out);
HC_API hc_status hc_conorm(hc_norm_kind kind, hc_one_form alpha, double* out);
HC_API hc_status hc_quad_conorm_teich(hc_quad_diff q, double* out);
HC_API hc_status hc_legendre_numeric(hc_quad_diff q, hc_tangent* out);

/* ---- quadratic differentials ---- */

HC_API hc_status hc_pairing(hc_tangent w, hc_quad_diff q, double* out_re, double* out_im);
HC_API hc_status hc_hubbard_masur(hc_foliation f, hc_point tau, hc_quad_diff* out);
HC_API hc_status hc_gardiner_differential(hc_foliation f, hc_point tau, hc_tangent w,
                                          double* out);
HC_API hc_status hc_beltrami_to_period(hc_point base, double mu_re, double mu_im,
                                       hc_point* out);
HC_API hc_status hc_teich_disc(hc_quad_diff q, double zeta_re, double zeta_im,
                               hc_point* out);
HC_API hc_status hc_horo_deform_via_disc(hc_foliation f, double t, hc_point tau,
                                         hc_point* out);
HC_API hc_status hc_infinitesimal_teich(hc_quad_diff q, hc_tangent* out);
HC_API hc_status hc_horocyclic_vector_via_disc(hc_foliation f, hc_point tau,
                                               hc_tangent* out);
HC_API hc_status hc_duality_check(hc_foliation f, hc_point tau, hc_tangent* out_legendre,
                                  hc_tangent* out_flow);

/* ---- orbit sampling ---- */

typedef struct hc_orbit hc_orbit;

HC_API hc_status hc_orbit_sample(hc_foliation f, hc_point tau, double t_min, double t_max,
                                 int steps, hc_orbit** out);
HC_API int hc_orbit_size(const hc_orbit* orbit);
HC_API hc_status hc_orbit_row(const hc_orbit* orbit, int index, double* t, double* u,
                              double* v, double* ell);
/* Returned strings stay owned by the handle and live until it is destroyed. */
HC_API const char* hc_orbit_csv(hc_orbit* orbit);
HC_API const char* hc_orbit_svg(hc_orbit* orbit);
HC_API void hc_orbit_destroy(hc_orbit* orbit);

/* ---- verification suites ---- */

typedef struct hc_verify_result hc_verify_result;

/* suite: wolpert, gradient, norms, isometry, gardiner, disc, legendre,
 * fn_form, or all. Deterministic in (suite, samples, seed, tolerances). */
HC_API hc_status hc_verify_run(const char* suite, int samples, uint64_t seed,
                               double tol_closed, double tol_fd, hc_verify_result** out);
HC_API int hc_verify_result_count(const hc_verify_result* result);
HC_API int hc_verify_result_all_pass(const hc_verify_result* result);
/* JSON array of report objects; owned by the handle. */
HC_API const char* hc_verify_result_json(hc_verify_result* result);
HC_API void hc_verify_result_destroy(hc_verify_result* result);

#ifdef __cplusplus
}
#endif

#endif /* HOROCYCLIC_H */
