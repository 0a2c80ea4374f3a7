/* Public C API of libhmap: planar harmonic mappings via the shearing
 * construction, coefficient/growth/Jacobian/derivative/curvature bound
 * verification, univalence scans and SVG grid rendering.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return HM_OK on success and an error code otherwise; the
 * message for the most recent error on the calling thread is available
 * via hm_last_error(). Output handles are only written on success.
 */
#ifndef HMAP_H
#define HMAP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hm_status {
  HM_OK = 0,
  HM_ERR_INVALID_ARGUMENT = 1,
  HM_ERR_NEAR_ZERO_CONSTANT_TERM = 2,
  HM_ERR_NONVANISHING_INNER_TERM = 3,
  HM_ERR_RADIUS_OUT_OF_RANGE = 4,
  HM_ERR_INSUFFICIENT_SAMPLES = 5,
  HM_ERR_CRITICAL_POINT = 6,
  HM_ERR_AFFINE_FACTOR_OUT_OF_DISK = 7,
  HM_ERR_DILATATION_NOT_BOUNDED = 8,
  HM_ERR_BAD_PARAMETER = 9,
  HM_ERR_ORDER_TOO_LOW = 10,
  HM_ERR_NOT_NORMALIZED = 11,
  HM_ERR_STATIONARY_POINT = 12,
  HM_ERR_NEVER_CONVEX = 13,
  HM_ERR_PARSE = 14,
  HM_ERR_NONFINITE_SAMPLE = 15,
  HM_ERR_IO = 16,
  HM_ERR_INTERNAL = 99
} hm_status;

typedef struct hm_complex {
  double re;
  double im;
} hm_complex;

typedef struct hm_series hm_series;   /* truncated Taylor series */
typedef struct hm_map hm_map;         /* harmonic map h + conj(g) */
typedef struct hm_report hm_report;   /* verification report */

const char* hm_version(void);
const char* hm_status_name(hm_status status);
/* Message of the most recent failure on this thread; valid until the next
 * failing call. */
const char* hm_last_error(void);
/* Worker count for grid scans; 0 picks the hardware concurrency. Results
 * are identical for every setting. */
void hm_set_jobs(unsigned jobs);
/* Frees strings returned through char** out-parameters. */
void hm_string_free(char* str);

/* ---- truncated series ------------------------------------------------- */

/* count coefficients c0..c_{count-1}; truncation order is count-1. */
hm_status hm_series_create(const hm_complex* coeffs, size_t count,
                           hm_series** out);
void hm_series_free(hm_series* s);
int hm_series_order(const hm_series* s);
hm_status hm_series_coeff(const hm_series* s, int n, hm_complex* out);
/* Same coefficients at another truncation order (explicit pad/cut). */
hm_status hm_series_extend(const hm_series* s, int order, hm_series** out);

hm_status hm_series_add(const hm_series* a, const hm_series* b,
                        hm_series** out);
hm_status hm_series_sub(const hm_series* a, const hm_series* b,
                        hm_series** out);
/* Cauchy product at the minimum of the two orders. */
hm_status hm_series_mul(const hm_series* a, const hm_series* b,
                        hm_series** out);
hm_status hm_series_scale(const hm_series* a, hm_complex factor,
                          hm_series** out);
hm_status hm_series_recip(const hm_series* a, hm_series** out);
hm_status hm_series_derivative(const hm_series* a, hm_series** out);
hm_status hm_series_antiderivative(const hm_series* a, hm_series** out);
hm_status hm_series_compose(const hm_series* outer, const hm_series* inner,
                            hm_series** out);
hm_status hm_series_eval(const hm_series* a, hm_complex z, hm_complex* out);
/* Taylor coefficients from samples on the circle of radius r (count
 * equally spaced samples starting at angle 0; count > 2*order). */
hm_status hm_series_from_samples(const hm_complex* values, size_t count,
                                 double r, int order, hm_series** out);

/* ---- harmonic maps ----------------------------------------------------- */

hm_status hm_map_create(const hm_series* h, const hm_series* g, hm_map** out);
void hm_map_free(hm_map* f);
int hm_map_order(const hm_map* f);
int hm_map_is_normalized(const hm_map* f);
hm_status hm_map_coeff_a(const hm_map* f, int n, hm_complex* out);
hm_status hm_map_coeff_b(const hm_map* f, int n, hm_complex* out);
hm_status hm_map_part(const hm_map* f, int coanalytic, hm_series** out);

/* Build a map from a textual function spec: either a catalog name such as
 * "harmonic_koebe", "f4", "f1(n=3)", "f_a_lambda(a=2.4142,lambda=1)", or a
 * custom shear "shear phi=0,1/1,-2,1 omega=0,1 theta=pi" (rational
 * coefficient lists p/q, constant term first). */
hm_status hm_map_parse(const char* text, int order, hm_map** out);
/* Human-readable catalog listing. */
const char* hm_catalog_list(void);

hm_status hm_map_eval(const hm_map* f, hm_complex z, hm_complex* out);
hm_status hm_map_jacobian(const hm_map* f, hm_complex z, double* out);
hm_status hm_map_dilatation(const hm_map* f, hm_complex z, hm_complex* out);
hm_status hm_map_slice(const hm_map* f, hm_complex lambda, hm_series** out);
hm_status hm_map_affine_combine(const hm_map* f, hm_complex b1, hm_map** out);
hm_status hm_map_koenigs_eval(const hm_map* f, hm_complex zeta, hm_complex z,
                              hm_complex* out);
/* Series form of the renormalized map, recovered by circle sampling. */
hm_status hm_map_koenigs_series(const hm_map* f, hm_complex zeta, int order,
                                double sample_radius, int sample_count,
                                hm_map** out);
hm_status hm_map_alexander(const hm_map* f, hm_map** out);

/* Shearing construction: h' (1 + eps*omega) = phi', g' = omega h'. */
hm_status hm_shear(const hm_series* phi, const hm_series* omega,
                   hm_complex epsilon, int order, hm_map** out);
/* Closed form of coefficient n of the slice h_K + e^{i theta} g_K. */
hm_status hm_koebe_slice_coeff(double theta, int n, hm_complex* out);

/* ---- family constants -------------------------------------------------- */

typedef struct hm_family_constants {
  double alpha;  /* sup |a2| over the affine family */
  double alpha0; /* sup |a2| with b1 = 0 */
  double beta0;  /* sup |b2| with b1 = 0 */
  double rho;    /* alpha0+beta0 - sqrt((alpha0+beta0)^2 - 1), derived */
} hm_family_constants;

hm_status hm_family_constants_make(double alpha, double alpha0, double beta0,
                                   hm_family_constants* out);
/* The (3, 5/2, 1/2) instantiation with rho = 3 - 2 sqrt(2). */
hm_family_constants hm_family_constants_shs(void);

/* ---- verification ------------------------------------------------------ */

typedef struct hm_grid {
  int radii;
  int angles;
  double r_max;
} hm_grid;

hm_grid hm_grid_default(void); /* 64 x 256, r_max = 0.999 */

typedef enum hm_bound_class {
  HM_BOUNDS_SH0S = 0,
  HM_BOUNDS_CH0C = 1,
  HM_BOUNDS_SHS = 2,
  HM_BOUNDS_CHC = 3
} hm_bound_class;

int hm_report_passed(const hm_report* rep);
double hm_report_worst_margin(const hm_report* rep);
/* JSON with stable fields schema/check_name/passed/worst_margin/witness/
 * details; free with hm_string_free. */
hm_status hm_report_to_json(const hm_report* rep, char** out);
void hm_report_free(hm_report* rep);

hm_status hm_check_coeff_bounds(const hm_map* f, int max_n,
                                hm_bound_class cls, hm_report** out);
/* Series of omega/(1+eps*omega); report (optional, may be NULL) carries the
 * |omega_n| <= 1 postcondition margins. */
hm_status hm_subordination_coeffs(const hm_series* omega, hm_complex epsilon,
                                  hm_series** out, hm_report** report);
hm_status hm_convolution_bn(const hm_series* phi, const hm_series* omega,
                            hm_complex epsilon, int n, hm_complex* out);
hm_status hm_check_growth(const hm_map* f, hm_grid grid,
                          const hm_family_constants* constants,
                          hm_report** out);
hm_status hm_check_jacobian_bounds(const hm_map* f, hm_grid grid,
                                   const hm_family_constants* constants,
                                   hm_report** out);
hm_status hm_check_derivative_bounds(const hm_map* f, hm_grid grid,
                                     const hm_family_constants* constants,
                                     hm_report** out);
hm_status hm_curvature_at(const hm_map* f, double r, double t, double* out);
hm_status hm_check_curvature_bounds(const hm_map* f, const double* radii,
                                    size_t radii_count, int angles,
                                    const hm_family_constants* constants,
                                    hm_report** out);
hm_status hm_radius_of_convexity(const hm_map* f, int angles, double tol,
                                 double* out);

/* Collision scan of the harmonic map itself on a ~samples-point polar grid;
 * a pass means "no collision found", necessary-only evidence. */
hm_status hm_check_univalence(const hm_map* f, double r_max, int samples,
                              double delta, hm_report** out);
/* Same scan on the analytic slice h + lambda*g. */
hm_status hm_check_univalence_slice(const hm_map* f, hm_complex lambda,
                                    double r_max, int samples, double delta,
                                    hm_report** out);
/* Same scan on an arbitrary point map. */
hm_status hm_check_univalence_fn(hm_complex (*fn)(hm_complex z, void* ctx),
                                 void* ctx, double r_max, int samples,
                                 double delta, hm_report** out);
hm_status hm_check_local_univalence(const hm_map* f, hm_grid grid,
                                    hm_report** out);

typedef enum hm_stability_mode {
  HM_STABILITY_UNIVALENT = 0,
  HM_STABILITY_CONVEX = 1
} hm_stability_mode;

hm_status hm_stability_scan(const hm_map* f, int lambda_count,
                            hm_stability_mode mode, hm_report** out);
/* Surviving theta cells written to out_thetas (capacity cap); the total
 * survivor count goes to out_count even when it exceeds cap. */
hm_status hm_theta_search(const hm_map* f, int theta_count, int depth,
                          double r_max, int samples, double delta,
                          double* out_thetas, size_t cap, size_t* out_count);
hm_status hm_convex_direction_check(const hm_series* phi, double theta,
                                    double r, int samples, int* out);

/* ---- rendering ---------------------------------------------------------- */

typedef struct hm_render_spec {
  int rays;
  int circles;
  int samples_per_curve;
  double r_max;
  int width;
  int height;
  const char* ray_stroke;    /* NULL for the default */
  const char* circle_stroke; /* NULL for the default */
} hm_render_spec;

hm_render_spec hm_render_spec_default(void);
/* SVG document (free with hm_string_free); byte-identical for identical
 * inputs. */
hm_status hm_render_grid(const hm_map* f, const hm_render_spec* spec,
                         char** svg_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HMAP_H */
