#include "hmap/hmap.h"

#include <cstring>
#include <new>
#include <string>

#include "error.hpp"
#include "funcspec.hpp"
#include "harmonic_map.hpp"
#include "parallel.hpp"
#include "render.hpp"
#include "report.hpp"
#include "series.hpp"
#include "shearing.hpp"
#include "verify.hpp"

struct hm_series {
  hmap::Series v;
};
struct hm_map {
  hmap::HarmonicMap v;
};
struct hm_report {
  hmap::Report v;
};

namespace {

thread_local std::string g_last_error;

hm_status set_error(hm_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <class Fn>
hm_status guarded(Fn&& fn) {
  try {
    fn();
    return HM_OK;
  } catch (const hmap::Error& e) {
    return set_error(static_cast<hm_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(HM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(HM_ERR_INTERNAL, e.what());
  }
}

hmap::cplx lift(hm_complex z) { return {z.re, z.im}; }
hm_complex lower(hmap::cplx z) { return {z.real(), z.imag()}; }

hm_status require(bool ok, const char* what) {
  return ok ? HM_OK : set_error(HM_ERR_INVALID_ARGUMENT, what);
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hmap::GridSpec lift(hm_grid g) { return {g.radii, g.angles, g.r_max}; }

hmap::FamilyConstants lift(const hm_family_constants* c) {
  if (c == nullptr) return hmap::FamilyConstants::sh_s();
  return hmap::FamilyConstants::make(c->alpha, c->alpha0, c->beta0);
}

}  // namespace

extern "C" {

const char* hm_version(void) { return "1.0.0"; }

const char* hm_status_name(hm_status status) {
  switch (status) {
    case HM_OK: return "ok";
    case HM_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case HM_ERR_NEAR_ZERO_CONSTANT_TERM: return "near_zero_constant_term";
    case HM_ERR_NONVANISHING_INNER_TERM: return "nonvanishing_inner_term";
    case HM_ERR_RADIUS_OUT_OF_RANGE: return "radius_out_of_range";
    case HM_ERR_INSUFFICIENT_SAMPLES: return "insufficient_samples";
    case HM_ERR_CRITICAL_POINT: return "critical_point";
    case HM_ERR_AFFINE_FACTOR_OUT_OF_DISK: return "affine_factor_out_of_disk";
    case HM_ERR_DILATATION_NOT_BOUNDED: return "dilatation_not_bounded";
    case HM_ERR_BAD_PARAMETER: return "bad_parameter";
    case HM_ERR_ORDER_TOO_LOW: return "order_too_low";
    case HM_ERR_NOT_NORMALIZED: return "not_normalized";
    case HM_ERR_STATIONARY_POINT: return "stationary_point";
    case HM_ERR_NEVER_CONVEX: return "never_convex";
    case HM_ERR_PARSE: return "parse_error";
    case HM_ERR_NONFINITE_SAMPLE: return "nonfinite_sample";
    case HM_ERR_IO: return "io_error";
    case HM_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* hm_last_error(void) { return g_last_error.c_str(); }

void hm_set_jobs(unsigned jobs) { hmap::set_jobs(jobs); }

void hm_string_free(char* str) { delete[] str; }

/* ---- series ---- */

hm_status hm_series_create(const hm_complex* coeffs, size_t count,
                           hm_series** out) {
  if (hm_status s = require(coeffs && out && count > 0, "null argument"))
    return s;
  return guarded([&] {
    std::vector<hmap::cplx> c(count);
    for (size_t i = 0; i < count; ++i) c[i] = lift(coeffs[i]);
    *out = new hm_series{hmap::Series(std::move(c))};
  });
}

void hm_series_free(hm_series* s) { delete s; }

int hm_series_order(const hm_series* s) { return s ? s->v.order() : -1; }

hm_status hm_series_coeff(const hm_series* s, int n, hm_complex* out) {
  if (hm_status st = require(s && out && n >= 0, "null argument")) return st;
  return guarded([&] { *out = lower(s->v.coeff(n)); });
}

hm_status hm_series_extend(const hm_series* s, int order, hm_series** out) {
  if (hm_status st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = new hm_series{s->v.extended(order)}; });
}

#define HM_BINOP(name, fn)                                                  \
  hm_status name(const hm_series* a, const hm_series* b, hm_series** out) { \
    if (hm_status st = require(a && b && out, "null argument")) return st;  \
    return guarded([&] { *out = new hm_series{hmap::fn(a->v, b->v)}; });    \
  }
HM_BINOP(hm_series_add, add)
HM_BINOP(hm_series_sub, sub)
HM_BINOP(hm_series_mul, mul)
HM_BINOP(hm_series_compose, compose)
#undef HM_BINOP

hm_status hm_series_scale(const hm_series* a, hm_complex factor,
                          hm_series** out) {
  if (hm_status st = require(a && out, "null argument")) return st;
  return guarded([&] { *out = new hm_series{hmap::scale(a->v, lift(factor))}; });
}

#define HM_UNOP(name, fn)                                                 \
  hm_status name(const hm_series* a, hm_series** out) {                   \
    if (hm_status st = require(a && out, "null argument")) return st;     \
    return guarded([&] { *out = new hm_series{hmap::fn(a->v)}; });        \
  }
HM_UNOP(hm_series_recip, recip)
HM_UNOP(hm_series_derivative, derivative)
HM_UNOP(hm_series_antiderivative, antiderivative)
#undef HM_UNOP

hm_status hm_series_eval(const hm_series* a, hm_complex z, hm_complex* out) {
  if (hm_status st = require(a && out, "null argument")) return st;
  return guarded([&] { *out = lower(hmap::eval(a->v, lift(z))); });
}

hm_status hm_series_from_samples(const hm_complex* values, size_t count,
                                 double r, int order, hm_series** out) {
  if (hm_status st = require(values && out && count > 0, "null argument"))
    return st;
  return guarded([&] {
    std::vector<hmap::cplx> v(count);
    for (size_t i = 0; i < count; ++i) v[i] = lift(values[i]);
    *out = new hm_series{hmap::coeffs_from_samples(v, r, order)};
  });
}

/* ---- maps ---- */

hm_status hm_map_create(const hm_series* h, const hm_series* g, hm_map** out) {
  if (hm_status st = require(h && g && out, "null argument")) return st;
  return guarded([&] { *out = new hm_map{hmap::HarmonicMap(h->v, g->v)}; });
}

void hm_map_free(hm_map* f) { delete f; }

int hm_map_order(const hm_map* f) { return f ? f->v.order() : -1; }

int hm_map_is_normalized(const hm_map* f) {
  return f && f->v.normalized() ? 1 : 0;
}

hm_status hm_map_coeff_a(const hm_map* f, int n, hm_complex* out) {
  if (hm_status st = require(f && out && n >= 0, "null argument")) return st;
  return guarded([&] { *out = lower(f->v.coeff_a(n)); });
}

hm_status hm_map_coeff_b(const hm_map* f, int n, hm_complex* out) {
  if (hm_status st = require(f && out && n >= 0, "null argument")) return st;
  return guarded([&] { *out = lower(f->v.coeff_b(n)); });
}

hm_status hm_map_part(const hm_map* f, int coanalytic, hm_series** out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] {
    *out = new hm_series{coanalytic ? f->v.g() : f->v.h()};
  });
}

hm_status hm_map_parse(const char* text, int order, hm_map** out) {
  if (hm_status st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new hm_map{hmap::build_map(text, order)}; });
}

const char* hm_catalog_list(void) {
  static const std::string listing = hmap::catalog_listing();
  return listing.c_str();
}

hm_status hm_map_eval(const hm_map* f, hm_complex z, hm_complex* out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = lower(hmap::eval_map(f->v, lift(z))); });
}

hm_status hm_map_jacobian(const hm_map* f, hm_complex z, double* out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = hmap::jacobian(f->v, lift(z)); });
}

hm_status hm_map_dilatation(const hm_map* f, hm_complex z, hm_complex* out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = lower(hmap::dilatation(f->v, lift(z))); });
}

hm_status hm_map_slice(const hm_map* f, hm_complex lambda, hm_series** out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] {
    *out = new hm_series{hmap::slice(f->v, lift(lambda))};
  });
}

hm_status hm_map_affine_combine(const hm_map* f, hm_complex b1, hm_map** out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] {
    *out = new hm_map{hmap::affine_combine(f->v, lift(b1))};
  });
}

hm_status hm_map_koenigs_eval(const hm_map* f, hm_complex zeta, hm_complex z,
                              hm_complex* out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] {
    *out = lower(hmap::koenigs_transform(f->v, lift(zeta), lift(z)));
  });
}

hm_status hm_map_koenigs_series(const hm_map* f, hm_complex zeta, int order,
                                double sample_radius, int sample_count,
                                hm_map** out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] {
    *out = new hm_map{hmap::koenigs_series(f->v, lift(zeta), order,
                                           sample_radius, sample_count)};
  });
}

hm_status hm_map_alexander(const hm_map* f, hm_map** out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = new hm_map{hmap::alexander(f->v)}; });
}

hm_status hm_shear(const hm_series* phi, const hm_series* omega,
                   hm_complex epsilon, int order, hm_map** out) {
  if (hm_status st = require(phi && omega && out, "null argument")) return st;
  return guarded([&] {
    *out = new hm_map{hmap::shear({phi->v, omega->v, lift(epsilon)}, order)};
  });
}

hm_status hm_koebe_slice_coeff(double theta, int n, hm_complex* out) {
  if (hm_status st = require(out != nullptr, "null argument")) return st;
  return guarded([&] { *out = lower(hmap::koebe_slice_coeff(theta, n)); });
}

/* ---- constants ---- */

hm_status hm_family_constants_make(double alpha, double alpha0, double beta0,
                                   hm_family_constants* out) {
  if (hm_status st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    const hmap::FamilyConstants c =
        hmap::FamilyConstants::make(alpha, alpha0, beta0);
    *out = {c.alpha, c.alpha0, c.beta0, c.rho()};
  });
}

hm_family_constants hm_family_constants_shs(void) {
  const hmap::FamilyConstants c = hmap::FamilyConstants::sh_s();
  return {c.alpha, c.alpha0, c.beta0, c.rho()};
}

/* ---- verification ---- */

hm_grid hm_grid_default(void) { return {64, 256, 0.999}; }

int hm_report_passed(const hm_report* rep) {
  return rep && rep->v.passed ? 1 : 0;
}

double hm_report_worst_margin(const hm_report* rep) {
  return rep ? rep->v.worst_margin : 0.0;
}

hm_status hm_report_to_json(const hm_report* rep, char** out) {
  if (hm_status st = require(rep && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(hmap::to_json(rep->v)); });
}

void hm_report_free(hm_report* rep) { delete rep; }

hm_status hm_check_coeff_bounds(const hm_map* f, int max_n, hm_bound_class cls,
                                hm_report** out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] {
    *out = new hm_report{hmap::check_coeff_bounds(
        f->v, max_n, static_cast<hmap::BoundClass>(cls))};
  });
}

hm_status hm_subordination_coeffs(const hm_series* omega, hm_complex epsilon,
                                  hm_series** out, hm_report** report) {
  if (hm_status st = require(omega && out, "null argument")) return st;
  return guarded([&] {
    hmap::Series s = hmap::subordination_coeffs(omega->v, lift(epsilon));
    if (report)
      *report = new hm_report{
          hmap::subordination_report(omega->v, lift(epsilon))};
    *out = new hm_series{std::move(s)};
  });
}

hm_status hm_convolution_bn(const hm_series* phi, const hm_series* omega,
                            hm_complex epsilon, int n, hm_complex* out) {
  if (hm_status st = require(phi && omega && out, "null argument")) return st;
  return guarded([&] {
    *out = lower(hmap::convolution_bn(phi->v, omega->v, lift(epsilon), n));
  });
}

#define HM_GRID_CHECK(name, fn)                                             \
  hm_status name(const hm_map* f, hm_grid grid,                             \
                 const hm_family_constants* constants, hm_report** out) {   \
    if (hm_status st = require(f && out, "null argument")) return st;       \
    return guarded([&] {                                                    \
      *out = new hm_report{hmap::fn(f->v, lift(grid), lift(constants))};    \
    });                                                                     \
  }
HM_GRID_CHECK(hm_check_growth, growth_check)
HM_GRID_CHECK(hm_check_jacobian_bounds, jacobian_bounds_check)
HM_GRID_CHECK(hm_check_derivative_bounds, derivative_bounds_check)
#undef HM_GRID_CHECK

hm_status hm_curvature_at(const hm_map* f, double r, double t, double* out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = hmap::curvature_at(f->v, r, t); });
}

hm_status hm_check_curvature_bounds(const hm_map* f, const double* radii,
                                    size_t radii_count, int angles,
                                    const hm_family_constants* constants,
                                    hm_report** out) {
  if (hm_status st = require(f && radii && out && radii_count > 0,
                             "null argument"))
    return st;
  return guarded([&] {
    *out = new hm_report{hmap::curvature_bounds_check(
        f->v, std::span<const double>(radii, radii_count), angles,
        lift(constants))};
  });
}

hm_status hm_radius_of_convexity(const hm_map* f, int angles, double tol,
                                 double* out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = hmap::radius_of_convexity(f->v, angles, tol); });
}

hm_status hm_check_univalence(const hm_map* f, double r_max, int samples,
                              double delta, hm_report** out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] {
    *out = new hm_report{hmap::univalence_sample_check(
        hmap::as_point_map(f->v), r_max, samples, delta)};
  });
}

hm_status hm_check_univalence_slice(const hm_map* f, hm_complex lambda,
                                    double r_max, int samples, double delta,
                                    hm_report** out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] {
    *out = new hm_report{hmap::univalence_sample_check(
        hmap::as_point_map(hmap::slice(f->v, lift(lambda))), r_max, samples,
        delta)};
  });
}

hm_status hm_check_univalence_fn(hm_complex (*fn)(hm_complex z, void* ctx),
                                 void* ctx, double r_max, int samples,
                                 double delta, hm_report** out) {
  if (hm_status st = require(fn && out, "null argument")) return st;
  return guarded([&] {
    const hmap::PointMap map = [fn, ctx](hmap::cplx z) {
      return lift(fn(lower(z), ctx));
    };
    *out = new hm_report{
        hmap::univalence_sample_check(map, r_max, samples, delta)};
  });
}

hm_status hm_check_local_univalence(const hm_map* f, hm_grid grid,
                                    hm_report** out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] {
    *out = new hm_report{hmap::local_univalence_check(f->v, lift(grid))};
  });
}

hm_status hm_stability_scan(const hm_map* f, int lambda_count,
                            hm_stability_mode mode, hm_report** out) {
  if (hm_status st = require(f && out, "null argument")) return st;
  return guarded([&] {
    *out = new hm_report{hmap::stability_scan(
        f->v, lambda_count,
        mode == HM_STABILITY_CONVEX ? hmap::StabilityMode::convex
                                    : hmap::StabilityMode::univalent)};
  });
}

hm_status hm_theta_search(const hm_map* f, int theta_count, int depth,
                          double r_max, int samples, double delta,
                          double* out_thetas, size_t cap, size_t* out_count) {
  if (hm_status st = require(f && out_count, "null argument")) return st;
  return guarded([&] {
    const hmap::ThetaSearchResult res = hmap::theta_search(
        f->v, theta_count, depth, {r_max, samples, delta});
    *out_count = res.survivors.size();
    if (out_thetas) {
      const size_t n = std::min(cap, res.survivors.size());
      for (size_t i = 0; i < n; ++i) out_thetas[i] = res.survivors[i];
    }
  });
}

hm_status hm_convex_direction_check(const hm_series* phi, double theta,
                                    double r, int samples, int* out) {
  if (hm_status st = require(phi && out, "null argument")) return st;
  return guarded([&] {
    *out = hmap::convex_direction_check(phi->v, theta, r, samples) ? 1 : 0;
  });
}

/* ---- rendering ---- */

hm_render_spec hm_render_spec_default(void) {
  return {16, 8, 512, 0.95, 800, 800, nullptr, nullptr};
}

hm_status hm_render_grid(const hm_map* f, const hm_render_spec* spec,
                         char** svg_out) {
  if (hm_status st = require(f && svg_out, "null argument")) return st;
  return guarded([&] {
    hmap::RenderSpec rs;
    if (spec) {
      rs.rays = spec->rays;
      rs.circles = spec->circles;
      rs.samples_per_curve = spec->samples_per_curve;
      rs.r_max = spec->r_max;
      rs.width = spec->width;
      rs.height = spec->height;
      if (spec->ray_stroke) rs.ray_stroke = spec->ray_stroke;
      if (spec->circle_stroke) rs.circle_stroke = spec->circle_stroke;
    }
    *svg_out = copy_string(hmap::render_grid(hmap::as_point_map(f->v), rs));
  });
}

} /* extern "C" */
