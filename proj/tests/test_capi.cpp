// Exercises the public C surface the way an external client would: only
// through hmap/hmap.h.
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "hmap/hmap.h"

namespace {

double cabs(hm_complex z) { return std::hypot(z.re, z.im); }

struct SeriesHandle {
  hm_series* p = nullptr;
  ~SeriesHandle() { hm_series_free(p); }
};

struct MapHandle {
  hm_map* p = nullptr;
  ~MapHandle() { hm_map_free(p); }
};

struct ReportHandle {
  hm_report* p = nullptr;
  ~ReportHandle() { hm_report_free(p); }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and status names") {
  CHECK(hm_version() != nullptr);
  CHECK(std::strcmp(hm_status_name(HM_OK), "ok") == 0);
  CHECK(std::strcmp(hm_status_name(HM_ERR_PARSE), "parse_error") == 0);
}

TEST_CASE("series arithmetic through handles") {
  const hm_complex one_minus_z[] = {{1, 0}, {-1, 0}};
  SeriesHandle a, ext, inv, geo, prod;
  REQUIRE(hm_series_create(one_minus_z, 2, &a.p) == HM_OK);
  CHECK(hm_series_order(a.p) == 1);
  REQUIRE(hm_series_extend(a.p, 20, &ext.p) == HM_OK);
  REQUIRE(hm_series_recip(ext.p, &inv.p) == HM_OK);
  hm_complex c;
  for (int n = 0; n <= 20; ++n) {
    REQUIRE(hm_series_coeff(inv.p, n, &c) == HM_OK);
    CHECK(std::abs(c.re - 1.0) <= 1e-13);
    CHECK(std::abs(c.im) <= 1e-13);
  }
  REQUIRE(hm_series_mul(ext.p, inv.p, &prod.p) == HM_OK);
  REQUIRE(hm_series_coeff(prod.p, 0, &c) == HM_OK);
  CHECK(std::abs(c.re - 1.0) <= 1e-13);
  REQUIRE(hm_series_coeff(prod.p, 7, &c) == HM_OK);
  CHECK(cabs(c) <= 1e-13);

  REQUIRE(hm_series_eval(inv.p, {-0.5, 0.0}, &c) == HM_OK);
  CHECK(std::abs(c.re - 2.0 / 3.0) <= 1e-6);  // 1/(1-z) at -1/2, truncated

  hm_series* bad = nullptr;
  const hm_complex no_const[] = {{0, 0}, {1, 0}};
  SeriesHandle z;
  REQUIRE(hm_series_create(no_const, 2, &z.p) == HM_OK);
  CHECK(hm_series_recip(z.p, &bad) == HM_ERR_NEAR_ZERO_CONSTANT_TERM);
  CHECK(bad == nullptr);
  CHECK(std::strlen(hm_last_error()) > 0);
}

TEST_CASE("coefficients from circle samples") {
  std::vector<hm_complex> vals(64);
  for (int k = 0; k < 64; ++k) {
    const double t = 2.0 * 3.14159265358979323846 * k / 64.0;
    const double r = 0.5;
    // samples of z^2
    vals[size_t(k)] = {r * r * std::cos(2 * t), r * r * std::sin(2 * t)};
  }
  SeriesHandle s;
  REQUIRE(hm_series_from_samples(vals.data(), vals.size(), 0.5, 10, &s.p) ==
          HM_OK);
  hm_complex c;
  REQUIRE(hm_series_coeff(s.p, 2, &c) == HM_OK);
  CHECK(std::abs(c.re - 1.0) <= 1e-12);
  CHECK(hm_series_from_samples(vals.data(), vals.size(), 0.5, 40, &s.p) ==
        HM_ERR_INSUFFICIENT_SAMPLES);
  CHECK(hm_series_from_samples(vals.data(), vals.size(), 1.5, 10, &s.p) ==
        HM_ERR_RADIUS_OUT_OF_RANGE);
}

TEST_CASE("map construction, parsing and pointwise operators") {
  MapHandle K;
  REQUIRE(hm_map_parse("harmonic_koebe", 64, &K.p) == HM_OK);
  CHECK(hm_map_order(K.p) == 64);
  CHECK(hm_map_is_normalized(K.p) == 1);
  hm_complex c;
  REQUIRE(hm_map_coeff_a(K.p, 2, &c) == HM_OK);
  CHECK(std::abs(c.re - 2.5) <= 1e-15);
  REQUIRE(hm_map_coeff_b(K.p, 2, &c) == HM_OK);
  CHECK(std::abs(c.re - 0.5) <= 1e-15);

  double jac = 0.0;
  REQUIRE(hm_map_jacobian(K.p, {0, 0}, &jac) == HM_OK);
  CHECK(std::abs(jac - 1.0) <= 1e-14);
  REQUIRE(hm_map_dilatation(K.p, {0.5, 0}, &c) == HM_OK);
  CHECK(std::abs(c.re - 0.5) + std::abs(c.im) <= 1e-12);
  REQUIRE(hm_map_eval(K.p, {-0.5, 0}, &c) == HM_OK);
  CHECK(std::abs(c.re + 13.0 / 81.0) <= 1e-12);

  MapHandle sheared;
  REQUIRE(hm_map_parse("shear phi=0,1/1,-2,1 omega=0,1 theta=pi", 64,
                       &sheared.p) == HM_OK);
  hm_complex c2;
  for (int n = 0; n <= 64; n += 7) {
    REQUIRE(hm_map_coeff_a(K.p, n, &c) == HM_OK);
    REQUIRE(hm_map_coeff_a(sheared.p, n, &c2) == HM_OK);
    CHECK(std::abs(c.re - c2.re) <= 1e-9 * std::max(1.0, std::abs(c.re)));
  }

  MapHandle bad;
  CHECK(hm_map_parse("f1(n=1)", 8, &bad.p) == HM_ERR_BAD_PARAMETER);
  CHECK(hm_map_parse("f1(n=", 8, &bad.p) == HM_ERR_PARSE);
  CHECK(hm_catalog_list() != nullptr);
}

TEST_CASE("programmatic shear and slices") {
  std::vector<hm_complex> phi(31), omega{{0, 0}, {1, 0}};
  for (int n = 0; n <= 30; ++n) phi[size_t(n)] = {double(n), 0.0};
  SeriesHandle sphi, somega;
  REQUIRE(hm_series_create(phi.data(), phi.size(), &sphi.p) == HM_OK);
  REQUIRE(hm_series_create(omega.data(), omega.size(), &somega.p) == HM_OK);
  MapHandle f;
  REQUIRE(hm_shear(sphi.p, somega.p, {-1, 0}, 30, &f.p) == HM_OK);
  SeriesHandle sl;
  REQUIRE(hm_map_slice(f.p, {-1, 0}, &sl.p) == HM_OK);
  hm_complex c;
  for (int n = 2; n <= 30; n += 4) {
    REQUIRE(hm_series_coeff(sl.p, n, &c) == HM_OK);
    CHECK(std::abs(c.re - double(n)) <= 1e-9 * n);
    REQUIRE(hm_koebe_slice_coeff(3.14159265358979323846, n, &c) == HM_OK);
    CHECK(std::abs(c.re - double(n)) <= 1e-9 * n);
  }

  MapHandle aff;
  REQUIRE(hm_map_affine_combine(f.p, {0.5, 0}, &aff.p) == HM_OK);
  REQUIRE(hm_map_coeff_a(aff.p, 2, &c) == HM_OK);
  CHECK(std::abs(c.re - 2.75) <= 1e-12);
  CHECK(hm_map_affine_combine(f.p, {1.0, 0}, &aff.p) ==
        HM_ERR_AFFINE_FACTOR_OUT_OF_DISK);

  MapHandle alex;
  REQUIRE(hm_map_alexander(f.p, &alex.p) == HM_OK);
  REQUIRE(hm_map_coeff_a(alex.p, 3, &c) == HM_OK);
  CHECK(std::abs(c.re - 3.0 * 14.0 / 3.0) <= 1e-9);  // n * (n+1)(2n+1)/6

  REQUIRE(hm_map_koenigs_eval(f.p, {0, 0}, {0.3, 0.1}, &c) == HM_OK);
  hm_complex direct;
  REQUIRE(hm_map_eval(f.p, {0.3, 0.1}, &direct) == HM_OK);
  CHECK(std::abs(c.re - direct.re) + std::abs(c.im - direct.im) <= 1e-10);
}

TEST_CASE("family constants") {
  const hm_family_constants c = hm_family_constants_shs();
  CHECK(c.alpha == 3.0);
  CHECK(c.alpha0 == 2.5);
  CHECK(c.beta0 == 0.5);
  CHECK(std::abs(c.rho - (3.0 - 2.0 * std::sqrt(2.0))) <= 1e-15);
  hm_family_constants out;
  CHECK(hm_family_constants_make(3.0, 0.2, 0.2, &out) == HM_ERR_BAD_PARAMETER);
}

TEST_CASE("verification reports and json") {
  MapHandle K;
  REQUIRE(hm_map_parse("harmonic_koebe", 30, &K.p) == HM_OK);
  ReportHandle rep;
  REQUIRE(hm_check_coeff_bounds(K.p, 30, HM_BOUNDS_SH0S, &rep.p) == HM_OK);
  CHECK(hm_report_passed(rep.p) == 1);
  CHECK(std::abs(hm_report_worst_margin(rep.p)) <= 1e-9);
  char* json = nullptr;
  REQUIRE(hm_report_to_json(rep.p, &json) == HM_OK);
  const nlohmann::json j = nlohmann::json::parse(json);
  hm_string_free(json);
  CHECK(j["schema"] == 1);
  CHECK(j["passed"] == true);
  CHECK(j["details"].size() == 29);

  ReportHandle bad;
  CHECK(hm_check_coeff_bounds(K.p, 64, HM_BOUNDS_SH0S, &bad.p) ==
        HM_ERR_ORDER_TOO_LOW);

  MapHandle K512;
  REQUIRE(hm_map_parse("harmonic_koebe", 512, &K512.p) == HM_OK);
  const hm_family_constants consts = hm_family_constants_shs();
  ReportHandle growth;
  REQUIRE(hm_check_growth(K512.p, {16, 64, 0.9}, &consts, &growth.p) == HM_OK);
  CHECK(hm_report_passed(growth.p) == 1);

  ReportHandle local;
  const hm_complex h0[] = {{0, 0}, {1, 0}, {1, 0}};
  const hm_complex g0[] = {{0, 0}, {0, 0}, {1, 0}};
  SeriesHandle h, g;
  REQUIRE(hm_series_create(h0, 3, &h.p) == HM_OK);
  REQUIRE(hm_series_create(g0, 3, &g.p) == HM_OK);
  MapHandle r1;
  REQUIRE(hm_map_create(h.p, g.p, &r1.p) == HM_OK);
  REQUIRE(hm_check_local_univalence(r1.p, hm_grid_default(), &local.p) ==
          HM_OK);
  CHECK(hm_report_passed(local.p) == 0);
}

TEST_CASE("scans and curvature through the C surface") {
  MapHandle f1;
  REQUIRE(hm_map_parse("f1(n=3)", 64, &f1.p) == HM_OK);
  size_t count = 0;
  std::vector<double> thetas(24);
  REQUIRE(hm_theta_search(f1.p, 24, 40, 0.9, 800, 1e-4, thetas.data(),
                          thetas.size(), &count) == HM_OK);
  CHECK(count == 24);

  MapHandle id;
  const hm_complex idh[] = {{0, 0}, {1, 0}};
  const hm_complex idg[] = {{0, 0}};
  SeriesHandle h, g;
  REQUIRE(hm_series_create(idh, 2, &h.p) == HM_OK);
  REQUIRE(hm_series_create(idg, 1, &g.p) == HM_OK);
  REQUIRE(hm_map_create(h.p, g.p, &id.p) == HM_OK);
  double kappa = 0.0;
  REQUIRE(hm_curvature_at(id.p, 0.25, 1.0, &kappa) == HM_OK);
  CHECK(std::abs(kappa - 4.0) <= 1e-12);
  double radius = 0.0;
  REQUIRE(hm_radius_of_convexity(id.p, 64, 1e-9, &radius) == HM_OK);
  CHECK(std::abs(radius - 0.999) <= 1e-12);

  ReportHandle uni;
  REQUIRE(hm_check_univalence(id.p, 0.9, 400, 1e-4, &uni.p) == HM_OK);
  CHECK(hm_report_passed(uni.p) == 1);

  SeriesHandle omega;
  const hm_complex zc[] = {{0, 0}, {1, 0}};
  REQUIRE(hm_series_create(zc, 2, &omega.p) == HM_OK);
  SeriesHandle ext, sub;
  REQUIRE(hm_series_extend(omega.p, 12, &ext.p) == HM_OK);
  ReportHandle subrep;
  REQUIRE(hm_subordination_coeffs(ext.p, {-1, 0}, &sub.p, &subrep.p) == HM_OK);
  CHECK(hm_report_passed(subrep.p) == 1);
  hm_complex c;
  REQUIRE(hm_series_coeff(sub.p, 5, &c) == HM_OK);
  CHECK(std::abs(c.re - 1.0) <= 1e-13);
  REQUIRE(hm_convolution_bn(ext.p, ext.p, {-1, 0}, 2, &c) == HM_OK);

  int convex = 0;
  SeriesHandle zid;
  REQUIRE(hm_series_extend(omega.p, 8, &zid.p) == HM_OK);
  REQUIRE(hm_convex_direction_check(zid.p, 0.0, 0.5, 256, &convex) == HM_OK);
  CHECK(convex == 1);
}

TEST_CASE("rendering through the C surface is byte stable") {
  MapHandle f3;
  REQUIRE(hm_map_parse("f3", 256, &f3.p) == HM_OK);
  hm_render_spec spec = hm_render_spec_default();
  spec.samples_per_curve = 128;
  char* svg1 = nullptr;
  char* svg2 = nullptr;
  REQUIRE(hm_render_grid(f3.p, &spec, &svg1) == HM_OK);
  REQUIRE(hm_render_grid(f3.p, &spec, &svg2) == HM_OK);
  CHECK(std::string(svg1) == std::string(svg2));
  CHECK(std::string(svg1).find("<svg") != std::string::npos);
  hm_string_free(svg1);
  hm_string_free(svg2);
}

TEST_CASE("stability scan flags the quarter-turn failure") {
  MapHandle K;
  REQUIRE(hm_map_parse("harmonic_koebe", 1280, &K.p) == HM_OK);
  hm_set_jobs(0);
  ReportHandle rep;
  REQUIRE(hm_stability_scan(K.p, 32, HM_STABILITY_UNIVALENT, &rep.p) == HM_OK);
  CHECK(hm_report_passed(rep.p) == 0);
  hm_set_jobs(1);
}

}  // TEST_SUITE
