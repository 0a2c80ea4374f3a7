#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "error.hpp"
#include "oracles.hpp"
#include "shearing.hpp"
#include "specgen.hpp"

using hmap::catalog;
using hmap::cplx;
using hmap::HarmonicMap;
using hmap::Series;
using hmap::shear;
using hmap::ShearSpec;

namespace {

ShearSpec koebe_data(int order, int omega_power, double omega_sign) {
  std::vector<cplx> phi(size_t(order) + 1);
  for (int n = 0; n <= order; ++n) phi[size_t(n)] = double(n);
  return {Series(phi), Series::monomial(order, omega_power, omega_sign),
          cplx(-1.0, 0.0)};
}

void check_map_coeffs(const HarmonicMap& f, auto a_of, auto b_of, double tol) {
  for (int n = 1; n <= f.order(); ++n) {
    const double a = a_of(n), b = b_of(n);
    CHECK(std::abs(f.coeff_a(n) - a) <= tol * std::max(1.0, std::abs(a)));
    CHECK(std::abs(f.coeff_b(n) - b) <= tol * std::max(1.0, std::abs(b)));
  }
}

}  // namespace

TEST_SUITE("shearing") {

TEST_CASE("shear of the slit map with omega = z gives the extremal map") {
  const HarmonicMap f = shear(koebe_data(30, 1, 1.0), 30);
  check_map_coeffs(
      f, [](int n) { return double((n + 1) * (2 * n + 1)) / 6.0; },
      [](int n) { return double((n - 1) * (2 * n - 1)) / 6.0; }, 1e-9);
}

TEST_CASE("shear with omega = -z gives the half-plane map") {
  const HarmonicMap f = shear(koebe_data(30, 1, -1.0), 30);
  check_map_coeffs(
      f, [](int n) { return double(n + 1) / 2.0; },
      [](int n) { return double(n - 1) / 2.0; }, 1e-9);
}

TEST_CASE("shear with omega = z^2") {
  const HarmonicMap f = shear(koebe_data(30, 2, 1.0), 30);
  check_map_coeffs(
      f, [](int n) { return double((n + 1) * (n + 2)) / 6.0; },
      [](int n) { return double((n - 1) * (n - 2)) / 6.0; }, 1e-9);
  // |a_n| - |b_n| = n holds exactly on the integer numerators
  for (int n = 2; n <= 30; ++n)
    CHECK((n + 1) * (n + 2) - (n - 1) * (n - 2) == 6 * n);
}

TEST_CASE("sheared map satisfies h + eps*g = phi and g' = omega*h'") {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 20; ++trial) {
    const ShearSpec spec = specgen::random_shear_spec(rng, 24);
    const HarmonicMap f = shear(spec, 24);
    const Series back = add(f.h(), scale(f.g(), spec.epsilon));
    for (int n = 0; n <= 24; ++n) {
      const double sc = std::max(1.0, std::abs(spec.phi.coeff(n)));
      CHECK(std::abs(back.coeff(n) - spec.phi.coeff(n)) <= 1e-10 * sc);
    }
    const Series lhs = derivative(f.g());
    const Series rhs = mul(spec.omega, derivative(f.h()));
    for (int n = 0; n <= 23; ++n) {
      const double sc = std::max(1.0, std::abs(rhs.coeff(n)));
      CHECK(std::abs(lhs.coeff(n) - rhs.coeff(n)) <= 1e-10 * sc);
    }
  }
}

TEST_CASE("round trip: the dilatation of the sheared map is omega") {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> radius(0.05, 0.5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const ShearSpec spec = specgen::random_shear_spec(rng, 40);
  const HarmonicMap f = shear(spec, 40);
  for (int i = 0; i < 100; ++i) {
    const cplx z = std::polar(radius(rng), angle(rng));
    CHECK(std::abs(dilatation(f, z) - eval(spec.omega, z)) <= 1e-9);
  }
}

TEST_CASE("with eps = -1 the map is 2 Re h - conj(phi) pointwise") {
  const ShearSpec spec = koebe_data(64, 1, 1.0);
  const HarmonicMap f = shear(spec, 64);
  for (const cplx z : {cplx(0.3, 0.2), cplx(-0.5, 0.1), cplx(0.0, -0.45)}) {
    const cplx hv = eval(f.h(), z);
    const cplx want = cplx(2.0 * hv.real(), 0.0) - std::conj(eval(spec.phi, z));
    CHECK(std::abs(eval_map(f, z) - want) <= 1e-10);
  }
}

TEST_CASE("slice at eps recovers phi for the catalog shears") {
  for (int power = 1; power <= 2; ++power) {
    const ShearSpec spec = koebe_data(24, power, power == 1 ? 1.0 : 1.0);
    const HarmonicMap f = shear(spec, 24);
    const Series s = slice(f, spec.epsilon);
    for (int n = 1; n <= 24; ++n)
      CHECK(std::abs(s.coeff(n) - spec.phi.coeff(n)) <=
            1e-10 * std::max(1.0, std::abs(spec.phi.coeff(n))));
  }
}

TEST_CASE("catalog closed forms match their shear constructions") {
  using hmap::CatalogId;
  const std::pair<CatalogId, ShearSpec> cases[] = {
      {hmap::CatHarmonicKoebe{}, koebe_data(30, 1, 1.0)},
      {hmap::CatHalfPlane{}, koebe_data(30, 1, -1.0)},
      {hmap::CatF4{}, koebe_data(30, 2, 1.0)},
  };
  for (const auto& [id, spec] : cases) {
    const HarmonicMap direct = catalog(id, 30);
    const HarmonicMap sheared = shear(spec, 30);
    for (int n = 0; n <= 30; ++n) {
      const double sc = std::max(1.0, std::abs(direct.coeff_a(n)));
      CHECK(std::abs(direct.coeff_a(n) - sheared.coeff_a(n)) <= 1e-10 * sc);
      CHECK(std::abs(direct.coeff_b(n) - sheared.coeff_b(n)) <= 1e-10 * sc);
    }
    const ShearSpec rebuilt = hmap::catalog_shear_spec(id, 30);
    CHECK(rebuilt.epsilon == spec.epsilon);
  }
}

TEST_CASE("catalog parameter validation") {
  const auto expect_bad = [](auto id) {
    try {
      (void)catalog(id, 8);
      FAIL("expected bad_parameter");
    } catch (const hmap::Error& e) {
      CHECK(e.code() == hmap::ErrorCode::bad_parameter);
    }
  };
  expect_bad(hmap::CatF1{1});
  expect_bad(hmap::CatF2{cplx(0.3, 0.0), 3});        // above 1/(2n-1)
  expect_bad(hmap::CatF2{cplx(0.0, 0.0), 2});        // alpha = 0
  expect_bad(hmap::CatLogMap{0.5, cplx(1.0, 0.0)});  // |a| < 1
  expect_bad(hmap::CatLogMap{2.0, cplx(0.5, 0.0)});  // |lambda| != 1
  expect_bad(hmap::CatStarlikeMap{2.0, cplx(1.0, 0.0)});  // below 1+sqrt2
}

TEST_CASE("catalog members") {
  SUBCASE("z + conj(z^3/3)") {
    const HarmonicMap f1 = catalog(hmap::CatF1{3}, 10);
    CHECK(std::abs(f1.coeff_a(1) - 1.0) == 0.0);
    CHECK(std::abs(f1.coeff_b(3) - 1.0 / 3.0) <= 1e-15);
    for (int n = 0; n <= 10; ++n) {
      if (n != 1) CHECK(std::abs(f1.coeff_a(n)) == 0.0);
      if (n != 3) CHECK(std::abs(f1.coeff_b(n)) == 0.0);
    }
  }
  SUBCASE("slit-strip member with tail alpha") {
    const HarmonicMap f2 = catalog(hmap::CatF2{cplx(0.2, 0.0), 3}, 12);
    for (int n = 1; n <= 12; ++n) {
      CHECK(std::abs(f2.coeff_a(n) - 1.0) == 0.0);
      CHECK(std::abs(f2.coeff_b(n) - (n >= 3 ? 0.2 : 0.0)) == 0.0);
    }
  }
  SUBCASE("logarithmic family via the termwise expansion") {
    const double a = 1.0 + std::numbers::sqrt2;
    const HarmonicMap f = catalog(hmap::CatLogMap{a, 1.0}, 24);
    double apow = 1.0;
    for (int n = 1; n <= 24; ++n) {
      CHECK(std::abs(f.coeff_a(n) - 1.0 / (double(n) * apow)) <= 1e-15);
      apow *= a;
    }
    CHECK(std::abs(f.b1()) == 0.0);
    // sampled against the closed form
    for (const cplx z : {cplx(0.4, 0.3), cplx(-0.8, 0.0)})
      CHECK(std::abs(eval(f.h(), z) - oracles::log_map_h(a, z)) <= 1e-12);
  }
  SUBCASE("starlike family geometric coefficients") {
    const HarmonicMap F = catalog(hmap::CatStarlikeMap{5.0, cplx(0.0, 1.0)}, 16);
    double apow = 1.0;  // 5^{n-1}
    for (int n = 1; n <= 16; ++n) {
      CHECK(std::abs(F.coeff_a(n) - 1.0 / apow) <= 1e-15);
      if (n >= 2)
        CHECK(std::abs(F.coeff_b(n) - cplx(0.0, 1.0) / apow) <= 1e-15);
      apow *= 5.0;
    }
  }
  SUBCASE("analytic slice member") {
    const HarmonicMap s = catalog(hmap::CatKoebeSlice{std::numbers::pi}, 12);
    for (int n = 1; n <= 12; ++n)
      CHECK(std::abs(s.coeff_a(n) - double(n)) <= 1e-12);
    CHECK(s.g().order() == 12);
  }
}

TEST_CASE("dilatation bound is enforced") {
  ShearSpec bad = koebe_data(16, 1, 1.1);  // sup |1.1 z| > 1
  try {
    (void)shear(bad, 16);
    FAIL("expected dilatation_not_bounded");
  } catch (const hmap::Error& e) {
    CHECK(e.code() == hmap::ErrorCode::dilatation_not_bounded);
  }
  bad = koebe_data(16, 1, 1.0);
  bad.epsilon = cplx(2.0, 0.0);
  CHECK_THROWS_AS((void)shear(bad, 16), hmap::Error);
}

TEST_CASE("slice coefficient closed form") {
  for (int n = 2; n <= 30; ++n)
    CHECK(std::abs(hmap::koebe_slice_coeff(std::numbers::pi, n) - double(n)) <=
          1e-12);
  CHECK(std::abs(hmap::koebe_slice_coeff(0.0, 2) - 3.0) <= 1e-13);
  // at theta = pi/2, some n <= 40 breaks the |c_n| <= n necessary condition
  bool found = false;
  for (int n = 2; n <= 40 && !found; ++n)
    found = std::abs(hmap::koebe_slice_coeff(std::numbers::pi / 2, n)) >
            double(n);
  CHECK(found);
}

TEST_CASE("unit_from_angle snaps the half-turn") {
  CHECK(hmap::unit_from_angle(std::numbers::pi) == cplx(-1.0, 0.0));
  CHECK(std::abs(hmap::unit_from_angle(1.0) - std::polar(1.0, 1.0)) == 0.0);
}

}  // TEST_SUITE
