#include "shearing.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "error.hpp"

namespace hmap {

namespace {

constexpr int kOmegaGridRadii = 64;
constexpr int kOmegaGridAngles = 256;
constexpr double kOmegaGridRMax = 0.999;

// z/(1-z)^2 as a series: coefficient of z^n is n.
Series koebe_phi(int order) {
  std::vector<cplx> c(order + 1);
  for (int n = 0; n <= order; ++n) c[n] = double(n);
  return Series(std::move(c));
}

}  // namespace

double sampled_sup_omega(const Series& omega) {
  double sup = 0.0;
  for (int j = 0; j < kOmegaGridRadii; ++j) {
    const double r = kOmegaGridRMax * double(j + 1) / kOmegaGridRadii;
    for (int k = 0; k < kOmegaGridAngles; ++k) {
      const double t = 2.0 * std::numbers::pi * double(k) / kOmegaGridAngles;
      sup = std::max(sup, std::abs(eval(omega, std::polar(r, t))));
    }
  }
  return sup;
}

void validate(const ShearSpec& spec) {
  if (std::abs(std::abs(spec.epsilon) - 1.0) > 1e-12)
    fail(ErrorCode::invalid_argument, "epsilon must be unimodular");
  const double sup = sampled_sup_omega(spec.omega);
  if (!(sup < 1.0 - kEpsOmega))
    fail(ErrorCode::dilatation_not_bounded,
         "sampled sup |omega| = " + std::to_string(sup) + " is not < 1");
}

HarmonicMap shear(const ShearSpec& spec, int order) {
  validate(spec);
  const Series phi = spec.phi.extended(order);
  const Series omega = spec.omega.extended(order);
  Series den = scale(omega, spec.epsilon);
  den = add(den, Series::monomial(order, 0, 1.0));
  const Series inv = recip(den);                      // order N
  const Series hp = mul(derivative(phi), inv);        // order N-1
  const Series gp = mul(omega, hp);                   // order N-1
  return HarmonicMap(antiderivative(hp), antiderivative(gp));
}

cplx unit_from_angle(double theta) {
  if (std::abs(theta - std::numbers::pi) <= 4e-16) return cplx(-1.0, 0.0);
  return std::polar(1.0, theta);
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::bad_parameter, what);
}

void require_unimodular(cplx lambda) {
  require(std::abs(std::abs(lambda) - 1.0) <= 1e-12,
          "lambda must satisfy |lambda| = 1");
}

HarmonicMap build(const CatHarmonicKoebe&, int order) {
  std::vector<cplx> a(order + 1, 0.0), b(order + 1, 0.0);
  for (int n = 1; n <= order; ++n) {
    a[n] = double((n + 1) * (2 * n + 1)) / 6.0;
    b[n] = double((n - 1) * (2 * n - 1)) / 6.0;
  }
  return HarmonicMap(Series(std::move(a)), Series(std::move(b)));
}

HarmonicMap build(const CatHalfPlane&, int order) {
  std::vector<cplx> a(order + 1, 0.0), b(order + 1, 0.0);
  for (int n = 1; n <= order; ++n) {
    a[n] = double(n + 1) / 2.0;
    b[n] = double(n - 1) / 2.0;
  }
  return HarmonicMap(Series(std::move(a)), Series(std::move(b)));
}

HarmonicMap build(const CatF4&, int order) {
  std::vector<cplx> a(order + 1, 0.0), b(order + 1, 0.0);
  for (int n = 1; n <= order; ++n) {
    a[n] = double((n + 1) * (n + 2)) / 6.0;
    b[n] = double((n - 1) * (n - 2)) / 6.0;
  }
  return HarmonicMap(Series(std::move(a)), Series(std::move(b)));
}

HarmonicMap build(const CatF1& p, int order) {
  require(p.n >= 2, "f1 needs integer n >= 2");
  return HarmonicMap(Series::identity(order),
                     Series::monomial(order, p.n, 1.0 / double(p.n)));
}

HarmonicMap build(const CatF2& p, int order) {
  require(p.n >= 1, "f2 needs integer n >= 1");
  require(p.alpha != 0.0, "f2 needs alpha != 0");
  require(std::abs(p.alpha) <= 1.0 / double(2 * p.n - 1) + 1e-15,
          "f2 needs |alpha| <= 1/(2n-1)");
  std::vector<cplx> a(order + 1, 0.0), b(order + 1, 0.0);
  for (int k = 1; k <= order; ++k) {
    a[k] = 1.0;                       // z/(1-z)
    if (k >= p.n) b[k] = p.alpha;     // alpha z^n/(1-z)
  }
  return HarmonicMap(Series(std::move(a)), Series(std::move(b)));
}

HarmonicMap build(const CatLogMap& p, int order) {
  require(std::abs(p.a) >= 1.0, "f_a_lambda needs real |a| >= 1");
  require_unimodular(p.lambda);
  // h = a log(a/(a-z)) = sum z^n / (n a^{n-1}); g = conj(lambda) (h - z).
  std::vector<cplx> a(order + 1, 0.0), b(order + 1, 0.0);
  double apow = 1.0;  // a^{n-1}
  for (int n = 1; n <= order; ++n) {
    a[n] = 1.0 / (double(n) * apow);
    if (n >= 2) b[n] = std::conj(p.lambda) * a[n];
    apow *= p.a;
  }
  return HarmonicMap(Series(std::move(a)), Series(std::move(b)));
}

HarmonicMap build(const CatStarlikeMap& p, int order) {
  require(std::abs(p.a) >= 1.0 + std::numbers::sqrt2,
          "F_a_lambda needs real |a| >= 1 + sqrt(2)");
  require_unimodular(p.lambda);
  // H = a z/(a-z) = sum z^n a^{1-n}; G = -z^2/(a-z) = -sum_{n>=2} z^n a^{1-n};
  // co-analytic part conj(lambda) G.
  std::vector<cplx> a(order + 1, 0.0), b(order + 1, 0.0);
  double apow = 1.0;  // a^{n-1}
  for (int n = 1; n <= order; ++n) {
    a[n] = 1.0 / apow;
    if (n >= 2) b[n] = -std::conj(p.lambda) / apow;
    apow *= p.a;
  }
  return HarmonicMap(Series(std::move(a)), Series(std::move(b)));
}

HarmonicMap build(const CatKoebeSlice& p, int order) {
  std::vector<cplx> c(order + 1, 0.0);
  for (int n = 1; n <= order; ++n) c[n] = koebe_slice_coeff(p.theta, n);
  return HarmonicMap(Series(std::move(c)), Series::zero(order));
}

}  // namespace

HarmonicMap catalog(const CatalogId& id, int order) {
  return std::visit([order](const auto& p) { return build(p, order); }, id);
}

ShearSpec catalog_shear_spec(const CatalogId& id, int order) {
  const Series phi = koebe_phi(order);
  if (std::holds_alternative<CatHarmonicKoebe>(id))
    return {phi, Series::identity(order), cplx(-1.0, 0.0)};
  if (std::holds_alternative<CatHalfPlane>(id))
    return {phi, Series::monomial(order, 1, -1.0), cplx(-1.0, 0.0)};
  if (std::holds_alternative<CatF4>(id))
    return {phi, Series::monomial(order, 2, 1.0), cplx(-1.0, 0.0)};
  fail(ErrorCode::bad_parameter,
       "only harmonic_koebe, f3 and f4 have a built-in shear spec");
}

cplx koebe_slice_coeff(double theta, int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "coefficient index n >= 1");
  if (n == 1) return 1.0;
  const cplx e = unit_from_angle(theta);
  const double nn = double(n);
  return (2.0 * nn * nn * (1.0 + e) + 3.0 * nn * (1.0 - e) + (1.0 + e)) / 6.0;
}

std::string catalog_listing() {
  return
      "harmonic_koebe            shear of z/(1-z)^2 with omega = z\n"
      "f3                        half-plane map: shear with omega = -z\n"
      "f4                        shear with omega = z^2\n"
      "f1(n=<int>)               z + conj(z^n/n), n >= 2\n"
      "f2(alpha=<cplx>,n=<int>)  z/(1-z) + conj(alpha z^n/(1-z)),\n"
      "                          0 < |alpha| <= 1/(2n-1)\n"
      "f_a_lambda(a=<real>,lambda=<cplx>)\n"
      "                          a log(a/(a-z)) + lambda conj(same - z),\n"
      "                          |a| >= 1, |lambda| = 1\n"
      "F_a_lambda(a=<real>,lambda=<cplx>)\n"
      "                          az/(a-z) - lambda conj(z^2/(a-z)),\n"
      "                          |a| >= 1+sqrt(2), |lambda| = 1\n"
      "koebe_slice(theta=<rad>)  analytic slice h_K + e^{i theta} g_K\n";
}

}  // namespace hmap
