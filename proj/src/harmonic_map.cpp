#include "harmonic_map.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "error.hpp"

namespace hmap {

namespace {
constexpr double kNormTol = 1e-12;
}

HarmonicMap::HarmonicMap(Series h, Series g)
    : h_(std::move(h)), g_(std::move(g)) {
  normalized_ = std::abs(h_.coeff(0)) <= kNormTol &&
                std::abs(g_.coeff(0)) <= kNormTol &&
                std::abs(h_.coeff(1) - 1.0) <= kNormTol;
}

cplx eval_map(const HarmonicMap& f, cplx z) {
  return eval(f.h(), z) + std::conj(eval(f.g(), z));
}

double jacobian(const HarmonicMap& f, cplx z) {
  const cplx hp = eval(derivative(f.h()), z);
  const cplx gp = eval(derivative(f.g()), z);
  return std::norm(hp) - std::norm(gp);
}

cplx dilatation(const HarmonicMap& f, cplx z) {
  const cplx hp = eval(derivative(f.h()), z);
  if (std::abs(hp) <= kEpsDiv)
    fail(ErrorCode::critical_point, "h'(z) vanishes; dilatation undefined");
  return eval(derivative(f.g()), z) / hp;
}

Series slice(const HarmonicMap& f, cplx lambda) {
  return add(f.h(), scale(f.g(), lambda));
}

HarmonicMap affine_combine(const HarmonicMap& f0, cplx b1) {
  if (std::abs(b1) >= 1.0)
    fail(ErrorCode::affine_factor_out_of_disk,
         "affine factor must satisfy |b1| < 1");
  return HarmonicMap(add(f0.h(), scale(f0.g(), b1)),
                     add(f0.g(), scale(f0.h(), std::conj(b1))));
}

namespace {

cplx moebius(cplx zeta, cplx z) { return (z + zeta) / (1.0 + std::conj(zeta) * z); }

cplx koenigs_denominator(const HarmonicMap& f, cplx zeta) {
  const cplx hp = eval(derivative(f.h()), zeta);
  if (std::abs(hp) <= kEpsDiv)
    fail(ErrorCode::critical_point, "h'(zeta) vanishes; transform undefined");
  return (1.0 - std::norm(zeta)) * hp;
}

}  // namespace

cplx koenigs_transform(const HarmonicMap& f, cplx zeta, cplx z) {
  const cplx d = koenigs_denominator(f, zeta);
  return (eval_map(f, moebius(zeta, z)) - eval_map(f, zeta)) / d;
}

HarmonicMap koenigs_series(const HarmonicMap& f, cplx zeta, int order,
                           double sample_radius, int sample_count) {
  const cplx d = koenigs_denominator(f, zeta);
  // f(mu(z)) - f(zeta) = A(z) + conj(X(z)) with A, X analytic; dividing by d
  // gives analytic part A/d and co-analytic part X/conj(d).
  std::vector<cplx> ah(sample_count), cg(sample_count);
  for (int k = 0; k < sample_count; ++k) {
    const cplx w = moebius(
        zeta, std::polar(sample_radius,
                         2.0 * std::numbers::pi * double(k) / sample_count));
    ah[k] = (eval(f.h(), w) - eval(f.h(), zeta)) / d;
    cg[k] = (eval(f.g(), w) - eval(f.g(), zeta)) / std::conj(d);
  }
  return HarmonicMap(coeffs_from_samples(ah, sample_radius, order),
                     coeffs_from_samples(cg, sample_radius, order));
}

HarmonicMap alexander(const HarmonicMap& f) {
  const int n = f.order();
  std::vector<cplx> hh(n + 1), gg(n + 1);
  for (int k = 0; k <= n; ++k) {
    hh[k] = double(k) * f.coeff_a(k);
    gg[k] = -double(k) * f.coeff_b(k);
  }
  return HarmonicMap(Series(std::move(hh)), Series(std::move(gg)));
}

PointMap as_point_map(const HarmonicMap& f) {
  return [f](cplx z) { return eval_map(f, z); };
}

PointMap as_point_map(const Series& s) {
  return [s](cplx z) { return eval(s, z); };
}

}  // namespace hmap
