#ifndef HMAP_HARMONIC_MAP_HPP
#define HMAP_HARMONIC_MAP_HPP

#include <functional>

#include "series.hpp"

namespace hmap {

using PointMap = std::function<cplx(cplx)>;

// Planar harmonic map f = h + conj(g) on the unit disk, h the analytic and
// g the co-analytic part. The normalized flag records whether the h(0)=0,
// g(0)=0, h'(0)=1 normalization held at construction; the sense-preserving
// flag is only set by a passing local univalence scan (see verify).
class HarmonicMap {
 public:
  HarmonicMap(Series h, Series g);

  const Series& h() const { return h_; }
  const Series& g() const { return g_; }
  int order() const { return std::min(h_.order(), g_.order()); }

  cplx coeff_a(int n) const { return h_.coeff(n); }
  cplx coeff_b(int n) const { return g_.coeff(n); }
  cplx b1() const { return g_.coeff(1); }

  bool normalized() const { return normalized_; }
  bool sense_preserving_certified() const { return sense_certified_; }
  void certify_sense_preserving() { sense_certified_ = true; }

 private:
  Series h_;
  Series g_;
  bool normalized_;
  bool sense_certified_ = false;
};

// f(z) = h(z) + conj(g(z)).
cplx eval_map(const HarmonicMap& f, cplx z);

// J_f(z) = |h'(z)|^2 - |g'(z)|^2.
double jacobian(const HarmonicMap& f, cplx z);

// omega(z) = g'(z)/h'(z); critical_point when |h'(z)| <= kEpsDiv.
cplx dilatation(const HarmonicMap& f, cplx z);

// The analytic slice h + lambda*g.
Series slice(const HarmonicMap& f, cplx lambda);

// f0 + b1*conj(f0) regrouped into h + conj(g) form: analytic part
// h0 + b1*g0, co-analytic part g0 + conj(b1)*h0. Requires |b1| < 1.
HarmonicMap affine_combine(const HarmonicMap& f0, cplx b1);

// Disk-automorphism renormalization evaluated pointwise:
//   F(z) = (f((z+zeta)/(1+conj(zeta) z)) - f(zeta)) / ((1-|zeta|^2) h'(zeta)).
cplx koenigs_transform(const HarmonicMap& f, cplx zeta, cplx z);

// Series form of the transform, recovered by circle sampling of its analytic
// and co-analytic parts separately (truncated Moebius composition would have
// unbounded truncation error, circle sampling has controlled error).
HarmonicMap koenigs_series(const HarmonicMap& f, cplx zeta, int order,
                           double sample_radius, int sample_count);

// H = z h', G = -z g' on coefficients: H_n = n a_n, G_n = -n b_n.
HarmonicMap alexander(const HarmonicMap& f);

// Point-map adapters.
PointMap as_point_map(const HarmonicMap& f);
PointMap as_point_map(const Series& s);

}  // namespace hmap

#endif
