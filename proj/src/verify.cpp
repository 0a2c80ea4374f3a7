#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"
#include "parallel.hpp"
#include "shearing.hpp"

namespace hmap {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_margin(double bound, double value, bool upper) {
  const double raw = upper ? bound - value : value - bound;
  return raw / std::max(1.0, std::abs(bound));
}

std::string radius_label(double r) { return "r=" + std::to_string(r); }

// Tracks the signed worst margin and its location.
struct Worst {
  double margin = std::numeric_limits<double>::infinity();
  Witness where;

  void offer(double m, const Witness& w) {
    if (m < margin) {
      margin = m;
      where = w;
    }
  }
  void offer(const Worst& other) { offer(other.margin, other.where); }
};

Report finish(std::string name, const Worst& worst, double tol,
              std::vector<ReportItem> details, std::string note = {}) {
  Report rep;
  rep.check_name = std::move(name);
  rep.tolerance = tol;
  rep.worst_margin = worst.margin;
  rep.passed = worst.margin >= -tol;
  rep.witness = worst.where;
  rep.details = std::move(details);
  rep.note = std::move(note);
  return rep;
}

}  // namespace

Report check_coeff_bounds(const HarmonicMap& f, int max_n, BoundClass cls,
                          const Tolerances& tol) {
  if (max_n < 2) fail(ErrorCode::invalid_argument, "need max_n >= 2");
  if (f.order() < max_n)
    fail(ErrorCode::order_too_low, "map order below requested bound depth");

  const char* names[] = {"SH0S", "CH0C", "SHS", "CHC"};
  Worst worst;
  std::vector<ReportItem> details;
  details.reserve(max_n - 1);
  for (int n = 2; n <= max_n; ++n) {
    const double an = std::abs(f.coeff_a(n));
    const double bn = std::abs(f.coeff_b(n));
    double bound_a = 0, bound_b = 0;
    bool has_diff = false;
    switch (cls) {
      case BoundClass::sh0s:
        bound_a = double((n + 1) * (2 * n + 1)) / 6.0;
        bound_b = double((n - 1) * (2 * n - 1)) / 6.0;
        has_diff = true;
        break;
      case BoundClass::ch0c:
        bound_a = double(n + 1) / 2.0;
        bound_b = double(n - 1) / 2.0;
        break;
      case BoundClass::shs:
        bound_a = bound_b = double(2 * n * n + 1) / 3.0;
        break;
      case BoundClass::chc:
        bound_a = bound_b = double(n);
        break;
    }
    double m = std::min(rel_margin(bound_a, an, true),
                        rel_margin(bound_b, bn, true));
    if (has_diff) m = std::min(m, rel_margin(double(n), std::abs(an - bn), true));
    worst.offer(m, Witness::index(n));
    details.push_back({"n=" + std::to_string(n), m, Witness::index(n)});
  }
  return finish(std::string("coeff_bounds[") + names[int(cls)] + "]", worst,
                tol.coeff_identity, std::move(details));
}

Series subordination_coeffs(const Series& omega, cplx eps) {
  if (std::abs(omega.coeff(0)) > 1e-15)
    fail(ErrorCode::invalid_argument, "omega(0) must vanish");
  if (std::abs(std::abs(eps) - 1.0) > 1e-12)
    fail(ErrorCode::invalid_argument, "epsilon must be unimodular");
  if (!(sampled_sup_omega(omega) < 1.0 - kEpsOmega))
    fail(ErrorCode::dilatation_not_bounded, "sampled sup |omega| is not < 1");
  Series den = scale(omega, eps);
  den = add(den, Series::monomial(omega.order(), 0, 1.0));
  return mul(omega, recip(den));
}

Report subordination_report(const Series& omega, cplx eps,
                            const Tolerances& tol) {
  const Series wt = subordination_coeffs(omega, eps);
  Worst worst;
  std::vector<ReportItem> details;
  for (int n = 1; n <= wt.order(); ++n) {
    const double m = 1.0 - std::abs(wt.coeff(n));
    worst.offer(m, Witness::index(n));
  }
  return finish("subordination_coeffs", worst, tol.subordination_slack,
                std::move(details));
}

cplx convolution_bn(const Series& phi, const Series& omega, cplx eps, int n) {
  if (n < 2) fail(ErrorCode::invalid_argument, "convolution_bn needs n >= 2");
  const Series wt = subordination_coeffs(omega.extended(
      std::max(omega.order(), n - 1)), eps);
  cplx acc = 0.0;
  for (int k = 0; k <= n - 2; ++k)
    acc += double(k + 1) * phi.coeff(k + 1) * wt.coeff(n - 1 - k);
  return acc / double(n);
}

namespace {

// Precomputed first/second series derivatives for pointwise scans.
struct MapDerivs {
  Series hp, gp, hpp, gpp;
  explicit MapDerivs(const HarmonicMap& f)
      : hp(derivative(f.h())),
        gp(derivative(f.g())),
        hpp(derivative(hp)),
        gpp(derivative(gp)) {}
};

double curvature_from(const MapDerivs& d, cplx z) {
  const cplx hp = eval(d.hp, z), gp = eval(d.gp, z);
  const cplx hpp = eval(d.hpp, z), gpp = eval(d.gpp, z);
  const cplx iz = cplx(0.0, 1.0) * z;
  const cplx g1 = iz * hp + std::conj(iz * gp);
  const cplx g2 = -(z * hp + z * z * hpp) - std::conj(z * gp + z * z * gpp);
  const double speed = std::abs(g1);
  if (speed <= kEpsDiv)
    fail(ErrorCode::stationary_point, "image curve has a stationary point");
  return std::imag(std::conj(g1) * g2) / (speed * speed * speed);
}

}  // namespace

Report growth_check(const HarmonicMap& f, const GridSpec& grid,
                    const FamilyConstants& constants, const Tolerances& tol) {
  validate(grid);
  if (!f.normalized() || std::abs(f.b1()) > 1e-12)
    fail(ErrorCode::not_normalized, "growth bounds need b1 = 0 normalization");
  const double a = constants.growth_exponent();
  Worst worst;
  std::vector<ReportItem> details;
  for (int j = 0; j < grid.radii; ++j) {
    const double r = grid.r_max * double(j + 1) / grid.radii;
    const double lo = (1.0 - std::pow((1.0 - r) / (1.0 + r), a)) / (2.0 * a);
    const double up = (std::pow((1.0 + r) / (1.0 - r), a) - 1.0) / (2.0 * a);
    Worst ring;
    for (int k = 0; k < grid.angles; ++k) {
      const double t = 2.0 * kPi * double(k) / grid.angles;
      const double v = std::abs(eval_map(f, std::polar(r, t)));
      const Witness w = Witness::polar(r, t);
      ring.offer(rel_margin(lo, v, false), w);
      ring.offer(rel_margin(up, v, true), w);
    }
    worst.offer(ring);
    details.push_back({radius_label(r), ring.margin, ring.where});
  }
  return finish("growth", worst, tol.pointwise_bound, std::move(details));
}

Report jacobian_bounds_check(const HarmonicMap& f, const GridSpec& grid,
                             const FamilyConstants& constants,
                             const Tolerances& tol) {
  validate(grid);
  const MapDerivs d(f);
  const double b1 = std::abs(f.b1());
  const double pre = 1.0 - b1 * b1;
  const double elo = constants.jacobian_exponent_low();
  const double ehi = constants.jacobian_exponent_high();
  Worst worst;
  std::vector<ReportItem> details;
  for (int j = 0; j < grid.radii; ++j) {
    const double r = grid.r_max * double(j + 1) / grid.radii;
    const double lo = pre * std::pow(1.0 - r, elo) / std::pow(1.0 + r, ehi);
    const double up = pre * std::pow(1.0 + r, elo) / std::pow(1.0 - r, ehi);
    Worst ring;
    for (int k = 0; k < grid.angles; ++k) {
      const double t = 2.0 * kPi * double(k) / grid.angles;
      const cplx z = std::polar(r, t);
      const double jac = std::norm(eval(d.hp, z)) - std::norm(eval(d.gp, z));
      const Witness w = Witness::polar(r, t);
      ring.offer(rel_margin(lo, jac, false), w);
      ring.offer(rel_margin(up, jac, true), w);
    }
    worst.offer(ring);
    details.push_back({radius_label(r), ring.margin, ring.where});
  }
  return finish("jacobian_bounds", worst, tol.pointwise_bound,
                std::move(details));
}

Report derivative_bounds_check(const HarmonicMap& f, const GridSpec& grid,
                               const FamilyConstants& constants,
                               const Tolerances& tol) {
  validate(grid);
  const MapDerivs d(f);
  const double b1 = std::abs(f.b1());
  const double elo = constants.derivative_exponent_low();
  const double ehi = constants.derivative_exponent_high();
  Worst worst;
  std::vector<ReportItem> details;
  for (int j = 0; j < grid.radii; ++j) {
    const double r = grid.r_max * double(j + 1) / grid.radii;
    const double shape = std::pow(1.0 + r, elo) / std::pow(1.0 - r, ehi);
    const double bh = (1.0 + r * b1) * shape;
    const double bg = (r + b1) * shape;
    Worst ring;
    for (int k = 0; k < grid.angles; ++k) {
      const double t = 2.0 * kPi * double(k) / grid.angles;
      const cplx z = std::polar(r, t);
      const Witness w = Witness::polar(r, t);
      ring.offer(rel_margin(bh, std::abs(eval(d.hp, z)), true), w);
      ring.offer(rel_margin(bg, std::abs(eval(d.gp, z)), true), w);
    }
    worst.offer(ring);
    details.push_back({radius_label(r), ring.margin, ring.where});
  }
  return finish("derivative_bounds", worst, tol.pointwise_bound,
                std::move(details));
}

double curvature_at(const HarmonicMap& f, double r, double t) {
  if (!(r > 0.0 && r < 1.0))
    fail(ErrorCode::invalid_argument, "curvature radius must be in (0,1)");
  return curvature_from(MapDerivs(f), std::polar(r, t));
}

Report curvature_bounds_check(const HarmonicMap& f,
                              std::span<const double> radii, int angles,
                              const FamilyConstants& constants,
                              const Tolerances& tol) {
  if (angles < 1) fail(ErrorCode::invalid_argument, "need angles >= 1");
  const MapDerivs d(f);
  const double b1 = std::abs(f.b1());
  const double pre_plus = (1.0 + b1) / ((1.0 - b1) * (1.0 - b1));
  const double pre_minus = (1.0 - b1) / ((1.0 + b1) * (1.0 + b1));
  const double e = constants.curvature_exponent();
  const double c = constants.curvature_coefficient();
  const double rho = constants.rho();
  Worst worst;
  std::vector<ReportItem> details;
  for (const double r : radii) {
    if (!(r > 0.0 && r < 1.0))
      fail(ErrorCode::invalid_argument, "curvature radius must be in (0,1)");
    const double grow = std::pow((1.0 + r) / (1.0 - r), e);
    const double up = pre_plus * grow * (r * r + c * r + 1.0) / r;
    const double lo =
        r <= rho
            ? pre_minus * std::pow((1.0 - r) / (1.0 + r), e) *
                  (r * r - c * r + 1.0) / r
            : pre_plus * grow * (r * r - c * r + 1.0) / r;
    Worst ring;
    for (int k = 0; k < angles; ++k) {
      const double t = 2.0 * kPi * double(k) / angles;
      const double kappa = curvature_from(d, std::polar(r, t));
      const Witness w = Witness::polar(r, t);
      ring.offer(rel_margin(lo, kappa, false), w);
      ring.offer(rel_margin(up, kappa, true), w);
    }
    worst.offer(ring);
    details.push_back({radius_label(r), ring.margin, ring.where});
  }
  return finish("curvature_bounds", worst, tol.pointwise_bound,
                std::move(details));
}

double radius_of_convexity(const HarmonicMap& f, int angles, double tol) {
  if (angles < 8) fail(ErrorCode::invalid_argument, "need angles >= 8");
  const MapDerivs d(f);
  const auto min_curvature = [&](double r) {
    double m = std::numeric_limits<double>::infinity();
    for (int k = 0; k < angles; ++k)
      m = std::min(m, curvature_from(d, std::polar(r, 2.0 * kPi * k / angles)));
    return m;
  };
  const double r0 = 1e-3, r1 = 0.999;
  if (min_curvature(r0) < -tol)
    fail(ErrorCode::never_convex,
         "image already non-convex at r = 1e-3; non-univalence pathology");
  // Walk to the first sign change of the angular minimum, then bisect.
  const int steps = 100;
  double lo = r0;
  double hi = r1;
  bool found = false;
  for (int i = 1; i <= steps; ++i) {
    const double r = r0 + (r1 - r0) * double(i) / steps;
    if (min_curvature(r) < -tol) {
      hi = r;
      found = true;
      break;
    }
    lo = r;
  }
  if (!found) return r1;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (min_curvature(mid) >= -tol)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Report univalence_sample_check(const PointMap& f, double r_max, int samples,
                               double delta) {
  if (!(r_max > 0.0 && r_max < 1.0))
    fail(ErrorCode::radius_out_of_range, "r_max must be in (0,1)");
  if (samples < 2) fail(ErrorCode::invalid_argument, "need samples >= 2");
  const int rings = std::max(2, int(std::lround(std::sqrt(samples / 16.0))));
  const int angles = std::max(8, int(std::lround(double(samples) / rings)));
  std::vector<cplx> zs, vs;
  zs.reserve(size_t(rings) * angles);
  for (int j = 0; j < rings; ++j) {
    const double r = r_max * double(j + 1) / rings;
    for (int k = 0; k < angles; ++k)
      zs.push_back(std::polar(r, 2.0 * kPi * double(k) / angles));
  }
  vs.reserve(zs.size());
  for (const cplx z : zs) {
    const cplx v = f(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorCode::nonfinite_sample, "map evaluation overflowed on grid");
    vs.push_back(v);
  }

  struct Best {
    double q2 = std::numeric_limits<double>::infinity();
    size_t i = 0, j = 0;
    bool operator<(const Best& o) const {
      if (q2 != o.q2) return q2 < o.q2;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  const size_t n = zs.size();
  const Best best = chunked_reduce<Best>(
      n,
      [&](size_t lo, size_t hi) {
        Best b;
        for (size_t i = lo; i < hi; ++i)
          for (size_t j = i + 1; j < n; ++j) {
            const double dz2 = std::norm(zs[i] - zs[j]);
            const double q2 = std::norm(vs[i] - vs[j]) / dz2;
            if (Best cand{q2, i, j}; cand < b) b = cand;
          }
        return b;
      },
      [](Best a, Best b) { return a < b ? a : b; }, Best{});

  const double ratio = std::sqrt(best.q2);
  Report rep;
  rep.check_name = "univalence_sample";
  rep.tolerance = 0.0;
  rep.worst_margin = ratio - delta;
  rep.passed = rep.worst_margin >= 0.0;
  rep.witness = Witness::pair(zs[best.i], zs[best.j]);
  rep.note = rep.passed ? "no collision found"
                        : "collision: image points closer than delta*|dz|";
  return rep;
}

Report local_univalence_check(const HarmonicMap& f, const GridSpec& grid) {
  validate(grid);
  const MapDerivs d(f);
  Worst worst;
  std::vector<ReportItem> details;
  for (int j = 0; j < grid.radii; ++j) {
    const double r = grid.r_max * double(j + 1) / grid.radii;
    Worst ring;
    for (int k = 0; k < grid.angles; ++k) {
      const double t = 2.0 * kPi * double(k) / grid.angles;
      const cplx z = std::polar(r, t);
      const double h2 = std::norm(eval(d.hp, z));
      const double g2 = std::norm(eval(d.gp, z));
      // Scale-free sense quotient (1-|w|^2)/(1+|w|^2), w the dilatation.
      const double q = (h2 - g2) / std::max(h2 + g2, kEpsDiv * kEpsDiv);
      ring.offer(q, Witness::point(z));
    }
    worst.offer(ring);
    details.push_back({radius_label(r), ring.margin, ring.where});
  }
  Report rep = finish("local_univalence", worst, 0.0, std::move(details));
  rep.passed = worst.margin > 0.0;
  return rep;
}

bool certify_sense_preserving(HarmonicMap& f, const GridSpec& grid) {
  if (!local_univalence_check(f, grid).passed) return false;
  f.certify_sense_preserving();
  return true;
}

namespace {

// min_n (n - |c_n|) over 2 <= n <= depth: the de Branges necessary margin.
struct FilterResult {
  double margin;
  int worst_n;
};

FilterResult debranges_filter(const Series& s, int depth) {
  FilterResult res{std::numeric_limits<double>::infinity(), 2};
  for (int n = 2; n <= std::min(depth, s.order()); ++n) {
    const double m = double(n) - std::abs(s.coeff(n));
    if (m < res.margin) res = {m, n};
  }
  return res;
}

}  // namespace

Report stability_scan(const HarmonicMap& f, int lambda_count,
                      StabilityMode mode, const StabilityOptions& opts,
                      const Tolerances& tol) {
  if (lambda_count < 8)
    fail(ErrorCode::invalid_argument, "stability scan needs lambda_count >= 8");
  Worst worst;
  std::vector<ReportItem> details;
  bool all_passed = true;
  for (int j = 0; j < lambda_count; ++j) {
    const double angle = 2.0 * kPi * double(j) / lambda_count;
    const cplx lambda = unit_from_angle(angle);
    const Series sl = slice(f, lambda);
    const std::string label = "lambda[" + std::to_string(j) + "]";
    if (mode == StabilityMode::univalent) {
      const FilterResult filt = debranges_filter(sl, opts.filter_depth);
      if (filt.margin < -tol.coeff_identity) {
        all_passed = false;
        worst.offer(filt.margin, Witness::param(angle));
        details.push_back({label + " coefficient filter", filt.margin,
                           Witness::index(filt.worst_n)});
        continue;
      }
      const Report uni = univalence_sample_check(
          as_point_map(sl), opts.univalence.r_max, opts.univalence.samples,
          opts.univalence.delta);
      if (!uni.passed) all_passed = false;
      worst.offer(uni.worst_margin, Witness::param(angle));
      details.push_back({label + " collision scan", uni.worst_margin,
                         uni.witness});
    } else {
      validate(opts.convex_grid);
      const Series p1 = derivative(sl);
      const Series p2 = derivative(p1);
      Worst lam;
      for_each_point(opts.convex_grid, [&](double r, double t) {
        const cplx z = std::polar(r, t);
        const cplx d1 = eval(p1, z);
        double v;
        if (std::abs(d1) <= kEpsDiv)
          v = -std::numeric_limits<double>::infinity();
        else
          v = 1.0 + std::real(z * eval(p2, z) / d1);
        lam.offer(v, Witness::polar(r, t));
      });
      if (lam.margin < -tol.pointwise_bound) all_passed = false;
      worst.offer(lam.margin, Witness::param(angle));
      details.push_back({label + " convexity functional", lam.margin,
                         lam.where});
    }
  }
  Report rep = finish(mode == StabilityMode::univalent ? "stability[univalent]"
                                                       : "stability[convex]",
                      worst,
                      mode == StabilityMode::univalent ? 0.0
                                                       : tol.pointwise_bound,
                      std::move(details));
  rep.passed = all_passed;
  return rep;
}

ThetaSearchResult theta_search(const HarmonicMap& f, int theta_count,
                               int depth, const UnivalenceOptions& opts,
                               const Tolerances& tol) {
  if (theta_count < 16)
    fail(ErrorCode::invalid_argument, "theta search needs theta_count >= 16");
  if (f.order() < depth)
    fail(ErrorCode::order_too_low, "map order below filter depth");
  ThetaSearchResult res;
  Worst worst;
  std::vector<ReportItem> details;
  int survivors = 0;
  for (int j = 0; j < theta_count; ++j) {
    const double theta = 2.0 * kPi * double(j) / theta_count;
    const Series sl = slice(f, unit_from_angle(theta));
    const std::string label = "theta[" + std::to_string(j) + "]";
    const FilterResult filt = debranges_filter(sl, depth);
    if (filt.margin < -tol.coeff_identity) {
      details.push_back({label + " coefficient filter", filt.margin,
                         Witness::index(filt.worst_n)});
      continue;
    }
    const Report uni = univalence_sample_check(as_point_map(sl), opts.r_max,
                                               opts.samples, opts.delta);
    details.push_back({label + " collision scan", uni.worst_margin,
                       uni.witness});
    if (uni.passed) {
      res.survivors.push_back(theta);
      ++survivors;
      worst.offer(uni.worst_margin, Witness::param(theta));
    }
  }
  res.report = finish("theta_search", worst, 0.0, std::move(details),
                      std::to_string(survivors) + " of " +
                          std::to_string(theta_count) + " cells survive");
  res.report.passed = true;  // a scan result, not a pass/fail bound
  return res;
}

bool convex_direction_check(const Series& phi, double theta, double r,
                            int samples) {
  if (!(r > 0.0 && r < 1.0))
    fail(ErrorCode::invalid_argument, "radius must be in (0,1)");
  if (samples < 256) fail(ErrorCode::invalid_argument, "need samples >= 256");
  const cplx rot = std::polar(1.0, -theta);
  std::vector<double> u(samples);
  for (int k = 0; k < samples; ++k)
    u[k] = std::imag(rot * eval(phi, std::polar(r, 2.0 * kPi * k / samples)));
  // Cyclic sign sequence of first differences, plateaus collapsed.
  std::vector<int> signs;
  for (int k = 0; k < samples; ++k) {
    const double d = u[(k + 1) % samples] - u[k];
    const int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (s != 0 && (signs.empty() || signs.back() != s)) signs.push_back(s);
  }
  if (signs.size() >= 2 && signs.front() == signs.back()) signs.pop_back();
  int maxima = 0, minima = 0;
  const int m = static_cast<int>(signs.size());
  if (m == 0) return false;  // constant trace, not a Jordan curve
  for (int i = 0; i < m; ++i) {
    const int cur = signs[i], nxt = signs[(i + 1) % m];
    if (cur > 0 && nxt < 0) ++maxima;
    if (cur < 0 && nxt > 0) ++minima;
  }
  return maxima == 1 && minima == 1;
}

}  // namespace hmap
