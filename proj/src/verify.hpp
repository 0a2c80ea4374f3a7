#ifndef HMAP_VERIFY_HPP
#define HMAP_VERIFY_HPP

#include <span>
#include <vector>

#include "constants.hpp"
#include "harmonic_map.hpp"
#include "report.hpp"

namespace hmap {

// Coefficient-bound families checked by check_coeff_bounds. The n-th bounds
// on (|a_n|, |b_n|, ||a_n|-|b_n||) are, for n >= 2:
//   sh0s: (n+1)(2n+1)/6, (n-1)(2n-1)/6, n
//   ch0c: (n+1)/2, (n-1)/2, (no difference law)
//   shs:  (2n^2+1)/3 for both, (no difference law)
//   chc:  n for both, (no difference law)
enum class BoundClass { sh0s, ch0c, shs, chc };

Report check_coeff_bounds(const HarmonicMap& f, int max_n, BoundClass cls,
                          const Tolerances& tol = {});

// Series of omega/(1 + eps*omega). Requires omega(0) = 0, |eps| = 1 and
// sampled sup |omega| < 1; under those the coefficients are bounded by 1
// (subordination to z/(1-z)).
Series subordination_coeffs(const Series& omega, cplx eps);

// Same computation with the |omega_n| <= 1 + slack postcondition attached.
Report subordination_report(const Series& omega, cplx eps,
                            const Tolerances& tol = {});

// b_n of the sheared map from the convolution chain:
//   (1/n) sum_{k=0}^{n-2} (k+1) phi_{k+1} wt_{n-1-k},
// wt = subordination_coeffs(omega, eps). Requires n >= 2.
cplx convolution_bn(const Series& phi, const Series& omega, cplx eps, int n);

// (1/(2a))[1 - ((1-r)/(1+r))^a] <= |f(z)| <= (1/(2a))[((1+r)/(1-r))^a - 1]
// with a = constants.alpha. Requires f normalized with b1 = 0.
Report growth_check(const HarmonicMap& f, const GridSpec& grid,
                    const FamilyConstants& constants,
                    const Tolerances& tol = {});

// (1-|b1|^2)(1-r)^(2a0-2)/(1+r)^(2a0+2) <= J_f <= mirrored upper bound.
Report jacobian_bounds_check(const HarmonicMap& f, const GridSpec& grid,
                             const FamilyConstants& constants,
                             const Tolerances& tol = {});

// |h'| <= (1+r|b1|)(1+r)^(a0-3/2)/(1-r)^(a0+3/2) and |g'| with (r+|b1|).
Report derivative_bounds_check(const HarmonicMap& f, const GridSpec& grid,
                               const FamilyConstants& constants,
                               const Tolerances& tol = {});

// Curvature of the image of |z| = r at z = r e^{it}: with gamma(t) = f(re^{it}),
//   gamma'  = i z h' + conj(i z g'),
//   gamma'' = -(z h' + z^2 h'') - conj(z g' + z^2 g''),
//   kappa   = Im(conj(gamma') gamma'') / |gamma'|^3.
// Series derivatives throughout; stationary_point when |gamma'| <= kEpsDiv.
double curvature_at(const HarmonicMap& f, double r, double t);

// The three curvature bounds with exponent a0 + 3/2, coefficient 2(a0+b0)
// and the lower-bound branch switch at rho = a0+b0 - sqrt((a0+b0)^2 - 1).
Report curvature_bounds_check(const HarmonicMap& f,
                              std::span<const double> radii, int angles,
                              const FamilyConstants& constants,
                              const Tolerances& tol = {});

// Largest r in (0, 0.999] with min over sampled t of curvature >= -tol,
// located by walking to the first sign change of the minimum and bisecting
// (monotonicity is not assumed). 0.999 when convex at every scanned radius;
// never_convex when already negative at r = 1e-3.
double radius_of_convexity(const HarmonicMap& f, int angles, double tol);

struct UnivalenceOptions {
  double r_max = 0.98;
  int samples = 4000;
  double delta = 1e-4;  // relative collision threshold
};

// Deterministic polar grid of ~samples points; a collision is a pair of
// distinct grid points with |f(z1)-f(z2)| < delta |z1-z2|. A pass is
// necessary-only evidence and is reported as "no collision found".
Report univalence_sample_check(const PointMap& f, double r_max, int samples,
                               double delta);

// min over the grid of the scale-free sense-preservation quotient
// J_f / (|h'|^2 + |g'|^2); passed iff the minimum is positive (equivalent
// to J_f > 0, but the worst point sits at the degeneracy instead of at the
// outermost ring).
Report local_univalence_check(const HarmonicMap& f, const GridSpec& grid);

// Runs local_univalence_check and sets the map's sense-preserving flag when
// it passes.
bool certify_sense_preserving(HarmonicMap& f, const GridSpec& grid);

enum class StabilityMode { univalent, convex };

struct StabilityOptions {
  UnivalenceOptions univalence;
  GridSpec convex_grid;
  int filter_depth = 40;  // de Branges depth for the univalent mode
};

// Slices h + lambda*g over lambda = e^{2 pi i j/count}. univalent mode runs
// the coefficient necessary filter |c_n| <= n + tol and then the collision
// scan on each slice; convex mode takes min over the grid of
// Re(1 + z phi''/phi'). Passed iff every lambda passes.
Report stability_scan(const HarmonicMap& f, int lambda_count,
                      StabilityMode mode, const StabilityOptions& opts = {},
                      const Tolerances& tol = {});

struct ThetaSearchResult {
  std::vector<double> survivors;
  Report report;
};

// For each theta on the uniform grid, the slice must pass the de Branges
// filter |c_n| <= n + tol for 2 <= n <= depth and then the collision scan.
// Survivors are grid cells, not refined roots; an empty result is
// reportable output, not an error.
ThetaSearchResult theta_search(const HarmonicMap& f, int theta_count,
                               int depth, const UnivalenceOptions& opts = {},
                               const Tolerances& tol = {});

// Samples t -> Im(e^{-i theta} phi(r e^{it})) over one period; true iff the
// cyclic sequence of strict local extrema (plateau runs collapsed) has
// exactly one maximum and one minimum.
bool convex_direction_check(const Series& phi, double theta, double r,
                            int samples);

}  // namespace hmap

#endif
