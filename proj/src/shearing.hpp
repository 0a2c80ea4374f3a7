#ifndef HMAP_SHEARING_HPP
#define HMAP_SHEARING_HPP

#include <string>
#include <variant>

#include "harmonic_map.hpp"
#include "series.hpp"

namespace hmap {

// Margin for the sampled sup |omega| < 1 requirement.
inline constexpr double kEpsOmega = 1e-6;

// Input to the shearing construction: a normalized conformal map phi
// (phi(0)=0, phi'(0)=1), a dilatation omega with sup |omega| < 1, and a
// unimodular epsilon. epsilon = -1 is the classical phi = h - g setup.
struct ShearSpec {
  Series phi;
  Series omega;
  cplx epsilon;
};

// max |omega| over the fixed validation grid (64 radii x 256 angles,
// outermost radius 0.999). |omega| < 1 on the open disk cannot be decided
// numerically; this dense boundary-adjacent grid catches every catalog and
// test case.
double sampled_sup_omega(const Series& omega);

// Checks |epsilon| = 1 to 1e-12 and sampled_sup_omega < 1 - kEpsOmega.
// Throws invalid_argument / dilatation_not_bounded.
void validate(const ShearSpec& spec);

// Solve h' (1 + eps*omega) = phi', g' = omega h' and integrate:
//   h = int phi'/(1 + eps*omega),  g = int omega*phi'/(1 + eps*omega).
// The result satisfies h + eps*g = phi as series and g' = omega*h'.
HarmonicMap shear(const ShearSpec& spec, int order);

// e^{i theta} with the theta = pi cell snapped to exactly -1.
cplx unit_from_angle(double theta);

// ---- named catalog -------------------------------------------------------

struct CatHarmonicKoebe {};
struct CatHalfPlane {};   // f3: phi = z/(1-z)^2 sheared with omega = -z
struct CatF4 {};          // phi = z/(1-z)^2 sheared with omega = z^2
struct CatF1 { int n; };  // z + conj(z^n / n)
struct CatF2 { cplx alpha; int n; };     // z/(1-z) + conj(alpha z^n/(1-z))
struct CatLogMap { double a; cplx lambda; };     // f_{a,lambda}
struct CatStarlikeMap { double a; cplx lambda; };  // F_{a,lambda}
struct CatKoebeSlice { double theta; };  // analytic slice as (phi_theta, 0)

using CatalogId =
    std::variant<CatHarmonicKoebe, CatHalfPlane, CatF4, CatF1, CatF2,
                 CatLogMap, CatStarlikeMap, CatKoebeSlice>;

// Closed-form truncated series of the named map; bad_parameter when the
// id's parameter constraints are violated.
HarmonicMap catalog(const CatalogId& id, int order);

// The matching ShearSpec for the three sheared catalog members (Koebe data
// phi = z/(1-z)^2 with omega = z, -z, z^2 and epsilon = -1).
ShearSpec catalog_shear_spec(const CatalogId& id, int order);

// Coefficient n of the slice h_K + e^{i theta} g_K of the harmonic Koebe
// function: (1/6)(2n^2(1+e^{i theta}) + 3n(1-e^{i theta}) + (1+e^{i theta}))
// for n >= 2, and 1 for n = 1.
cplx koebe_slice_coeff(double theta, int n);

// Human-readable list of catalog names and parameter domains.
std::string catalog_listing();

}  // namespace hmap

#endif
