#ifndef HMAP_CONSTANTS_HPP
#define HMAP_CONSTANTS_HPP

#include <cmath>

#include "error.hpp"

namespace hmap {

// Parameters of an affine and linear invariant family: alpha = sup |a2| over
// the affine family, alpha0 / beta0 = sup |a2| / sup |b2| over the b1 = 0
// slice. Every specialized bound exponent and coefficient is derived from
// these; nothing downstream hard-codes the instantiated numbers.
struct FamilyConstants {
  double alpha;
  double alpha0;
  double beta0;

  // alpha0 + beta0 - sqrt((alpha0+beta0)^2 - 1): the radius of the maximal
  // disk of convexity. Computed, never stored.
  double rho() const {
    const double s = alpha0 + beta0;
    return s - std::sqrt(s * s - 1.0);
  }

  double growth_exponent() const { return alpha; }
  double covering_radius() const { return 1.0 / (2.0 * alpha); }
  double jacobian_exponent_low() const { return 2.0 * alpha0 - 2.0; }
  double jacobian_exponent_high() const { return 2.0 * alpha0 + 2.0; }
  double derivative_exponent_low() const { return alpha0 - 1.5; }
  double derivative_exponent_high() const { return alpha0 + 1.5; }
  double curvature_exponent() const { return alpha0 + 1.5; }
  double curvature_coefficient() const { return 2.0 * (alpha0 + beta0); }

  static FamilyConstants make(double alpha, double alpha0, double beta0) {
    FamilyConstants c{alpha, alpha0, beta0};
    const double s = alpha0 + beta0;
    if (!(alpha > 0.0) || !(s > 1.0))
      fail(ErrorCode::bad_parameter,
           "family constants need alpha > 0 and alpha0 + beta0 > 1");
    return c;
  }

  // The instantiation for shearable univalent maps: (3, 5/2, 1/2), giving
  // rho = 3 - 2 sqrt(2).
  static FamilyConstants sh_s() { return FamilyConstants{3.0, 2.5, 0.5}; }
};

}  // namespace hmap

#endif
