#ifndef HMAP_REPORT_HPP
#define HMAP_REPORT_HPP

#include <string>
#include <vector>

#include "series.hpp"

namespace hmap {

// Location of a margin: a coefficient index, a point, a polar sample, a
// colliding pair, or a scan parameter value.
struct Witness {
  enum class Kind { none, index, point, polar, pair, param };
  Kind kind = Kind::none;
  int n = 0;
  cplx z{};
  cplx z2{};
  double r = 0.0;
  double t = 0.0;
  double value = 0.0;

  static Witness index(int n);
  static Witness point(cplx z);
  static Witness polar(double r, double t);
  static Witness pair(cplx z1, cplx z2);
  static Witness param(double v);
};

struct ReportItem {
  std::string label;
  double margin;
  Witness where;
};

// Structured result of a verification scan. Margins are signed bound - value
// quantities normalized by max(1, |bound|), so that a pass is
// worst_margin >= -tolerance at every scale the bounds reach.
struct Report {
  std::string check_name;
  bool passed = false;
  double worst_margin = 0.0;
  double tolerance = 0.0;
  Witness witness;
  std::vector<ReportItem> details;
  std::string note;
};

// JSON with the stable field names check_name / passed / worst_margin /
// witness / details, schema version 1.
std::string to_json(const Report& report, int indent = 2);

// Polar product grid: radii r_max*(j+1)/radii, angles 2*pi*k/angles,
// enumerated radius-major. r_max is capped at 0.999.
struct GridSpec {
  int radii = 64;
  int angles = 256;
  double r_max = 0.999;
};

void validate(const GridSpec& grid);

template <class Fn>
void for_each_point(const GridSpec& grid, Fn&& fn) {
  for (int j = 0; j < grid.radii; ++j) {
    const double r = grid.r_max * double(j + 1) / grid.radii;
    for (int k = 0; k < grid.angles; ++k) {
      const double t = 6.283185307179586 * double(k) / grid.angles;
      fn(r, t);
    }
  }
}

// Per-check tolerances, collected in one place.
struct Tolerances {
  double coeff_identity = 1e-9;
  double pointwise_bound = 1e-9;
  double sampled_geometry = 1e-6;
  double subordination_slack = 1e-10;
  double collision_delta = 1e-4;
};

}  // namespace hmap

#endif
