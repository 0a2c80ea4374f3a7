#ifndef HMAP_RENDER_HPP
#define HMAP_RENDER_HPP

#include <string>

#include "harmonic_map.hpp"

namespace hmap {

// Image of the polar grid (equally spaced radial segments and concentric
// circles) under a point map, as an SVG document.
struct RenderSpec {
  int rays = 16;
  int circles = 8;
  int samples_per_curve = 512;
  double r_max = 0.95;
  int width = 800;
  int height = 800;
  std::string ray_stroke = "#b40426";
  std::string circle_stroke = "#3b4cc0";
};

void validate(const RenderSpec& spec);

// One polyline per circle (outermost first), then one per ray in angle
// order. Coordinates carry 6 significant digits with locale-independent
// formatting, so identical inputs give byte-identical output. The viewport
// is fitted to the bounding box of all sampled points with a 5% margin.
// Throws nonfinite_sample when an evaluation overflows.
std::string render_grid(const PointMap& f, const RenderSpec& spec);

}  // namespace hmap

#endif
