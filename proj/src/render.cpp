#include "render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "error.hpp"

namespace hmap {

namespace {

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

struct Curve {
  std::vector<cplx> pts;
};

cplx sample(const PointMap& f, cplx z) {
  const cplx v = f(z);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    fail(ErrorCode::nonfinite_sample, "map evaluation overflowed while sampling");
  return v;
}

}  // namespace

void validate(const RenderSpec& spec) {
  if (spec.rays < 1 || spec.circles < 1)
    fail(ErrorCode::invalid_argument, "need at least one ray and one circle");
  if (spec.samples_per_curve < 64)
    fail(ErrorCode::invalid_argument, "need samples_per_curve >= 64");
  if (!(spec.r_max > 0.0 && spec.r_max < 1.0))
    fail(ErrorCode::invalid_argument, "r_max must be in (0,1)");
  if (spec.width < 1 || spec.height < 1)
    fail(ErrorCode::invalid_argument, "need positive pixel dimensions");
}

std::string render_grid(const PointMap& f, const RenderSpec& spec) {
  validate(spec);
  const int s = spec.samples_per_curve;
  std::vector<Curve> circles, rays;
  circles.reserve(spec.circles);
  for (int j = spec.circles; j >= 1; --j) {  // outermost first
    const double r = spec.r_max * double(j) / spec.circles;
    Curve c;
    c.pts.reserve(s);
    for (int i = 0; i < s; ++i) {
      const double t = 2.0 * std::numbers::pi * double(i) / (s - 1);
      c.pts.push_back(sample(f, std::polar(r, t)));
    }
    circles.push_back(std::move(c));
  }
  rays.reserve(spec.rays);
  for (int j = 0; j < spec.rays; ++j) {
    const double t = 2.0 * std::numbers::pi * double(j) / spec.rays;
    Curve c;
    c.pts.reserve(s);
    for (int i = 0; i < s; ++i) {
      const double r = spec.r_max * double(i) / (s - 1);
      c.pts.push_back(sample(f, std::polar(r, t)));
    }
    rays.push_back(std::move(c));
  }

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  const auto grow = [&](cplx p) {
    if (first) {
      xmin = xmax = p.real();
      ymin = ymax = p.imag();
      first = false;
      return;
    }
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  };
  for (const auto& c : circles)
    for (cplx p : c.pts) grow(p);
  for (const auto& c : rays)
    for (cplx p : c.pts) grow(p);

  double w = xmax - xmin, h = ymax - ymin;
  if (w <= 0.0) w = 1.0;
  if (h <= 0.0) h = 1.0;
  const double mx = 0.05 * w, my = 0.05 * h;
  const double vx = xmin - mx, vy = -(ymax + my);  // y flipped for SVG
  const double vw = w + 2.0 * mx, vh = h + 2.0 * my;
  const double stroke = 0.002 * std::max(vw, vh);

  std::string out;
  out.reserve(size_t(spec.rays + spec.circles) * s * 16 + 512);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(spec.width) + "\" height=\"" +
         std::to_string(spec.height) + "\" viewBox=\"" + fmt(vx) + " " +
         fmt(vy) + " " + fmt(vw) + " " + fmt(vh) + "\">\n";
  out += "<g fill=\"none\" stroke-width=\"" + fmt(stroke) +
         "\" stroke-linejoin=\"round\">\n";
  const auto emit = [&](const Curve& c, const std::string& stroke_color) {
    out += "<polyline stroke=\"" + stroke_color + "\" points=\"";
    bool sep = false;
    for (cplx p : c.pts) {
      if (sep) out += ' ';
      out += fmt(p.real());
      out += ',';
      out += fmt(-p.imag());
      sep = true;
    }
    out += "\"/>\n";
  };
  for (const auto& c : circles) emit(c, spec.circle_stroke);
  for (const auto& c : rays) emit(c, spec.ray_stroke);
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace hmap
