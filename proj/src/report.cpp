#include "report.hpp"

#include <nlohmann/json.hpp>

#include "error.hpp"

namespace hmap {

Witness Witness::index(int n) {
  Witness w;
  w.kind = Kind::index;
  w.n = n;
  return w;
}

Witness Witness::point(cplx z) {
  Witness w;
  w.kind = Kind::point;
  w.z = z;
  return w;
}

Witness Witness::polar(double r, double t) {
  Witness w;
  w.kind = Kind::polar;
  w.r = r;
  w.t = t;
  return w;
}

Witness Witness::pair(cplx z1, cplx z2) {
  Witness w;
  w.kind = Kind::pair;
  w.z = z1;
  w.z2 = z2;
  return w;
}

Witness Witness::param(double v) {
  Witness w;
  w.kind = Kind::param;
  w.value = v;
  return w;
}

namespace {

nlohmann::json witness_json(const Witness& w) {
  using nlohmann::json;
  switch (w.kind) {
    case Witness::Kind::index:
      return json{{"kind", "index"}, {"n", w.n}};
    case Witness::Kind::point:
      return json{{"kind", "point"}, {"z", {w.z.real(), w.z.imag()}}};
    case Witness::Kind::polar:
      return json{{"kind", "polar"}, {"r", w.r}, {"t", w.t}};
    case Witness::Kind::pair:
      return json{{"kind", "pair"},
                  {"z1", {w.z.real(), w.z.imag()}},
                  {"z2", {w.z2.real(), w.z2.imag()}}};
    case Witness::Kind::param:
      return json{{"kind", "param"}, {"value", w.value}};
    case Witness::Kind::none:
      break;
  }
  return json{{"kind", "none"}};
}

}  // namespace

std::string to_json(const Report& report, int indent) {
  nlohmann::json j;
  j["schema"] = 1;
  j["check_name"] = report.check_name;
  j["passed"] = report.passed;
  j["tolerance"] = report.tolerance;
  j["worst_margin"] = report.worst_margin;
  j["witness"] = witness_json(report.witness);
  nlohmann::json items = nlohmann::json::array();
  for (const ReportItem& it : report.details)
    items.push_back({{"label", it.label},
                     {"margin", it.margin},
                     {"witness", witness_json(it.where)}});
  j["details"] = std::move(items);
  if (!report.note.empty()) j["note"] = report.note;
  return j.dump(indent);
}

void validate(const GridSpec& grid) {
  if (grid.radii < 1 || grid.angles < 1)
    fail(ErrorCode::invalid_argument, "grid needs at least one radius/angle");
  if (!(grid.r_max > 0.0) || grid.r_max > 0.999)
    fail(ErrorCode::invalid_argument, "grid r_max must be in (0, 0.999]");
}

}  // namespace hmap
