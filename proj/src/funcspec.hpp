#ifndef HMAP_FUNCSPEC_HPP
#define HMAP_FUNCSPEC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "shearing.hpp"

namespace hmap {

// Textual function specs accepted by the CLI and hm_map_parse:
//   catalog form:  name or name(key=value,...)
//   custom form:   shear phi=<p>/<q> omega=<p>/<q> theta=<radians>
// where <p>, <q> are comma-separated complex coefficient lists (constant
// term first) of a rational function p(z)/q(z); "/q" may be omitted for a
// polynomial. Complex literals: 1.5, -2, i, -0.5i, 1+2i, 3e-2-0.25i; "pi"
// is accepted as a real literal. Parse errors carry position and reason.
struct ParsedShear {
  Series phi;
  Series omega;
  double theta;
};

using FunctionSpec = std::variant<CatalogId, ParsedShear>;

// `order` controls the truncation order of rational-function expansions in
// the custom form.
FunctionSpec parse_function_spec(std::string_view text, int order);

// Convenience: parse and construct the map at the given order.
HarmonicMap build_map(std::string_view text, int order);

}  // namespace hmap

#endif
