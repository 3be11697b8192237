#pragma once

#include "rac/drawing.hpp"

#include <string>

namespace rac {

// Deterministic SVG: vertices as circles, edges as polylines, crossings
// optionally marked. Pure output; no layout decisions.
std::string drawing_to_svg(const Drawing& d, bool mark_crossings = false);
void save_svg(const Drawing& d, const std::string& path, bool mark_crossings = false);

}  // namespace rac
