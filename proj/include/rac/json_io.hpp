#pragma once

#include "rac/drawing.hpp"

#include <iosfwd>
#include <string>

namespace rac {

// Wire format (bit-exact contract):
// {"bend_limit":1,
//  "vertices":[{"id":str,"x":str,"y":str}],
//  "edges":[{"id":str,"source":str,"target":str,
//            "bends":[{"x":str,"y":str}],"auxiliary":bool}]}
// Coordinate strings are decimal ("1.25") or rational ("5/4").

std::string drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const std::string& text);
Drawing load_drawing(const std::string& path);
void save_drawing(const Drawing& d, const std::string& path);

}  // namespace rac
