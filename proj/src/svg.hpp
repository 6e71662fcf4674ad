#pragma once

#include <string>

#include "unfold.hpp"

namespace terrafold {

// Renders the net as a standalone SVG document: one <path> per face (element
// id = face id, class = face kind), fold edges overlaid as dashed lines, and
// planar +y drawn upward. Coordinates are decimal approximations; the JSON
// document is the exact record.
std::string layout_to_svg(const Layout& layout);

}  // namespace terrafold
