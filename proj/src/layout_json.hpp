#pragma once

#include <string>
#include <string_view>

#include "unfold.hpp"

namespace terrafold {

// Layout document:
// {
//   "mode": "orthogonal" | "sheared",
//   "slope": "p/q",
//   "faces": [{"id", "kind", "vertices": [["x","y"],...],
//              "parent": id|null, "fold_edge": [["x","y"],["x","y"]]|null}, ...],
//   "bbox": ["xmin","ymin","xmax","ymax"]
// }
// Every number is an exact rational string; serialization is canonical, so
// equal layouts produce identical bytes and parse(to_json(l)) == l exactly.
std::string layout_to_json(const Layout& layout);

// Throws ParseError (SyntaxError / MalformedGrid-style codes) on malformed
// documents. The bbox is recomputed from the faces rather than trusted.
Layout layout_from_json(std::string_view text);

}  // namespace terrafold
