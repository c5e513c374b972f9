#pragma once

#include <string>

#include "suig2/geometry.hpp"

namespace suig2 {

// SVG 1.1 drawing: 100 user units per coordinate unit, y axis flipped so
// larger y is higher, squares as labeled rectangles, stab lines dashed.
// Byte-deterministic for a given Representation.
std::string emit_svg(const Representation& r);

}  // namespace suig2
