// Deterministic SVG rendering of curve diagrams: the glued square with
// labeled sides, numbered boundary slots, chords, and crossing markers.
#pragma once

#include <string>

#include "pants/diagram.hpp"

namespace pants {

struct RenderOptions {
  int size = 400;         // inner square edge length in pixels
  bool crossings = true;  // draw a marker at every double point
};

// Standalone SVG 1.1 text; byte-identical across runs for equal inputs.
// Styling hooks: classes chord, band, crossing, slot-label.
std::string render_svg(const Diagram& d, const RenderOptions& opts = {});

}  // namespace pants
