#pragma once

// Deterministic braid pictures: a plain-text grid and an SVG rendering with
// one crossing group per braid generator and a visible break in the strand
// passing underneath.

#include <string>

#include "lorenz/braid.hpp"

namespace lorenz {

std::string render_braid_text(const BraidWord& b);
std::string render_braid_svg(const BraidWord& b);

}  // namespace lorenz
