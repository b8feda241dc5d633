#pragma once
// Presentation helpers for the CLI: canonical coefficient strings and
// SVG / TikZ rendering of diagrams with a fixed concentric-ring layout.

#include <string>

#include "orbidim/algebra.hpp"
#include "orbidim/diagram.hpp"

namespace orbidim {

// Canonical polynomial-in-z string for {zeta exponent: rational}.
std::string coeff_str(const Coeff& cf);

std::string render_svg(const Diagram& d);
std::string render_tikz(const Diagram& d);

}  // namespace orbidim
