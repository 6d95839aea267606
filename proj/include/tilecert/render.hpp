#pragma once

#include "tilecert/region.hpp"

#include <string>

namespace tilecert {

/// Equilateral SVG embedding. Optionally shades a set of lozenges (forced
/// ones) and marks the half-weighted axis lozenge positions with ellipses;
/// the axis itself is drawn dashed.
std::string render_svg(const Region& r, const WeightScheme& w,
                       const std::vector<Lozenge>& shaded = {});

/// Terminal rendering: one text row per h value, '<' and '>' cells.
std::string render_ascii(const Region& r);

}  // namespace tilecert
