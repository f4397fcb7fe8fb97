#pragma once

#include <span>
#include <string>

#include "sections/series.hpp"

namespace sections {

/// 800x800 SVG 1.1 document: the closed polyline through `points`, scaled
/// uniformly with a 5% margin, plus the real and imaginary axes through w = 0.
std::string render_curve_svg(std::span<const Complex> points, const std::string& title);

}  // namespace sections
