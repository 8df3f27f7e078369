#pragma once

// Deterministic SVG pictures of subsets of the character sphere S^{k-1},
// k <= 3: S^0 as two marked points, S^1 as a circle with the member arcs,
// S^2 in orthographic projection with the hemisphere boundary circles.

#include "sigma/character_sphere.hpp"

#include <string>
#include <vector>

namespace sigma::io {

/// Throws UnsupportedDimension for k > 3.
std::string sphere_svg(const sphere::PolyhedralSet& set);

/// A plain point set, each point drawn as a dot.
std::string points_svg(std::size_t k, const std::vector<sphere::SpherePoint>& points);

}  // namespace sigma::io
