#pragma once

// SVG figures. Coordinates are converted to double only here, with 12
// significant digits, so output is reproducible byte for byte.

#include <string>

#include "chamanara/cylinders.hpp"
#include "chamanara/surface.hpp"

namespace chamanara {

// The unit square (viewBox "0 0 1 1", y pointing up) with cutting points,
// one <g class="cylinder"> per cylinder and the saddle connections.
std::string decomposition_svg(const Surface& surface, const CylinderDecomposition& d);

struct DomainSvgOptions {
  bool strip_only = false;  // only the walls Re z = -3 and Re z = 3
  bool annulus = false;     // the annulus 1/2 < |z| < 2 instead of F
};

std::string domain_svg(const DomainSvgOptions& opts = {});

}  // namespace chamanara
