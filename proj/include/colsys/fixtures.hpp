#pragma once

#include "colsys/core.hpp"

namespace colsys::fixtures {

/// 13-color system with origin 1, 36 horizontal and 53 vertical pairs.
ColoringSystem example_system();

/// Its 55-tile partial coloring of {x + y <= 9}.
TriangleColoring example_triangle();

}  // namespace colsys::fixtures
