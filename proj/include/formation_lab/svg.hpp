#pragma once

#include <string>

#include "formation_lab/motion.hpp"

namespace formlab {

// Static overlay of a run: per-robot paths as polylines, initial positions
// as dots, destination slots as open circles. World y points up.
void write_overlay_svg(const std::string& path, const Trajectory& t);

}  // namespace formlab
