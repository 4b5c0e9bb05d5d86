#pragma once

#include <cstddef>
#include <string>

#include "candy/dynamics.hpp"

namespace candy {

// One line per visited state: "<step>  <counts>", sharers (>= 2) shown in
// brackets, e.g.
//
//   0  [2],[2],0,0
//   -- cycle (period 1) --
//   1  1,1,1,1
//
// The delimiter precedes the first cycle state. Lines longer than `width`
// columns are cut and end in "..."; width 0 disables the limit.
// Throws MissingPrefix unless the trajectory kept its visited states.
std::string render_trajectory(const Trajectory& t, std::size_t width = 0);

}  // namespace candy
