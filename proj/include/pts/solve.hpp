#pragma once

#include <string>

#include "pts/core.hpp"

namespace pts {

// One entry point over all solvers. Algorithms: auto, line, cycle, star,
// grid-path, grid-3phase, colored-auto. `auto` dispatches on the detected
// topology and on labeling presence. Reports carry the schedule, the
// distance lower bound (the bottleneck distance for colored instances),
// extra bounds, and phase lengths where the solver has phases.
SolveReport solve(const Instance& inst, const std::string& algorithm = "auto");

}  // namespace pts
