#pragma once

#include <utility>

#include "pts/core.hpp"
#include "pts/grid.hpp"
#include "pts/star.hpp"

namespace pts::colored {

// Validity of a schedule against the color goal: every vertex must end up
// holding a token of its own color. Requires a labeling.
VerifyReport colored_verify(const Instance& inst, const Schedule& s);

// Deletes swaps between identically colored tokens from a schedule,
// evaluated along the run. Colors at every vertex evolve exactly as in the
// original schedule, so color-correctness is preserved; the length is
// unchanged (steps may become empty).
Schedule strip_same_color_swaps(const Instance& inst, Schedule s);

// Unique crossing-free target on a path: the k-th token of each color from
// the left goes to the k-th vertex of that color from the left.
Configuration colored_line_target(const Instance& inst);

Schedule colored_line_solve(const Instance& inst);

// One color (the blank) may repeat; all others are unique. Enumerates the
// cyclic-order-preserving blank assignments (at most one per blank vertex),
// routes to each candidate, and keeps the shortest schedule.
Schedule incomplete_cycle_solve(const Instance& inst);

// Per branch and color, matches end-most tokens to end-most vertices;
// leftover tokens go to the nearest free vertex of their color (ties to the
// lowest vertex id).
Configuration colored_star_target(const Instance& inst);

star::StarResult colored_star_solve(const Instance& inst);

// Smallest d such that every color class admits a perfect matching between
// current and destination vertices at geodesic distance <= d, together with
// a placement realizing it. Lower-bounds the colored optimum.
std::pair<int, Configuration> bottleneck_d_star(const Instance& inst);

grid::GridResult colored_grid_solve(const Instance& inst);

}  // namespace pts::colored
