#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pts/core.hpp"

namespace pts::grid {

// h x n grid; vertex (a, b) has id a*n + b.
struct GridLayout {
  int h = 0;
  int n = 0;

  static GridLayout from(const Graph& g);
  int id(int a, int b) const { return a * n + b; }
  int row(int v) const { return v / n; }
  int col(int v) const { return v % n; }
};

// Hamiltonian snake: down column 0, across the bottom, up column 1, across
// the top, and so on. `order` lists vertices along the path; `f1` is its
// edge set (all vertical edges plus the alternating horizontal stitches).
struct PathDecomposition {
  std::vector<int> order;
  std::vector<Edge> f1;
};

PathDecomposition boustrophedon_path(int h, int n);

// Routes the whole grid as a line along the snake path.
Schedule grid_path_solve(const Instance& inst);

// Replays a matching of off-path horizontal edges of a 2 x n grid as three
// path matchings: rungs, stitched rails, rungs. The three-step effect on
// any configuration equals the one-step effect of `m`.
std::array<Matching, 3> simulate_off_path_matching(const Matching& m, int n);

// A placement is amicable when every line along the longer dimension holds
// exactly one token per destination coordinate in that dimension, so the
// long lines can be routed independently.
bool is_amicable(const Graph& g, const Configuration& c);

// Amicable placement reachable by moves along the shorter dimension only
// (each token keeps its long-dimension coordinate). Built by decomposing
// the regular bipartite multigraph of (current line, destination line)
// token pairs into perfect matchings, one per short-dimension coordinate.
Configuration amicable_assignment(const Instance& inst);

struct GridResult {
  Schedule schedule;
  std::array<int, 3> phase_lengths{0, 0, 0};
};

// Short-lines to the amicable placement, long lines to destination
// long-coordinates, short lines to finish. When a target is given the
// schedule routes the instance to it instead of to the identity.
GridResult grid_three_phase_solve(
    const Instance& inst, const std::optional<Configuration>& target = {});

// Path routing for thin grids, three-phase otherwise; on small instances
// both run and the shorter schedule wins.
Schedule grid_auto_solve(const Instance& inst);

}  // namespace pts::grid
