#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pts/core.hpp"

namespace pts::star {

// Canonical subdivided-star layout: center is vertex 0, branch b occupies a
// contiguous id range ordered outward from the center.
struct StarLayout {
  int branch_count = 0;
  std::vector<int> branch_len;
  std::vector<int> branch_of;  // vertex -> branch, center -> -1
  std::vector<int> depth_of;   // vertex -> distance from center

  static StarLayout from(const Graph& g);
  // v_{b,i}; i = 0 names the center.
  int vertex(int b, int i) const;
};

// True when, on every branch, every token that does not belong to the
// branch sits closer to the center than every token that does.
bool branch_sorted(const Instance& inst);

struct StarResult {
  Schedule schedule;
  std::array<int, 3> phase_lengths{0, 0, 0};
};

// Three phases: per-branch two-class bubbling until branch-sorted, greedy
// routing of tokens through the center (with parking moves that keep the
// center-bound token out of the way), then independent per-branch odd-even
// sorting. When a target is given the schedule routes the instance to it
// instead of to the identity.
StarResult star_solve(const Instance& inst,
                      const std::optional<Configuration>& target = {});

// First two phases only, exposed for callers that substitute their own
// final per-branch sorting. Returns the steps taken and the configuration
// they reach (in relabeled, identity-target space when target is given).
struct BranchRoutingResult {
  std::vector<Matching> steps;
  Configuration reached;
  int phase1 = 0;
  int phase2 = 0;
};

BranchRoutingResult route_to_branches(const Instance& inst);

}  // namespace pts::star
