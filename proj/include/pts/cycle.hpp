#pragma once

#include <optional>

#include "pts/core.hpp"

namespace pts::cycle {

// Partner edge across the cycle: rotating the head of (i, i+1) by
// floor(n/2). An involution on even cycles; on odd cycles applying it n
// times returns the starting edge.
Edge opposite_edge(Edge e, int n);

// An edge (i, i+1) is reasonable when, on the path obtained by deleting its
// opposite edge, the two endpoint tokens sit in the order opposite to their
// destinations along that path.
bool is_reasonable(const Graph& g, const Configuration& c, Edge e);

// Alternates all-reasonable odd-class and even-class steps on an even
// cycle. Returns nullopt when two consecutive steps come up empty before
// the identity is reached, or when the identity is not reached within n
// steps.
std::optional<Schedule> cycle_odd_even(const Instance& inst);

// Period-four variant for odd cycles: classes run E1, E3, E2, E3, ... where
// E3 is the wrap edge alone. Same failure rule as cycle_odd_even.
std::optional<Schedule> odd_cycle_alternating(const Instance& inst);

// Reasonable-swap routing with a path fallback (the cycle minus the wrap
// edge routed by odd-even). Length at most 2*OPT.
Schedule even_cycle_solve(const Instance& inst);

// Odd-cycle counterpart; length at most 2*OPT + 1.
Schedule odd_cycle_solve(const Instance& inst);

// Dispatches on cycle parity.
Schedule cycle_solve(const Instance& inst);

// Exact bottleneck of net cyclic displacement: every token either keeps its
// clockwise displacement s or trades it for s - n, subject to the total
// summing to zero (each swap moves one token each way). The smallest
// achievable maximum magnitude lower-bounds the optimal depth.
int winding_lower_bound(const Instance& inst);

}  // namespace pts::cycle
