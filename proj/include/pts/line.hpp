#pragma once

#include <utility>
#include <vector>

#include "pts/core.hpp"

namespace pts::line {

// Position-space step lists: each step is a set of swapped adjacent
// position pairs (i, i+1) on a path whose cells hold `keys`. Callers map
// positions back to their own vertex ids.
using StepList = std::vector<std::vector<std::pair<int, int>>>;

// Alternates odd-position and even-position comparison steps, starting with
// the odd class, swapping strict inversions, until the keys are
// non-decreasing. At most keys.size() steps; leading/interior steps may be
// empty, trailing ones never are.
StepList odd_even_steps(std::vector<int> keys);

// Swaps every adjacent strict inversion each step. For two-class keys the
// inversions are automatically disjoint and the step count is the optimal
// two-class sorting depth.
StepList two_class_steps(std::vector<int> keys);

// Odd-even routing of a path instance to the identity.
Schedule odd_even_solve(const Instance& inst);

// Same, but tokens are ordered by token_key instead of their ids; the
// schedule routes the instance to the placement sorted by key. Ties never
// swap.
Schedule odd_even_solve(const Instance& inst,
                        const std::vector<int>& token_key);

// Per-token progress measure on a path: the prefix term scans prefixes
// [0..j] left of the token that contain a token wanting to cross it,
// counting crossers inside the prefix plus non-crossers between the prefix
// and the token; the suffix term mirrors this on the right. Zero exactly
// when no token wants to cross.
struct PotentialBreakdown {
  int prefix_term = 0;
  int suffix_term = 0;
  int total = 0;
};

PotentialBreakdown potential(const Graph& g, const Configuration& c,
                             int token);

}  // namespace pts::line
