#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pts/core.hpp"

namespace pts::oracle {

struct OracleLimits {
  int max_vertices = 9;
  std::uint64_t max_states = 5'000'000;
  int max_edges = 32;
  std::size_t max_matchings = 1'000'000;
};

// Every nonempty set of pairwise vertex-disjoint edges, in lexicographic
// order of edge indices. Deterministic.
std::vector<Matching> enumerate_matchings(const Graph& g,
                                          const OracleLimits& lim = {});

struct OracleResult {
  int opt = 0;
  Schedule witness;
};

// Exact minimum schedule length by breadth-first search over configurations
// (bidirectional when the goal is the unique identity). Colored instances
// search the space of vertex-color signatures, so same-colored permutations
// collapse. Throws capacity_error when the instance exceeds the limits;
// never returns a wrong answer.
OracleResult exact_opt(const Instance& inst, const OracleLimits& lim = {});

// Optimal depth of every configuration of a graph at once (one full
// breadth-first sweep from the identity). Amortizes sweeps that query many
// initial configurations on the same graph.
class DepthTable {
 public:
  static DepthTable build(const Graph& g, const OracleLimits& lim = {});
  int depth_of(const Configuration& c) const;

 private:
  std::unordered_map<std::uint64_t, int> depth_;
};

// Colored counterpart: optimal depth keyed by the initial vertex-color
// signature under a fixed labeling.
class ColoredDepthTable {
 public:
  static ColoredDepthTable build(const Graph& g, const ColorLabeling& lab,
                                 const OracleLimits& lim = {});
  int depth_of(const Configuration& c) const;

 private:
  std::unordered_map<std::uint64_t, int> depth_;
  std::vector<int> token_dense_;  // token -> dense color id
};

}  // namespace pts::oracle
