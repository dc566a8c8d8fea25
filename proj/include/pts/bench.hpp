#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pts/core.hpp"

namespace pts::bench {

// Hard-family generators. Deterministic in (family, parameters, seed).
Instance cycle_rotation(int n);       // every token one step off around C_n
Instance line_shift(int n);           // halves of P_{2n} swapped
Instance star_center(int n);          // n unit branches, leaves deranged
Instance grid_random(int h, int n, std::uint64_t seed);
Instance random_instance(const Graph& g, std::uint64_t seed);
ColorLabeling random_labeling(int token_count, int colors,
                              std::uint64_t seed);

// Two-step routing of the rotation instance on the complete graph K_{2r}.
Schedule complete_graph_rotation_schedule(int r);

struct StretchRow {
  std::string family;
  int n = 0;
  int h = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  int length = 0;
  std::optional<int> opt;  // absent when the oracle is off or over budget
  int d_max = 0;
};

struct StretchSpec {
  std::string family;  // cycle_rotation | line_shift | star_center | grid_random
  std::vector<int> sizes;
  int h = 3;  // grid rows
  std::vector<std::uint64_t> seeds{1};
  bool use_oracle = true;
  std::string algorithm = "auto";
};

std::vector<StretchRow> stretch_experiment(const StretchSpec& spec);

// family,n,h,seed,algorithm,length,opt,d_max,len_over_opt,opt_over_dmax
std::string stretch_csv(const std::vector<StretchRow>& rows);

}  // namespace pts::bench
