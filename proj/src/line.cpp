#include "pts/line.hpp"

#include <algorithm>

namespace pts::line {

namespace {

bool is_sorted_keys(const std::vector<int>& keys) {
  return std::is_sorted(keys.begin(), keys.end());
}

void require_line(const Graph& g) {
  if (g.topology().kind != TopologyKind::line)
    throw topology_error("operation requires a line graph");
}

Schedule steps_to_schedule(const StepList& steps) {
  Schedule s;
  s.steps.reserve(steps.size());
  for (const auto& step : steps) {
    std::vector<Edge> e;
    e.reserve(step.size());
    for (auto [i, j] : step) e.push_back({i, j});
    s.steps.push_back(Matching(std::move(e)));
  }
  return s;
}

}  // namespace

StepList odd_even_steps(std::vector<int> keys) {
  const int n = static_cast<int>(keys.size());
  StepList steps;
  int k = 0;
  while (!is_sorted_keys(keys)) {
    ++k;
    if (k > n + 1) throw error("odd-even routing failed to converge");
    std::vector<std::pair<int, int>> step;
    for (int i = (k % 2 == 1) ? 0 : 1; i + 1 < n; i += 2)
      if (keys[i] > keys[i + 1]) {
        std::swap(keys[i], keys[i + 1]);
        step.push_back({i, i + 1});
      }
    steps.push_back(std::move(step));
  }
  return steps;
}

StepList two_class_steps(std::vector<int> keys) {
  const int n = static_cast<int>(keys.size());
  StepList steps;
  int k = 0;
  while (!is_sorted_keys(keys)) {
    ++k;
    if (k > n + 1) throw error("two-class routing failed to converge");
    std::vector<std::pair<int, int>> step;
    for (int i = 0; i + 1 < n; ++i)
      if (keys[i] > keys[i + 1]) {
        std::swap(keys[i], keys[i + 1]);
        step.push_back({i, i + 1});
        ++i;  // the swapped pair occupies i+1; inversions cannot overlap
      }
    steps.push_back(std::move(step));
  }
  return steps;
}

Schedule odd_even_solve(const Instance& inst) {
  require_line(inst.graph);
  std::vector<int> keys(inst.graph.vertex_count());
  for (int v = 0; v < inst.graph.vertex_count(); ++v)
    keys[v] = inst.initial.token_at(v);
  return steps_to_schedule(odd_even_steps(std::move(keys)));
}

Schedule odd_even_solve(const Instance& inst,
                        const std::vector<int>& token_key) {
  require_line(inst.graph);
  if (static_cast<int>(token_key.size()) != inst.graph.vertex_count())
    throw parameter_error("token key size differs from vertex count");
  std::vector<int> keys(inst.graph.vertex_count());
  for (int v = 0; v < inst.graph.vertex_count(); ++v)
    keys[v] = token_key[inst.initial.token_at(v)];
  return steps_to_schedule(odd_even_steps(std::move(keys)));
}

PotentialBreakdown potential(const Graph& g, const Configuration& c,
                             int token) {
  require_line(g);
  const int n = g.vertex_count();
  const int pos = c.position_of(token);

  // greater[j] / less[j]: counts over positions [0..j] of tokens above /
  // below `token`.
  std::vector<int> greater(n + 1, 0), less(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    greater[v + 1] = greater[v] + (c.token_at(v) > token ? 1 : 0);
    less[v + 1] = less[v] + (c.token_at(v) < token ? 1 : 0);
  }

  int prefix_term = 0;
  for (int j = 0; j < pos; ++j) {
    int crossers = greater[j + 1];
    if (crossers == 0) continue;  // prefix holds nobody wanting to cross
    int blockers = less[pos] - less[j + 1];  // within (j, pos)
    prefix_term = std::max(prefix_term, crossers + blockers);
  }

  int suffix_term = 0;
  for (int j = pos + 1; j < n; ++j) {
    int crossers = less[n] - less[j];
    if (crossers == 0) continue;
    int blockers = greater[j] - greater[pos + 1];  // within (pos, j)
    suffix_term = std::max(suffix_term, crossers + blockers);
  }

  return {prefix_term, suffix_term, prefix_term + suffix_term};
}

}  // namespace pts::line
