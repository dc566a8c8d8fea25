#include "pts/cycle.hpp"

#include <algorithm>

#include "pts/line.hpp"

namespace pts::cycle {

namespace {

void require_cycle(const Graph& g) {
  if (g.topology().kind != TopologyKind::cycle)
    throw topology_error("operation requires a cycle graph");
}

// Head index i of a cycle edge (i, i+1 mod n).
int edge_head(Edge e, int n) {
  e = make_edge(e.first, e.second);
  if (e.second == e.first + 1 && e.second <= n - 1) return e.first;
  if (e.first == 0 && e.second == n - 1) return n - 1;
  throw invalid_matching_error("pair (" + std::to_string(e.first) + "," +
                               std::to_string(e.second) +
                               ") is not a cycle edge");
}

Edge edge_from_head(int i, int n) { return make_edge(i, (i + 1) % n); }

// Routes the instance as a path by ignoring the wrap edge (n-1, 0).
Schedule cut_line_fallback(const Instance& inst) {
  Instance path(Graph::line(inst.graph.vertex_count()), inst.initial);
  return line::odd_even_solve(path);
}

// Shared loop: per 1-based step k, swap every reasonable edge of
// classes[(k-1) % classes.size()]. Fails on two consecutive empty steps or
// when the identity is not reached within n steps.
std::optional<Schedule> run_alternating(
    const Instance& inst, const std::vector<std::vector<Edge>>& classes) {
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  Configuration c = inst.initial;
  Schedule out;
  int k = 0;
  bool prev_empty = false;
  while (!c.is_identity() && k < n) {
    ++k;
    std::vector<Edge> step;
    for (const Edge& e : classes[(k - 1) % classes.size()])
      if (is_reasonable(g, c, e)) step.push_back(e);
    bool empty = step.empty();
    if (k > 1 && prev_empty && empty) return std::nullopt;
    prev_empty = empty;
    Matching m(std::move(step));
    c = apply_matching(g, c, m);
    out.steps.push_back(std::move(m));
  }
  if (!c.is_identity()) return std::nullopt;
  return out;
}

}  // namespace

Edge opposite_edge(Edge e, int n) {
  if (n < 3) throw parameter_error("cycle length must be >= 3");
  int i = edge_head(e, n);
  return edge_from_head((i + n / 2) % n, n);
}

bool is_reasonable(const Graph& g, const Configuration& c, Edge e) {
  require_cycle(g);
  const int n = g.vertex_count();
  const int i = edge_head(e, n);
  const int j = edge_head(opposite_edge(e, n), n);
  const int start = (j + 1) % n;  // first vertex of the cut path
  auto path_pos = [&](int v) { return (v - start + n) % n; };
  // Vertex i precedes i+1 on the cut path; the swap is reasonable when the
  // tokens' destinations along the path are in the opposite order.
  int a = c.token_at(i);
  int b = c.token_at((i + 1) % n);
  return path_pos(a) > path_pos(b);
}

std::optional<Schedule> cycle_odd_even(const Instance& inst) {
  require_cycle(inst.graph);
  const int n = inst.graph.vertex_count();
  if (n % 2 != 0) throw topology_error("even cycle required");
  std::vector<Edge> odd_class, even_class;
  for (int i = 0; i < n; ++i)
    (i % 2 == 0 ? odd_class : even_class).push_back(edge_from_head(i, n));
  return run_alternating(inst, {odd_class, even_class});
}

std::optional<Schedule> odd_cycle_alternating(const Instance& inst) {
  require_cycle(inst.graph);
  const int n = inst.graph.vertex_count();
  if (n % 2 == 0) throw topology_error("odd cycle required");
  const int r = n / 2;
  std::vector<Edge> e1, e2, e3;
  for (int i = 0; i < 2 * r - 1; i += 2) e1.push_back(edge_from_head(i, n));
  for (int i = 1; i < 2 * r; i += 2) e2.push_back(edge_from_head(i, n));
  e3.push_back(edge_from_head(n - 1, n));
  return run_alternating(inst, {e1, e3, e2, e3});
}

Schedule even_cycle_solve(const Instance& inst) {
  auto greedy = cycle_odd_even(inst);
  Schedule fallback = cut_line_fallback(inst);
  if (!greedy || greedy->length() > fallback.length()) return fallback;
  return *greedy;
}

Schedule odd_cycle_solve(const Instance& inst) {
  auto greedy = odd_cycle_alternating(inst);
  Schedule fallback = cut_line_fallback(inst);
  if (!greedy || greedy->length() > fallback.length()) return fallback;
  return *greedy;
}

Schedule cycle_solve(const Instance& inst) {
  require_cycle(inst.graph);
  return inst.graph.vertex_count() % 2 == 0 ? even_cycle_solve(inst)
                                            : odd_cycle_solve(inst);
}

int winding_lower_bound(const Instance& inst) {
  require_cycle(inst.graph);
  const int n = inst.graph.vertex_count();
  std::vector<int> s(n);
  long long total = 0;
  for (int t = 0; t < n; ++t) {
    s[t] = ((t - inst.initial.position_of(t)) % n + n) % n;
    total += s[t];
  }
  const long long flips = total / n;  // tokens that must trade s for s - n
  for (int d = 0; d <= n; ++d) {
    long long must = 0, free = 0;
    bool feasible = true;
    for (int t = 0; t < n; ++t) {
      bool keep_ok = s[t] <= d;
      bool flip_ok = n - s[t] <= d;
      if (!keep_ok && !flip_ok) {
        feasible = false;
        break;
      }
      if (!keep_ok)
        ++must;
      else if (flip_ok)
        ++free;
    }
    if (feasible && must <= flips && flips <= must + free) return d;
  }
  throw error("winding bound search failed");  // unreachable: d = n works
}

}  // namespace pts::cycle
