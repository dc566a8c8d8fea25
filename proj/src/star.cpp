#include "pts/star.hpp"

#include <algorithm>

#include "pts/line.hpp"

namespace pts::star {

namespace {

Configuration apply_fast(const Configuration& c, const Matching& m) {
  std::vector<int> t = c.tokens();
  for (const auto& [u, v] : m.swaps) std::swap(t[u], t[v]);
  return Configuration(std::move(t));
}

}  // namespace

StarLayout StarLayout::from(const Graph& g) {
  if (g.topology().kind != TopologyKind::star)
    throw topology_error("operation requires a subdivided star");
  StarLayout lay;
  lay.branch_len = g.topology().branch_lengths;
  lay.branch_count = static_cast<int>(lay.branch_len.size());
  lay.branch_of.assign(g.vertex_count(), -1);
  lay.depth_of.assign(g.vertex_count(), 0);
  int next = 1;
  for (int b = 0; b < lay.branch_count; ++b)
    for (int i = 1; i <= lay.branch_len[b]; ++i, ++next) {
      lay.branch_of[next] = b;
      lay.depth_of[next] = i;
    }
  return lay;
}

int StarLayout::vertex(int b, int i) const {
  if (i == 0) return 0;
  int base = 1;
  for (int k = 0; k < b; ++k) base += branch_len[k];
  return base + i - 1;
}

bool branch_sorted(const Instance& inst) {
  StarLayout lay = StarLayout::from(inst.graph);
  const auto& c = inst.initial;
  for (int v = 1; v < inst.graph.vertex_count(); ++v) {
    int b = lay.branch_of[v];
    if (lay.depth_of[v] >= lay.branch_len[b]) continue;
    bool native_here = lay.branch_of[c.token_at(v)] == b;
    bool native_next = lay.branch_of[c.token_at(v + 1)] == b;
    if (native_here && !native_next) return false;
  }
  return true;
}

namespace {

// Adds every (inner native, outer foreign) branch pair; such pairs never
// overlap, so the result is a matching.
std::vector<Edge> drain_swaps(const StarLayout& lay, const Configuration& c,
                              int n) {
  std::vector<Edge> out;
  for (int v = 1; v < n; ++v) {
    int b = lay.branch_of[v];
    if (lay.depth_of[v] >= lay.branch_len[b]) continue;  // branch tip
    if (lay.branch_of[c.token_at(v)] == b &&
        lay.branch_of[c.token_at(v + 1)] != b)
      out.push_back({v, v + 1});
  }
  return out;
}

}  // namespace

BranchRoutingResult route_to_branches(const Instance& inst) {
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  StarLayout lay = StarLayout::from(g);
  Configuration c = inst.initial;
  std::vector<Matching> steps;
  int phase1 = 0, phase2 = 0;

  // Phase 1: bubble foreign tokens centerward until branch-sorted.
  while (true) {
    std::vector<Edge> sw = drain_swaps(lay, c, n);
    if (sw.empty()) break;
    Matching m(std::move(sw));
    c = apply_fast(c, m);
    steps.push_back(std::move(m));
    ++phase1;
  }

  // Phase 2: route tokens through the center until every branch holds only
  // its own tokens (and the center token is home).
  auto any_misplaced = [&]() {
    for (int v = 1; v < n; ++v)
      if (lay.branch_of[c.token_at(v)] != lay.branch_of[v]) return true;
    return false;
  };
  const int cap = 6 * n + 12;
  while (any_misplaced()) {
    if (phase2 > cap) throw error("branch routing failed to converge");
    std::vector<char> used(n, 0);
    std::vector<Edge> sw;
    auto add = [&](int u, int v) {
      if (used[u] || used[v]) return false;
      used[u] = used[v] = 1;
      sw.push_back(make_edge(u, v));
      return true;
    };
    for (const Edge& e : drain_swaps(lay, c, n)) add(e.first, e.second);

    int center_token = c.token_at(0);
    if (center_token == 0) {
      // Move the home center token onto the lowest unfinished branch.
      for (int b = 0; b < lay.branch_count; ++b) {
        int gate = lay.vertex(b, 1);
        if (lay.branch_of[c.token_at(gate)] != b) {
          add(0, gate);
          break;
        }
      }
    } else {
      int b = lay.branch_of[center_token];
      add(0, lay.vertex(b, 1));
      // Keep the center-bound token out of the way: push it outward past a
      // foreign token, or pull it inward past a native one.
      int p = c.position_of(0);
      int cb = lay.branch_of[p];
      int depth = lay.depth_of[p];
      if (depth < lay.branch_len[cb]) {
        int outer = lay.vertex(cb, depth + 1);
        if (lay.branch_of[c.token_at(outer)] != cb) add(p, outer);
      }
      int inner = lay.vertex(cb, depth - 1);
      if (lay.branch_of[c.token_at(inner)] == cb) add(inner, p);
    }

    if (sw.empty()) throw error("branch routing stalled");
    Matching m(std::move(sw));
    c = apply_fast(c, m);
    steps.push_back(std::move(m));
    ++phase2;
  }

  return {std::move(steps), std::move(c), phase1, phase2};
}

StarResult star_solve(const Instance& inst,
                      const std::optional<Configuration>& target) {
  const Graph& g = inst.graph;
  StarLayout lay = StarLayout::from(g);
  Configuration start =
      target ? compose_with_target(inst.initial, *target) : inst.initial;

  BranchRoutingResult br = route_to_branches(Instance(g, start));

  // Phase 3: odd-even sort each branch in place, branches in lockstep.
  std::vector<line::StepList> branch_steps(lay.branch_count);
  int phase3 = 0;
  for (int b = 0; b < lay.branch_count; ++b) {
    std::vector<int> keys(lay.branch_len[b]);
    for (int i = 1; i <= lay.branch_len[b]; ++i)
      keys[i - 1] = lay.depth_of[br.reached.token_at(lay.vertex(b, i))];
    branch_steps[b] = line::odd_even_steps(std::move(keys));
    phase3 = std::max(phase3, static_cast<int>(branch_steps[b].size()));
  }

  Schedule out;
  out.steps = std::move(br.steps);
  for (int k = 0; k < phase3; ++k) {
    std::vector<Edge> sw;
    for (int b = 0; b < lay.branch_count; ++b) {
      if (k >= static_cast<int>(branch_steps[b].size())) continue;
      for (auto [i, j] : branch_steps[b][k])
        sw.push_back(make_edge(lay.vertex(b, i + 1), lay.vertex(b, j + 1)));
    }
    out.steps.push_back(Matching(std::move(sw)));
  }

  return {std::move(out), {br.phase1, br.phase2, phase3}};
}

}  // namespace pts::star
