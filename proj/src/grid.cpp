#include "pts/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pts/line.hpp"

namespace pts::grid {

GridLayout GridLayout::from(const Graph& g) {
  if (g.topology().kind != TopologyKind::grid)
    throw topology_error("operation requires a grid graph");
  return {g.topology().h, g.topology().n};
}

PathDecomposition boustrophedon_path(int h, int n) {
  if (h < 1 || n < 1) throw parameter_error("grid needs h,n >= 1");
  PathDecomposition out;
  out.order.reserve(h * n);
  for (int b = 0; b < n; ++b) {
    if (b % 2 == 0)
      for (int a = 0; a < h; ++a) out.order.push_back(a * n + b);
    else
      for (int a = h - 1; a >= 0; --a) out.order.push_back(a * n + b);
  }
  for (std::size_t i = 0; i + 1 < out.order.size(); ++i)
    out.f1.push_back(make_edge(out.order[i], out.order[i + 1]));
  return out;
}

Schedule grid_path_solve(const Instance& inst) {
  GridLayout lay = GridLayout::from(inst.graph);
  PathDecomposition path = boustrophedon_path(lay.h, lay.n);
  const int size = lay.h * lay.n;
  std::vector<int> pos_on_path(size);
  for (int p = 0; p < size; ++p) pos_on_path[path.order[p]] = p;

  std::vector<int> keys(size);
  for (int p = 0; p < size; ++p)
    keys[p] = pos_on_path[inst.initial.token_at(path.order[p])];

  Schedule out;
  for (const auto& step : line::odd_even_steps(std::move(keys))) {
    std::vector<Edge> sw;
    for (auto [i, j] : step)
      sw.push_back(make_edge(path.order[i], path.order[j]));
    out.steps.push_back(Matching(std::move(sw)));
  }
  return out;
}

std::array<Matching, 3> simulate_off_path_matching(const Matching& m, int n) {
  // 2 x n grid: rung edges are on the path; off-path horizontal edges are
  // top row at even columns and bottom row at odd columns.
  auto row_col = [n](int v) { return std::pair{v / n, v % n}; };
  std::vector<char> linked(std::max(0, n - 1), 0);
  for (const Edge& e : m.swaps) {
    auto [r1, c1] = row_col(e.first);
    auto [r2, c2] = row_col(e.second);
    bool horizontal = r1 == r2 && c2 == c1 + 1;
    bool off_path =
        horizontal && ((r1 == 0 && c1 % 2 == 0) || (r1 == 1 && c1 % 2 == 1));
    if (!off_path)
      throw invalid_matching_error("pair (" + std::to_string(e.first) + "," +
                                   std::to_string(e.second) +
                                   ") is not an off-path ladder edge");
    linked[c1] = 1;
  }

  std::vector<Edge> rungs, rails;
  std::vector<char> col_used(n, 0);
  for (int c = 0; c + 1 < n; ++c) {
    if (!linked[c]) continue;
    col_used[c] = col_used[c + 1] = 1;
    // The on-path rail between linked columns lies on the opposite row.
    int r = (c % 2 == 0) ? 1 : 0;
    rails.push_back(make_edge(r * n + c, r * n + c + 1));
  }
  for (int c = 0; c < n; ++c)
    if (col_used[c]) rungs.push_back(make_edge(c, n + c));

  Matching a(rungs);
  return {a, Matching(rails), a};
}

namespace {

// Orientation: phases 1 and 3 move along the short dimension, phase 2 along
// the long one. `Oriented` exposes the grid with long lines as "lines".
struct Oriented {
  GridLayout lay;
  bool transposed = false;  // true when h > n

  int lines() const { return transposed ? lay.n : lay.h; }       // short coord
  int line_len() const { return transposed ? lay.h : lay.n; }    // long coord
  // vertex at (short coordinate s, long coordinate l)
  int at(int s, int l) const {
    return transposed ? lay.id(l, s) : lay.id(s, l);
  }
  int short_of(int v) const { return transposed ? lay.col(v) : lay.row(v); }
  int long_of(int v) const { return transposed ? lay.row(v) : lay.col(v); }
};

Oriented orient(const Graph& g) {
  GridLayout lay = GridLayout::from(g);
  return {lay, lay.h > lay.n};
}

// Kuhn's augmenting-path matching over an adjacency-count matrix.
std::vector<int> perfect_matching(const std::vector<std::vector<int>>& count) {
  const int n = static_cast<int>(count.size());
  std::vector<int> match_right(n, -1), match_left(n, -1);
  for (int u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    auto tryk = [&](auto&& self, int x) -> bool {
      for (int y = 0; y < n; ++y) {
        if (!count[x][y] || seen[y]) continue;
        seen[y] = 1;
        if (match_right[y] < 0 || self(self, match_right[y])) {
          match_right[y] = x;
          match_left[x] = y;
          return true;
        }
      }
      return false;
    };
    if (!tryk(tryk, u)) throw error("perfect matching missing");
  }
  return match_left;
}

}  // namespace

bool is_amicable(const Graph& g, const Configuration& c) {
  Oriented o = orient(g);
  for (int s = 0; s < o.lines(); ++s) {
    std::vector<char> seen(o.line_len(), 0);
    for (int l = 0; l < o.line_len(); ++l) {
      int dest = o.long_of(c.token_at(o.at(s, l)));
      if (seen[dest]) return false;
      seen[dest] = 1;
    }
  }
  return true;
}

Configuration amicable_assignment(const Instance& inst) {
  Oriented o = orient(inst.graph);
  const int lines = o.lines(), len = o.line_len();

  // One token per edge (current long coordinate -> destination long
  // coordinate); the multigraph is `lines`-regular on both sides.
  std::vector<std::vector<int>> count(len, std::vector<int>(len, 0));
  std::map<std::pair<int, int>, std::vector<int>> bucket;
  for (int v = 0; v < inst.graph.vertex_count(); ++v) {
    int t = inst.initial.token_at(v);
    int from = o.long_of(v), to = o.long_of(t);
    ++count[from][to];
    bucket[{from, to}].push_back(t);
  }

  std::vector<int> tokens(inst.graph.vertex_count(), -1);
  for (int s = 0; s < lines; ++s) {
    std::vector<int> match = perfect_matching(count);
    for (int from = 0; from < len; ++from) {
      int to = match[from];
      --count[from][to];
      auto& pool = bucket[{from, to}];
      int t = pool.back();
      pool.pop_back();
      tokens[o.at(s, from)] = t;
    }
  }
  return Configuration(std::move(tokens));
}

GridResult grid_three_phase_solve(const Instance& inst,
                                  const std::optional<Configuration>& target) {
  const Graph& g = inst.graph;
  Oriented o = orient(g);
  Configuration start =
      target ? compose_with_target(inst.initial, *target) : inst.initial;
  Instance working(g, start);

  Configuration amicable = amicable_assignment(working);

  Schedule out;
  std::array<int, 3> phases{0, 0, 0};
  Configuration cur = start;

  // Each phase runs its per-line step lists in lockstep; lines are
  // vertex-disjoint so the union of same-index steps is a matching.
  auto run_lines = [&](bool along_long, const std::vector<int>& token_key,
                       int phase_idx) {
    int count = along_long ? o.lines() : o.line_len();
    int len = along_long ? o.line_len() : o.lines();
    std::vector<line::StepList> steps(count);
    int depth = 0;
    for (int i = 0; i < count; ++i) {
      std::vector<int> keys(len);
      for (int j = 0; j < len; ++j) {
        int v = along_long ? o.at(i, j) : o.at(j, i);
        keys[j] = token_key[cur.token_at(v)];
      }
      steps[i] = line::odd_even_steps(std::move(keys));
      depth = std::max(depth, static_cast<int>(steps[i].size()));
    }
    for (int k = 0; k < depth; ++k) {
      std::vector<Edge> sw;
      for (int i = 0; i < count; ++i) {
        if (k >= static_cast<int>(steps[i].size())) continue;
        for (auto [x, y] : steps[i][k]) {
          int u = along_long ? o.at(i, x) : o.at(x, i);
          int v = along_long ? o.at(i, y) : o.at(y, i);
          sw.push_back(make_edge(u, v));
        }
      }
      Matching m(std::move(sw));
      cur = apply_matching(g, cur, m);
      out.steps.push_back(std::move(m));
    }
    phases[phase_idx] = depth;
  };

  const int size = g.vertex_count();
  // Phase 1: within short lines, to the amicable placement.
  std::vector<int> key1(size);
  for (int t = 0; t < size; ++t)
    key1[t] = o.short_of(amicable.position_of(t));
  run_lines(false, key1, 0);

  // Phase 2: within long lines, to destination long coordinates.
  std::vector<int> key2(size);
  for (int t = 0; t < size; ++t) key2[t] = o.long_of(t);
  run_lines(true, key2, 1);

  // Phase 3: within short lines, to destinations.
  std::vector<int> key3(size);
  for (int t = 0; t < size; ++t) key3[t] = o.short_of(t);
  run_lines(false, key3, 2);

  if (!cur.is_identity()) throw error("grid routing failed to converge");
  return {std::move(out), phases};
}

Schedule grid_auto_solve(const Instance& inst) {
  GridLayout lay = GridLayout::from(inst.graph);
  if (std::min(lay.h, lay.n) <= 2) return grid_path_solve(inst);
  Schedule three = grid_three_phase_solve(inst).schedule;
  if (inst.graph.vertex_count() <= 64) {
    Schedule path = grid_path_solve(inst);
    if (path.length() < three.length()) return path;
  }
  return three;
}

}  // namespace pts::grid
