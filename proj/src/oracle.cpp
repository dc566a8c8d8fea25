#include "pts/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace pts::oracle {

namespace {

// Configurations and color signatures pack into 4-bit cells of a u64, so
// searchable graphs hold at most 16 vertices (the vertex cap is lower).
constexpr int kMaxPackable = 16;

std::uint64_t pack(const std::vector<int>& cells) {
  std::uint64_t s = 0;
  for (std::size_t v = 0; v < cells.size(); ++v)
    s |= static_cast<std::uint64_t>(cells[v]) << (4 * v);
  return s;
}

std::uint64_t apply_packed(std::uint64_t s, const Matching& m) {
  for (const auto& [u, v] : m.swaps) {
    std::uint64_t a = (s >> (4 * u)) & 0xF;
    std::uint64_t b = (s >> (4 * v)) & 0xF;
    s &= ~((0xFull << (4 * u)) | (0xFull << (4 * v)));
    s |= (b << (4 * u)) | (a << (4 * v));
  }
  return s;
}

void check_vertex_cap(int n, const OracleLimits& lim) {
  if (n > lim.max_vertices || n > kMaxPackable)
    throw capacity_error(
        "instance has " + std::to_string(n) + " vertices, oracle cap is " +
        std::to_string(std::min(lim.max_vertices, kMaxPackable)));
}

void check_limits(const Instance& inst, const OracleLimits& lim) {
  const int n = inst.graph.vertex_count();
  check_vertex_cap(n, lim);
  // State estimate: n! for distinct tokens, the multinomial over color
  // multiplicities otherwise.
  long double states = 1;
  for (int i = 2; i <= n; ++i) states *= i;
  if (inst.labeling) {
    std::map<int, int> mult;
    for (int t = 0; t < n; ++t) ++mult[inst.labeling->color_of_token(t)];
    for (auto& [color, count] : mult)
      for (int i = 2; i <= count; ++i) states /= i;
  }
  if (states > static_cast<long double>(lim.max_states))
    throw capacity_error("estimated state count exceeds the node budget");
}

using ParentMap =
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>>;

Schedule forward_path(const ParentMap& parent, std::uint64_t from_goal,
                      std::uint64_t start,
                      const std::vector<Matching>& moves) {
  std::vector<int> idx;
  for (std::uint64_t s = from_goal; s != start;) {
    auto it = parent.at(s);
    idx.push_back(it.second);
    s = it.first;
  }
  std::reverse(idx.begin(), idx.end());
  Schedule out;
  for (int i : idx) out.steps.push_back(moves[i]);
  return out;
}

std::vector<int> dense_token_colors(const ColorLabeling& lab) {
  std::vector<int> dense(lab.size());
  std::map<int, int> ids;
  for (int t = 0; t < lab.size(); ++t) {
    int c = lab.color_of_token(t);
    if (c < 0) throw feasibility_error("negative color id");
    auto it = ids.try_emplace(c, static_cast<int>(ids.size())).first;
    dense[t] = it->second;
  }
  if (ids.size() > 16) throw capacity_error("more than 16 colors");
  return dense;
}

}  // namespace

std::vector<Matching> enumerate_matchings(const Graph& g,
                                          const OracleLimits& lim) {
  const int m = static_cast<int>(g.edges().size());
  if (m > lim.max_edges)
    throw capacity_error("graph has " + std::to_string(m) +
                         " edges, enumeration cap is " +
                         std::to_string(lim.max_edges));
  if (g.vertex_count() > 64)
    throw capacity_error("matching enumeration supports at most 64 vertices");

  std::vector<std::uint64_t> edge_mask(m);
  for (int i = 0; i < m; ++i)
    edge_mask[i] =
        (1ull << g.edges()[i].first) | (1ull << g.edges()[i].second);

  std::vector<Matching> out;
  std::vector<Edge> current;
  auto recurse = [&](auto&& self, int start, std::uint64_t used) -> void {
    for (int i = start; i < m; ++i) {
      if (edge_mask[i] & used) continue;
      current.push_back(g.edges()[i]);
      out.push_back(Matching(current));
      if (out.size() > lim.max_matchings)
        throw capacity_error("matching count exceeds the enumeration budget");
      self(self, i + 1, used | edge_mask[i]);
      current.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

OracleResult exact_opt(const Instance& inst, const OracleLimits& lim) {
  check_limits(inst, lim);
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  const std::vector<Matching> moves = enumerate_matchings(g, lim);

  if (inst.labeling) {
    // Forward search over vertex-color signatures; same-colored
    // permutations collapse to one state.
    const std::vector<int> dense = dense_token_colors(*inst.labeling);
    std::vector<int> start_cells(n), goal_cells(n);
    for (int v = 0; v < n; ++v) {
      start_cells[v] = dense[inst.initial.token_at(v)];
      goal_cells[v] = dense[v];
    }
    const std::uint64_t start = pack(start_cells);
    const std::uint64_t goal = pack(goal_cells);

    ParentMap parent;
    std::unordered_map<std::uint64_t, int> depth{{start, 0}};
    std::deque<std::uint64_t> q{start};
    while (!q.empty()) {
      std::uint64_t s = q.front();
      q.pop_front();
      if (s == goal)
        return {depth[s], forward_path(parent, goal, start, moves)};
      for (int i = 0; i < static_cast<int>(moves.size()); ++i) {
        std::uint64_t t = apply_packed(s, moves[i]);
        if (depth.count(t)) continue;
        depth[t] = depth[s] + 1;
        parent[t] = {s, i};
        q.push_back(t);
      }
    }
    throw error("colored goal unreachable");  // connected graph: impossible
  }

  const std::uint64_t start = pack(inst.initial.tokens());
  const std::uint64_t goal = pack(Configuration::identity(n).tokens());
  if (start == goal) return {0, Schedule{}};

  // Bidirectional level-by-level search; matchings are involutions so the
  // backward side uses the same moves. A candidate meeting point is exact
  // once completed levels F + B + 1 reach its total, since any shorter
  // solution would already have been detected.
  ParentMap fwd_parent, bwd_parent;
  std::unordered_map<std::uint64_t, int> fwd_depth{{start, 0}};
  std::unordered_map<std::uint64_t, int> bwd_depth{{goal, 0}};
  std::vector<std::uint64_t> fwd_frontier{start}, bwd_frontier{goal};
  int completed = 0;  // F + B
  int best = std::numeric_limits<int>::max();
  std::uint64_t best_meet = 0;

  while (best > completed + 1) {
    bool expand_fwd = fwd_frontier.size() <= bwd_frontier.size();
    auto& frontier = expand_fwd ? fwd_frontier : bwd_frontier;
    auto& depth = expand_fwd ? fwd_depth : bwd_depth;
    auto& parent = expand_fwd ? fwd_parent : bwd_parent;
    auto& other_depth = expand_fwd ? bwd_depth : fwd_depth;
    if (frontier.empty()) break;

    std::vector<std::uint64_t> next;
    for (std::uint64_t s : frontier) {
      int d = depth[s];
      for (int i = 0; i < static_cast<int>(moves.size()); ++i) {
        std::uint64_t t = apply_packed(s, moves[i]);
        if (depth.count(t)) continue;
        depth[t] = d + 1;
        parent[t] = {s, i};
        auto it = other_depth.find(t);
        if (it != other_depth.end() && d + 1 + it->second < best) {
          best = d + 1 + it->second;
          best_meet = t;
        }
        next.push_back(t);
      }
    }
    frontier = std::move(next);
    ++completed;
  }
  if (best == std::numeric_limits<int>::max())
    throw error("identity unreachable");  // connected graph: impossible

  Schedule w = forward_path(fwd_parent, best_meet, start, moves);
  std::vector<int> idx;
  for (std::uint64_t s = best_meet; s != goal;) {
    auto it = bwd_parent.at(s);
    idx.push_back(it.second);
    s = it.first;
  }
  for (int i : idx) w.steps.push_back(moves[i]);
  return {best, std::move(w)};
}

DepthTable DepthTable::build(const Graph& g, const OracleLimits& lim) {
  check_vertex_cap(g.vertex_count(), lim);
  const std::vector<Matching> moves = enumerate_matchings(g, lim);
  DepthTable table;
  const std::uint64_t goal =
      pack(Configuration::identity(g.vertex_count()).tokens());
  table.depth_[goal] = 0;
  std::deque<std::uint64_t> q{goal};
  while (!q.empty()) {
    std::uint64_t s = q.front();
    q.pop_front();
    int d = table.depth_[s];
    if (table.depth_.size() > lim.max_states)
      throw capacity_error("state count exceeds the node budget");
    for (const Matching& m : moves) {
      std::uint64_t t = apply_packed(s, m);
      if (table.depth_.count(t)) continue;
      table.depth_[t] = d + 1;
      q.push_back(t);
    }
  }
  return table;
}

int DepthTable::depth_of(const Configuration& c) const {
  auto it = depth_.find(pack(c.tokens()));
  if (it == depth_.end()) throw lookup_error("configuration not in table");
  return it->second;
}

ColoredDepthTable ColoredDepthTable::build(const Graph& g,
                                           const ColorLabeling& lab,
                                           const OracleLimits& lim) {
  check_vertex_cap(g.vertex_count(), lim);
  const int n = g.vertex_count();
  if (lab.size() != n)
    throw feasibility_error("labeling size differs from vertex count");
  const std::vector<Matching> moves = enumerate_matchings(g, lim);

  ColoredDepthTable table;
  table.token_dense_ = dense_token_colors(lab);

  std::vector<int> goal_cells(n);
  for (int v = 0; v < n; ++v) goal_cells[v] = table.token_dense_[v];
  const std::uint64_t goal = pack(goal_cells);
  table.depth_[goal] = 0;
  std::deque<std::uint64_t> q{goal};
  while (!q.empty()) {
    std::uint64_t s = q.front();
    q.pop_front();
    int d = table.depth_[s];
    for (const Matching& m : moves) {
      std::uint64_t t = apply_packed(s, m);
      if (t == s || table.depth_.count(t)) continue;
      table.depth_[t] = d + 1;
      q.push_back(t);
    }
  }
  return table;
}

int ColoredDepthTable::depth_of(const Configuration& c) const {
  std::vector<int> cells(c.size());
  for (int v = 0; v < c.size(); ++v)
    cells[v] = token_dense_.at(c.token_at(v));
  auto it = depth_.find(pack(cells));
  if (it == depth_.end()) throw lookup_error("signature not in table");
  return it->second;
}

}  // namespace pts::oracle
