#include "pts/core.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace pts {

Edge make_edge(int u, int v) {
  if (u == v) throw parameter_error("self-loop (" + std::to_string(u) + ")");
  return {std::min(u, v), std::max(u, v)};
}

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph::Graph(Topology t, int n, std::vector<Edge> edges)
    : topo_(std::move(t)), n_(n), edges_(std::move(edges)) {
  if (n_ <= 0) throw parameter_error("graph needs at least one vertex");
  for (auto& e : edges_) {
    e = make_edge(e.first, e.second);
    if (e.first < 0 || e.second >= n_)
      throw parameter_error("edge " + edge_str(e) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw parameter_error("parallel edge in edge list");

  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  dist_.assign(n_, std::vector<int>(n_, -1));
  for (int s = 0; s < n_; ++s) {
    auto& d = dist_[s];
    d[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj_[u])
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          q.push(w);
        }
    }
    for (int v = 0; v < n_; ++v)
      if (d[v] < 0) throw parameter_error("graph is not connected");
  }
}

Graph Graph::line(int n) {
  if (n < 1) throw parameter_error("line needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  Topology t{TopologyKind::line, n, 0, {}};
  return Graph(std::move(t), n, std::move(e));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw parameter_error("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  Topology t{TopologyKind::cycle, n, 0, {}};
  return Graph(std::move(t), n, std::move(e));
}

Graph Graph::star(std::vector<int> branch_lengths) {
  if (branch_lengths.empty()) throw parameter_error("star needs branches");
  for (int len : branch_lengths)
    if (len < 1) throw parameter_error("star branch length must be >= 1");
  int n = 1 + std::accumulate(branch_lengths.begin(), branch_lengths.end(), 0);
  std::vector<Edge> e;
  int next = 1;
  for (int len : branch_lengths) {
    e.push_back({0, next});
    for (int i = 1; i < len; ++i) e.push_back({next + i - 1, next + i});
    next += len;
  }
  Topology t{TopologyKind::star, 0, 0, std::move(branch_lengths)};
  return Graph(std::move(t), n, std::move(e));
}

Graph Graph::grid(int h, int n) {
  if (h < 1 || n < 1) throw parameter_error("grid needs h,n >= 1");
  auto id = [n](int a, int b) { return a * n + b; };
  std::vector<Edge> e;
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < n; ++b) {
      if (a + 1 < h) e.push_back({id(a, b), id(a + 1, b)});
      if (b + 1 < n) e.push_back({id(a, b), id(a, b + 1)});
    }
  Topology t{TopologyKind::grid, n, h, {}};
  return Graph(std::move(t), h * n, std::move(e));
}

Graph Graph::complete(int n) {
  if (n < 2) throw parameter_error("complete graph needs n >= 2");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  Topology t{TopologyKind::general, n, 0, {}};
  return Graph(std::move(t), n, std::move(e));
}

Graph Graph::general(int n, std::vector<Edge> edges) {
  Topology t{TopologyKind::general, n, 0, {}};
  return Graph(std::move(t), n, std::move(edges));
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  Edge e = make_edge(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::diameter() const {
  int d = 0;
  for (const auto& row : dist_)
    for (int x : row) d = std::max(d, x);
  return d;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.edges_ == b.edges_ &&
         a.topo_.kind == b.topo_.kind && a.topo_.n == b.topo_.n &&
         a.topo_.h == b.topo_.h &&
         a.topo_.branch_lengths == b.topo_.branch_lengths;
}

Configuration Configuration::identity(int n) {
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  return Configuration(std::move(t));
}

Configuration::Configuration(std::vector<int> tokens)
    : tokens_(std::move(tokens)) {
  const int n = static_cast<int>(tokens_.size());
  if (n == 0) throw parameter_error("empty configuration");
  position_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int t = tokens_[v];
    if (t < 0 || t >= n)
      throw parameter_error("token " + std::to_string(t) + " out of range");
    if (position_[t] != -1)
      throw parameter_error("duplicate token " + std::to_string(t));
    position_[t] = v;
  }
}

int Configuration::token_at(int v) const {
  if (v < 0 || v >= size())
    throw lookup_error("vertex " + std::to_string(v) + " out of range");
  return tokens_[v];
}

int Configuration::position_of(int t) const {
  if (t < 0 || t >= size())
    throw lookup_error("token " + std::to_string(t) + " out of range");
  return position_[t];
}

bool Configuration::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if (tokens_[v] != v) return false;
  return true;
}

Matching::Matching(std::initializer_list<Edge> list)
    : Matching(std::vector<Edge>(list)) {}

Matching::Matching(std::vector<Edge> list) : swaps(std::move(list)) {
  for (auto& e : swaps) e = make_edge(e.first, e.second);
  std::sort(swaps.begin(), swaps.end());
  swaps.erase(std::unique(swaps.begin(), swaps.end()), swaps.end());
}

void Matching::validate(const Graph& g) const {
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& e : swaps) {
    if (!g.has_edge(e.first, e.second))
      throw invalid_matching_error("pair " + edge_str(e) +
                                   " is not an edge of the graph");
    if (used[e.first] || used[e.second])
      throw invalid_matching_error("pairs in " + edge_str(e) +
                                   " share a vertex");
    used[e.first] = used[e.second] = 1;
  }
}

int ColorLabeling::color_of_token(int t) const {
  if (t < 0 || t >= size())
    throw lookup_error("token " + std::to_string(t) + " out of range");
  return token_color[t];
}

Instance::Instance(Graph g, Configuration c, std::optional<ColorLabeling> l)
    : graph(std::move(g)), initial(std::move(c)), labeling(std::move(l)) {
  if (initial.size() != graph.vertex_count())
    throw parameter_error("configuration size differs from vertex count");
  if (labeling && labeling->size() != graph.vertex_count())
    throw feasibility_error("labeling size differs from vertex count");
}

Configuration apply_matching(const Graph& g, const Configuration& c,
                             const Matching& m) {
  m.validate(g);
  std::vector<int> t = c.tokens();
  for (const auto& [u, v] : m.swaps) std::swap(t[u], t[v]);
  return Configuration(std::move(t));
}

Configuration apply_schedule(const Graph& g, const Configuration& c,
                             const Schedule& s) {
  Configuration cur = c;
  for (const auto& m : s.steps) cur = apply_matching(g, cur, m);
  return cur;
}

VerifyReport verify(const Instance& inst, const Schedule& s) {
  std::vector<std::string> violations;
  std::vector<int> t = inst.initial.tokens();
  const Graph& g = inst.graph;
  bool steps_ok = true;

  for (int k = 0; k < s.length(); ++k) {
    const Matching& m = s.steps[k];
    std::vector<char> used(g.vertex_count(), 0);
    for (const auto& e : m.swaps) {
      bool ok = true;
      if (!g.has_edge(e.first, e.second)) {
        violations.push_back("step " + std::to_string(k) + ": pair " +
                             edge_str(e) + " is not an edge");
        ok = false;
      }
      if (ok && (used[e.first] || used[e.second])) {
        violations.push_back("step " + std::to_string(k) + ": pair " +
                             edge_str(e) + " shares a vertex");
        ok = false;
      }
      if (!ok) {
        steps_ok = false;
        continue;
      }
      used[e.first] = used[e.second] = 1;
      std::swap(t[e.first], t[e.second]);
    }
  }

  bool goal_ok = true;
  if (inst.labeling) {
    const auto& lab = *inst.labeling;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (lab.color_of_token(t[v]) != lab.color_of_vertex(v)) {
        violations.push_back("vertex " + std::to_string(v) + " holds color " +
                             std::to_string(lab.color_of_token(t[v])) +
                             ", expects " +
                             std::to_string(lab.color_of_vertex(v)));
        goal_ok = false;
      }
  } else {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (t[v] != v) {
        violations.push_back("vertex " + std::to_string(v) + " holds token " +
                             std::to_string(t[v]));
        goal_ok = false;
      }
  }
  return VerifyReport{steps_ok && goal_ok, Configuration(std::move(t)),
                      std::move(violations)};
}

Schedule normalize(Schedule s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < s.steps.size(); ++i) {
      auto& a = s.steps[i].swaps;
      auto& b = s.steps[i + 1].swaps;
      std::vector<Edge> shared;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(shared));
      if (shared.empty()) continue;
      auto drop = [&shared](std::vector<Edge>& v) {
        std::vector<Edge> out;
        std::set_difference(v.begin(), v.end(), shared.begin(), shared.end(),
                            std::back_inserter(out));
        v = std::move(out);
      };
      drop(a);
      drop(b);
      changed = true;
    }
    auto it = std::remove_if(s.steps.begin(), s.steps.end(),
                             [](const Matching& m) { return m.empty(); });
    if (it != s.steps.end()) {
      s.steps.erase(it, s.steps.end());
      changed = true;
    }
  }
  return s;
}

int d_max_lower_bound(const Instance& inst) {
  int d = 0;
  for (int t = 0; t < inst.graph.vertex_count(); ++t)
    d = std::max(d, inst.graph.distance(inst.initial.position_of(t), t));
  return d;
}

Configuration compose_with_target(const Configuration& initial,
                                  const Configuration& target) {
  if (initial.size() != target.size())
    throw parameter_error("initial and target configurations differ in size");
  std::vector<int> t(initial.size());
  for (int v = 0; v < initial.size(); ++v)
    t[v] = target.position_of(initial.token_at(v));
  return Configuration(std::move(t));
}

Rational reduced_ratio(long long num, long long den) {
  long long g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

SolveReport make_report(std::string algorithm_name, const Instance& inst,
                        Schedule schedule,
                        std::map<std::string, int> extra_lower_bounds,
                        std::vector<int> phase_lengths) {
  SolveReport rep;
  rep.algorithm_name = std::move(algorithm_name);
  rep.length = schedule.length();
  rep.schedule = std::move(schedule);
  auto it = extra_lower_bounds.find("d_star");
  rep.d_max = it != extra_lower_bounds.end() ? it->second
                                             : d_max_lower_bound(inst);
  rep.extra_lower_bounds = std::move(extra_lower_bounds);
  if (rep.d_max > 0) rep.ratio_to_dmax = reduced_ratio(rep.length, rep.d_max);
  rep.phase_lengths = std::move(phase_lengths);
  return rep;
}

}  // namespace pts
