#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pts {

// Undirected edge with endpoints stored as (min, max).
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct topology_error : error {
  using error::error;
};
struct invalid_matching_error : error {
  using error::error;
};
struct lookup_error : error {
  using error::error;
};
struct capacity_error : error {
  using error::error;
};
struct parameter_error : error {
  using error::error;
};
struct feasibility_error : error {
  using error::error;
};
struct shape_error : error {
  using error::error;
};
struct parse_error : error {
  using error::error;
};

enum class TopologyKind { line, cycle, star, grid, general };

struct Topology {
  TopologyKind kind = TopologyKind::general;
  int n = 0;                        // line/cycle length; grid column count
  int h = 0;                        // grid row count
  std::vector<int> branch_lengths;  // star branches, center excluded
};

// Connected simple undirected graph. Vertices are 0-indexed. For tagged
// topologies the edge set is exactly the canonical one produced by the
// factory, so tests can validate by regeneration. All-pairs geodesic
// distances are precomputed; instances stay at desk scale.
class Graph {
 public:
  static Graph line(int n);
  static Graph cycle(int n);
  static Graph star(std::vector<int> branch_lengths);
  static Graph grid(int h, int n);
  static Graph complete(int n);
  static Graph general(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Topology& topology() const { return topo_; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int distance(int u, int v) const { return dist_[u][v]; }
  int diameter() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Graph(Topology t, int n, std::vector<Edge> edges);

  Topology topo_;
  int n_ = 0;
  std::vector<Edge> edges_;  // sorted, normalized
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> dist_;
};

// Placement of tokens on vertices: tokens()[v] is the token on vertex v.
// Token identifiers double as destination vertex names, so the identity
// placement is the routing goal. Always a bijection.
class Configuration {
 public:
  static Configuration identity(int n);
  explicit Configuration(std::vector<int> tokens);

  int size() const { return static_cast<int>(tokens_.size()); }
  int token_at(int v) const;
  int position_of(int t) const;
  bool is_identity() const;
  const std::vector<int>& tokens() const { return tokens_; }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<int> tokens_;    // vertex -> token
  std::vector<int> position_;  // token -> vertex
};

// Set of pairwise vertex-disjoint vertex pairs; the unit step of a schedule.
// Disjointness and edge membership are checked against a graph on demand.
struct Matching {
  std::vector<Edge> swaps;  // normalized, sorted, deduplicated

  Matching() = default;
  Matching(std::initializer_list<Edge> list);
  explicit Matching(std::vector<Edge> list);

  bool empty() const { return swaps.empty(); }
  // Throws invalid_matching_error on non-edges or shared endpoints.
  void validate(const Graph& g) const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.swaps == b.swaps;
  }
};

struct Schedule {
  std::vector<Matching> steps;

  Schedule() = default;
  explicit Schedule(std::vector<Matching> s) : steps(std::move(s)) {}

  int length() const { return static_cast<int>(steps.size()); }

  friend bool operator==(const Schedule& a, const Schedule& b) {
    return a.steps == b.steps;
  }
};

// Token coloring. Vertex colors are derived through the identity placement
// (vertex v has the color of token v), so per color the number of tokens
// always equals the number of vertices.
struct ColorLabeling {
  std::vector<int> token_color;  // token -> color id

  int color_of_token(int t) const;
  int color_of_vertex(int v) const { return color_of_token(v); }
  int size() const { return static_cast<int>(token_color.size()); }

  friend bool operator==(const ColorLabeling& a, const ColorLabeling& b) {
    return a.token_color == b.token_color;
  }
};

struct Instance {
  Graph graph;
  Configuration initial;
  std::optional<ColorLabeling> labeling;

  Instance(Graph g, Configuration c, std::optional<ColorLabeling> l = {});

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.graph == b.graph && a.initial == b.initial &&
           a.labeling == b.labeling;
  }
};

Configuration apply_matching(const Graph& g, const Configuration& c,
                             const Matching& m);
Configuration apply_schedule(const Graph& g, const Configuration& c,
                             const Schedule& s);

struct VerifyReport {
  bool valid = false;
  Configuration final;
  std::vector<std::string> violations;
};

// Checks that every step is a matching of the instance graph and that the
// final configuration reaches the goal (identity, or any color-correct
// placement when the instance carries a labeling). Never throws; problems
// are collected in `violations`.
VerifyReport verify(const Instance& inst, const Schedule& s);

// Drops edges shared by consecutive steps (both copies) and deletes empty
// steps, repeating until stable. Preserves the routed configuration and
// never lengthens the schedule.
Schedule normalize(Schedule s);

// Maximum over tokens of the geodesic distance between the token's current
// vertex and its destination. A lower bound on the optimal depth.
int d_max_lower_bound(const Instance& inst);

// Relabels tokens so that routing the result to the identity is equivalent
// to routing `initial` to `target` with the same matchings.
Configuration compose_with_target(const Configuration& initial,
                                  const Configuration& target);

struct Rational {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

Rational reduced_ratio(long long num, long long den);

struct SolveReport {
  std::string algorithm_name;
  Schedule schedule;
  int length = 0;
  int d_max = 0;
  std::map<std::string, int> extra_lower_bounds;
  std::optional<Rational> ratio_to_dmax;
  std::vector<int> phase_lengths;
};

SolveReport make_report(std::string algorithm_name, const Instance& inst,
                        Schedule schedule,
                        std::map<std::string, int> extra_lower_bounds = {},
                        std::vector<int> phase_lengths = {});

}  // namespace pts
