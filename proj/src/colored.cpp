#include "pts/colored.hpp"

#include <algorithm>
#include <map>

#include "pts/cycle.hpp"
#include "pts/line.hpp"

namespace pts::colored {

namespace {

const ColorLabeling& require_labeling(const Instance& inst) {
  if (!inst.labeling) throw parameter_error("instance has no labeling");
  return *inst.labeling;
}

}  // namespace

VerifyReport colored_verify(const Instance& inst, const Schedule& s) {
  require_labeling(inst);
  return verify(inst, s);
}

Schedule strip_same_color_swaps(const Instance& inst, Schedule s) {
  const ColorLabeling& lab = require_labeling(inst);
  std::vector<int> t = inst.initial.tokens();
  for (Matching& m : s.steps) {
    std::vector<Edge> kept;
    for (const auto& [u, v] : m.swaps) {
      if (lab.color_of_token(t[u]) == lab.color_of_token(t[v])) continue;
      std::swap(t[u], t[v]);
      kept.push_back({u, v});
    }
    m = Matching(std::move(kept));
  }
  return s;
}

Configuration colored_line_target(const Instance& inst) {
  const ColorLabeling& lab = require_labeling(inst);
  if (inst.graph.topology().kind != TopologyKind::line)
    throw topology_error("operation requires a line graph");
  const int n = inst.graph.vertex_count();

  std::map<int, std::vector<int>> vertices_by_color;
  for (int v = 0; v < n; ++v)
    vertices_by_color[lab.color_of_vertex(v)].push_back(v);

  std::vector<int> tokens(n, -1);
  std::map<int, int> next;  // color -> rank of the next token of that color
  for (int v = 0; v < n; ++v) {
    int tok = inst.initial.token_at(v);
    int color = lab.color_of_token(tok);
    int dest = vertices_by_color[color][next[color]++];
    tokens[dest] = tok;
  }
  return Configuration(std::move(tokens));
}

Schedule colored_line_solve(const Instance& inst) {
  Configuration target = colored_line_target(inst);
  std::vector<int> key(inst.graph.vertex_count());
  for (int t = 0; t < inst.graph.vertex_count(); ++t)
    key[t] = target.position_of(t);
  Schedule s = line::odd_even_solve(Instance(inst.graph, inst.initial), key);
  return strip_same_color_swaps(inst, std::move(s));
}

Schedule incomplete_cycle_solve(const Instance& inst) {
  const ColorLabeling& lab = require_labeling(inst);
  if (inst.graph.topology().kind != TopologyKind::cycle)
    throw topology_error("operation requires a cycle graph");
  const int n = inst.graph.vertex_count();

  std::map<int, int> mult;
  for (int t = 0; t < n; ++t) ++mult[lab.color_of_token(t)];
  int blank = -1;
  for (auto& [color, count] : mult)
    if (count > 1) {
      if (blank != -1)
        throw shape_error("more than one repeated color; expected one blank");
      blank = color;
    }

  std::vector<int> blank_tokens, blank_vertices;
  for (int t = 0; t < n; ++t)
    if (lab.color_of_token(t) == blank) blank_tokens.push_back(t);
  for (int v = 0; v < n; ++v)
    if (lab.color_of_vertex(v) == blank) blank_vertices.push_back(v);
  // Blank token order around the cycle by current position.
  std::sort(blank_tokens.begin(), blank_tokens.end(), [&](int a, int b) {
    return inst.initial.position_of(a) < inst.initial.position_of(b);
  });

  const int m = static_cast<int>(blank_tokens.size());
  std::optional<Schedule> best;
  for (int offset = 0; offset < std::max(m, 1); ++offset) {
    std::vector<int> tokens(n, -1);
    for (int t = 0; t < n; ++t)
      if (lab.color_of_token(t) != blank) tokens[t] = t;
    for (int i = 0; i < m; ++i)
      tokens[blank_vertices[(i + offset) % m]] = blank_tokens[i];
    Configuration target(std::move(tokens));
    Instance relabeled(inst.graph,
                       compose_with_target(inst.initial, target));
    Schedule s = cycle::cycle_solve(relabeled);
    if (!best || s.length() < best->length()) best = std::move(s);
  }
  return strip_same_color_swaps(inst, std::move(*best));
}

Configuration colored_star_target(const Instance& inst) {
  const ColorLabeling& lab = require_labeling(inst);
  star::StarLayout lay = star::StarLayout::from(inst.graph);
  const int n = inst.graph.vertex_count();

  std::vector<int> tokens(n, -1);
  std::vector<char> token_done(n, 0), vertex_done(n, 0);

  // Per branch and color: pair off end-most tokens with end-most vertices.
  for (int b = 0; b < lay.branch_count; ++b) {
    std::map<int, std::vector<int>> toks, verts;  // outermost first
    for (int i = lay.branch_len[b]; i >= 1; --i) {
      int v = lay.vertex(b, i);
      toks[lab.color_of_token(inst.initial.token_at(v))].push_back(
          inst.initial.token_at(v));
      verts[lab.color_of_vertex(v)].push_back(v);
    }
    for (auto& [color, ts] : toks) {
      auto it = verts.find(color);
      if (it == verts.end()) continue;
      std::size_t k = std::min(ts.size(), it->second.size());
      for (std::size_t i = 0; i < k; ++i) {
        tokens[it->second[i]] = ts[i];
        token_done[ts[i]] = 1;
        vertex_done[it->second[i]] = 1;
      }
    }
  }

  // Leftovers: nearest free vertex of the token's color, ties to the lowest
  // vertex id; tokens processed in ascending id order.
  for (int t = 0; t < n; ++t) {
    if (token_done[t]) continue;
    int color = lab.color_of_token(t);
    int from = inst.initial.position_of(t);
    int best_v = -1;
    for (int v = 0; v < n; ++v) {
      if (vertex_done[v] || lab.color_of_vertex(v) != color) continue;
      if (best_v < 0 ||
          inst.graph.distance(from, v) < inst.graph.distance(from, best_v))
        best_v = v;
    }
    if (best_v < 0) throw feasibility_error("no free vertex for a token");
    tokens[best_v] = t;
    token_done[t] = 1;
    vertex_done[best_v] = 1;
  }
  return Configuration(std::move(tokens));
}

star::StarResult colored_star_solve(const Instance& inst) {
  const ColorLabeling& lab = require_labeling(inst);
  star::StarLayout lay = star::StarLayout::from(inst.graph);
  Configuration target = colored_star_target(inst);

  Instance relabeled(inst.graph, compose_with_target(inst.initial, target));
  star::BranchRoutingResult br = star::route_to_branches(relabeled);

  // Real-token configuration after the first two phases.
  Configuration real = inst.initial;
  for (const Matching& m : br.steps)
    real = apply_matching(inst.graph, real, m);

  // Final phase: each branch goes to its crossing-free color-correct
  // placement (k-th token of a color from the center to the k-th vertex of
  // that color from the center).
  std::vector<line::StepList> branch_steps(lay.branch_count);
  int phase3 = 0;
  for (int b = 0; b < lay.branch_count; ++b) {
    std::map<int, std::vector<int>> slots;  // color -> positions, inner first
    for (int i = 1; i <= lay.branch_len[b]; ++i) {
      int v = lay.vertex(b, i);
      slots[lab.color_of_vertex(v)].push_back(i);
    }
    std::map<int, int> next;
    std::vector<int> keys(lay.branch_len[b]);
    for (int i = 1; i <= lay.branch_len[b]; ++i) {
      int tok = real.token_at(lay.vertex(b, i));
      int color = lab.color_of_token(tok);
      auto it = slots.find(color);
      if (it == slots.end() ||
          next[color] >= static_cast<int>(it->second.size()))
        throw feasibility_error("branch color counts do not match");
      keys[i - 1] = it->second[next[color]++];
    }
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

  Schedule stripped = strip_same_color_swaps(inst, std::move(out));
  return {std::move(stripped), {br.phase1, br.phase2, phase3}};
}

std::pair<int, Configuration> bottleneck_d_star(const Instance& inst) {
  const ColorLabeling& lab = require_labeling(inst);
  const Graph& g = inst.graph;
  const int n = g.vertex_count();

  std::map<int, std::vector<int>> from_by_color, to_by_color;
  for (int t = 0; t < n; ++t)
    from_by_color[lab.color_of_token(t)].push_back(
        inst.initial.position_of(t));
  for (int v = 0; v < n; ++v)
    to_by_color[lab.color_of_vertex(v)].push_back(v);

  for (int d = 0; d <= g.diameter(); ++d) {
    std::vector<int> tokens(n, -1);
    bool ok = true;
    for (auto& [color, from] : from_by_color) {
      const auto& to = to_by_color[color];
      const int k = static_cast<int>(from.size());
      // Kuhn matching restricted to pairs within distance d.
      std::vector<int> match_to(k, -1), match_from(k, -1);
      auto augment = [&](auto&& self, int i, std::vector<char>& seen) -> bool {
        for (int j = 0; j < k; ++j) {
          if (seen[j] || g.distance(from[i], to[j]) > d) continue;
          seen[j] = 1;
          if (match_to[j] < 0 || self(self, match_to[j], seen)) {
            match_to[j] = i;
            match_from[i] = j;
            return true;
          }
        }
        return false;
      };
      for (int i = 0; i < k && ok; ++i) {
        std::vector<char> seen(k, 0);
        if (!augment(augment, i, seen)) ok = false;
      }
      if (!ok) break;
      for (int i = 0; i < k; ++i)
        tokens[to[match_from[i]]] = inst.initial.token_at(from[i]);
    }
    if (ok) return {d, Configuration(std::move(tokens))};
  }
  throw error("bottleneck search failed");  // d = diameter always matches
}

grid::GridResult colored_grid_solve(const Instance& inst) {
  require_labeling(inst);
  auto [d_star, target] = bottleneck_d_star(inst);
  (void)d_star;
  Instance uncolored(inst.graph, inst.initial);
  grid::GridResult r = grid::grid_three_phase_solve(uncolored, target);
  r.schedule = strip_same_color_swaps(inst, std::move(r.schedule));
  return r;
}

}  // namespace pts::colored
