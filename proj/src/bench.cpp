#include "pts/bench.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "pts/oracle.hpp"
#include "pts/solve.hpp"

namespace pts::bench {

namespace {

// Bounded draw via rejection, stable across platforms for a fixed seed.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % m;
}

std::vector<int> shuffled_identity(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(t[i], t[bounded(rng, static_cast<std::uint64_t>(i) + 1)]);
  return t;
}

}  // namespace

Instance cycle_rotation(int n) {
  if (n < 3) throw parameter_error("cycle rotation needs n >= 3");
  std::vector<int> t(n);
  for (int v = 0; v < n; ++v) t[v] = (v + n - 1) % n;
  return Instance(Graph::cycle(n), Configuration(std::move(t)));
}

Instance line_shift(int n) {
  if (n < 1) throw parameter_error("line shift needs n >= 1");
  std::vector<int> t(2 * n);
  for (int v = 0; v < n; ++v) t[v] = n + v;
  for (int v = n; v < 2 * n; ++v) t[v] = v - n;
  return Instance(Graph::line(2 * n), Configuration(std::move(t)));
}

Instance star_center(int n) {
  if (n < 2) throw parameter_error("star center needs n >= 2 leaves");
  std::vector<int> t(n + 1);
  t[0] = 0;
  for (int leaf = 1; leaf <= n; ++leaf) t[leaf] = leaf % n + 1;
  return Instance(Graph::star(std::vector<int>(n, 1)),
                  Configuration(std::move(t)));
}

Instance grid_random(int h, int n, std::uint64_t seed) {
  Graph g = Graph::grid(h, n);
  return Instance(g, Configuration(shuffled_identity(g.vertex_count(), seed)));
}

Instance random_instance(const Graph& g, std::uint64_t seed) {
  return Instance(g, Configuration(shuffled_identity(g.vertex_count(), seed)));
}

ColorLabeling random_labeling(int token_count, int colors,
                              std::uint64_t seed) {
  if (colors < 1 || colors > token_count)
    throw parameter_error("color count must be in [1, token_count]");
  // Shuffle tokens, then cut into `colors` contiguous nonempty chunks.
  std::vector<int> order = shuffled_identity(token_count, seed ^ 0x9e3779b97f4a7c15ull);
  std::mt19937_64 rng(seed);
  std::vector<int> cuts;  // chunk boundaries
  std::vector<int> candidates(token_count - 1);
  std::iota(candidates.begin(), candidates.end(), 1);
  for (int i = 0; i < colors - 1; ++i) {
    int pick = static_cast<int>(bounded(rng, candidates.size() - i));
    std::swap(candidates[pick], candidates[candidates.size() - 1 - i]);
    cuts.push_back(candidates[candidates.size() - 1 - i]);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(token_count);

  ColorLabeling lab;
  lab.token_color.assign(token_count, 0);
  int color = 0, at = 0;
  for (int i = 0; i < token_count; ++i) {
    if (i == cuts[at]) {
      ++color;
      ++at;
    }
    lab.token_color[order[i]] = color;
  }
  return lab;
}

Schedule complete_graph_rotation_schedule(int r) {
  if (r < 2) throw parameter_error("rotation schedule needs r >= 2");
  std::vector<Edge> m1, m2;
  for (int i = 0; i < r - 1; ++i) {
    m1.push_back(make_edge(i, 2 * r - 2 - i));
    m2.push_back(make_edge(i, 2 * r - 3 - i));
  }
  m2.push_back(make_edge(2 * r - 2, 2 * r - 1));
  Schedule s;
  s.steps.push_back(Matching(std::move(m1)));
  s.steps.push_back(Matching(std::move(m2)));
  return s;
}

std::vector<StretchRow> stretch_experiment(const StretchSpec& spec) {
  std::vector<StretchRow> rows;
  for (int size : spec.sizes) {
    for (std::uint64_t seed : spec.seeds) {
      Instance inst = [&]() {
        if (spec.family == "cycle_rotation") return cycle_rotation(size);
        if (spec.family == "line_shift") return line_shift(size);
        if (spec.family == "star_center") return star_center(size);
        if (spec.family == "grid_random")
          return grid_random(spec.h, size, seed);
        throw parameter_error("unknown family " + spec.family);
      }();
      SolveReport rep = solve(inst, spec.algorithm);
      StretchRow row;
      row.family = spec.family;
      row.n = size;
      row.h = spec.family == "grid_random"   ? spec.h
              : spec.family == "star_center" ? size
                                             : 0;
      row.seed = spec.family == "grid_random" ? seed : 0;
      row.algorithm = rep.algorithm_name;
      row.length = rep.length;
      row.d_max = d_max_lower_bound(inst);
      if (spec.use_oracle) {
        try {
          row.opt = oracle::exact_opt(inst).opt;
        } catch (const capacity_error&) {
          row.opt = std::nullopt;  // surfaced as an empty cell, not fatal
        }
      }
      rows.push_back(std::move(row));
      if (spec.family != "grid_random") break;  // seed-independent families
    }
  }
  return rows;
}

std::string stretch_csv(const std::vector<StretchRow>& rows) {
  std::ostringstream out;
  out << "family,n,h,seed,algorithm,length,opt,d_max,len_over_opt,"
         "opt_over_dmax\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.n << ',' << r.h << ',' << r.seed << ','
        << r.algorithm << ',' << r.length << ',';
    if (r.opt) out << *r.opt;
    out << ',' << r.d_max << ',';
    if (r.opt && *r.opt > 0) {
      std::ostringstream v;
      v.precision(6);
      v << static_cast<double>(r.length) / *r.opt;
      out << v.str();
    }
    out << ',';
    if (r.opt && r.d_max > 0) {
      std::ostringstream v;
      v.precision(6);
      v << static_cast<double>(*r.opt) / r.d_max;
      out << v.str();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pts::bench
