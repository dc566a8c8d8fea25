#include "pts/solve.hpp"

#include <algorithm>

#include "pts/colored.hpp"
#include "pts/cycle.hpp"
#include "pts/grid.hpp"
#include "pts/line.hpp"
#include "pts/star.hpp"

namespace pts {

namespace {

SolveReport solve_uncolored(const Instance& inst,
                            const std::string& algorithm) {
  const TopologyKind kind = inst.graph.topology().kind;
  Instance plain(inst.graph, inst.initial);

  if (algorithm == "line" ||
      (algorithm == "auto" && kind == TopologyKind::line))
    return make_report("line", plain, line::odd_even_solve(plain));

  if (algorithm == "cycle" ||
      (algorithm == "auto" && kind == TopologyKind::cycle)) {
    Schedule s = cycle::cycle_solve(plain);
    return make_report("cycle", plain, std::move(s),
                       {{"winding", cycle::winding_lower_bound(plain)}});
  }

  if (algorithm == "star" ||
      (algorithm == "auto" && kind == TopologyKind::star)) {
    star::StarResult r = star::star_solve(plain);
    return make_report("star", plain, std::move(r.schedule), {},
                       {r.phase_lengths[0], r.phase_lengths[1],
                        r.phase_lengths[2]});
  }

  if (algorithm == "grid-path") {
    return make_report("grid-path", plain, grid::grid_path_solve(plain));
  }
  if (algorithm == "grid-3phase") {
    grid::GridResult r = grid::grid_three_phase_solve(plain);
    return make_report("grid-3phase", plain, std::move(r.schedule), {},
                       {r.phase_lengths[0], r.phase_lengths[1],
                        r.phase_lengths[2]});
  }
  if (algorithm == "auto" && kind == TopologyKind::grid) {
    grid::GridLayout lay = grid::GridLayout::from(plain.graph);
    if (std::min(lay.h, lay.n) <= 2)
      return make_report("grid-path", plain, grid::grid_path_solve(plain));
    Schedule s = grid::grid_auto_solve(plain);
    return make_report("grid-auto", plain, std::move(s));
  }

  if (algorithm == "auto")
    throw parameter_error("no solver for general topology; use the oracle");
  throw parameter_error("unknown algorithm " + algorithm);
}

SolveReport solve_colored(const Instance& inst) {
  const TopologyKind kind = inst.graph.topology().kind;
  auto [d_star, target] = colored::bottleneck_d_star(inst);
  (void)target;
  std::map<std::string, int> extra{{"d_star", d_star}};

  switch (kind) {
    case TopologyKind::line:
      return make_report("colored-line", inst,
                         colored::colored_line_solve(inst), extra);
    case TopologyKind::cycle:
      extra["winding"] = cycle::winding_lower_bound(
          Instance(inst.graph, inst.initial));
      return make_report("incomplete-cycle", inst,
                         colored::incomplete_cycle_solve(inst), extra);
    case TopologyKind::star: {
      star::StarResult r = colored::colored_star_solve(inst);
      return make_report("colored-star", inst, std::move(r.schedule), extra,
                         {r.phase_lengths[0], r.phase_lengths[1],
                          r.phase_lengths[2]});
    }
    case TopologyKind::grid: {
      grid::GridResult r = colored::colored_grid_solve(inst);
      return make_report("colored-grid", inst, std::move(r.schedule), extra,
                         {r.phase_lengths[0], r.phase_lengths[1],
                          r.phase_lengths[2]});
    }
    case TopologyKind::general:
      throw parameter_error("no colored solver for general topology");
  }
  throw parameter_error("unreachable");
}

}  // namespace

SolveReport solve(const Instance& inst, const std::string& algorithm) {
  if (algorithm == "colored-auto" || (algorithm == "auto" && inst.labeling)) {
    if (!inst.labeling)
      throw parameter_error("colored-auto requires a labeling");
    return solve_colored(inst);
  }
  return solve_uncolored(inst, algorithm);
}

}  // namespace pts
