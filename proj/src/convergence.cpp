#include "cgrp/convergence.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "cgrp/errors.hpp"

namespace cgrp {

namespace {

void check_same_geometry(const DomainGrid& a, const DomainGrid& b,
                         const char* which) {
  const double span = a.x_max - a.x_min;
  if (std::abs(a.x_min - b.x_min) > 1e-12 * span ||
      std::abs(a.x_max - b.x_max) > 1e-12 * span)
    throw MismatchedDomains(std::string(which) + " domain bounds differ");
  if (b.n_cells % a.n_cells != 0)
    throw MismatchedDomains(std::string(which) +
                            " reference resolution is not a multiple of the "
                            "run resolution");
}

// L1 distances between the run cells and the cell-averaged restriction of
// the reference, accumulated per conserved component.
void accumulate_l1(const DomainGrid& rg, const std::vector<ConsState>& run,
                   const std::vector<ConsState>& ref, double acc[3]) {
  const int m = static_cast<int>(ref.size() / run.size());
  const double dx = rg.dx();
  for (int i = 0; i < rg.n_cells; ++i) {
    ConsState avg{};
    for (int j = 0; j < m; ++j) {
      const ConsState& q = ref[static_cast<size_t>(i) * m + j];
      avg.rho += q.rho;
      avg.mom += q.mom;
      avg.en += q.en;
    }
    acc[0] += std::abs(run[i].rho - avg.rho / m) * dx;
    acc[1] += std::abs(run[i].mom - avg.mom / m) * dx;
    acc[2] += std::abs(run[i].en - avg.en / m) * dx;
  }
}

}  // namespace

double l1_error(const Snapshot& run, const Snapshot& ref) {
  check_same_geometry(run.left_grid, ref.left_grid, "left");
  check_same_geometry(run.right_grid, ref.right_grid, "right");
  const double tscale =
      std::max({1.0, std::abs(run.t), std::abs(ref.t)});
  if (std::abs(run.t - ref.t) > 1e-9 * tscale)
    throw MismatchedDomains("snapshots taken at different times");

  double acc[3] = {0.0, 0.0, 0.0};
  accumulate_l1(run.left_grid, run.left_cells, ref.left_cells, acc);
  accumulate_l1(run.right_grid, run.right_cells, ref.right_cells, acc);
  return std::max({acc[0], acc[1], acc[2]});
}

ConvergenceReport convergence_study(const SimConfig& cfg, int level_min,
                                    int level_max, int ref_level,
                                    const DriverOptions& opt) {
  if (level_min > level_max)
    throw ValidationError("empty level range");
  if (ref_level < level_max)
    throw ValidationError("reference level below the finest study level");
  if (ref_level == level_max)
    std::fprintf(stderr,
                 "warning: reference at study resolution; finest error row "
                 "is degenerate\n");

  DriverOptions run_opt = opt;
  run_opt.c_cfl = cfg.c_cfl;
  const OuttakeProfile outtake = make_outtake(cfg.outtake);

  const RunResult ref = run_reference(build_state(cfg, ref_level), outtake,
                                      cfg.t_end, {}, run_opt, cfg.gas);
  const Snapshot& ref_final = ref.snapshots.back();

  ConvergenceReport report;
  for (int level = level_min; level <= level_max; ++level) {
    const RunResult res = run(build_state(cfg, level), outtake, cfg.t_end,
                              {}, run_opt, cfg.gas);
    ConvergenceRow row;
    row.level = level;
    row.err = l1_error(res.snapshots.back(), ref_final);
    row.eoc = report.rows.empty()
                  ? std::numeric_limits<double>::quiet_NaN()
                  : std::log2(report.rows.back().err / row.err);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace cgrp
