#pragma once

// Refinement harness: L1 errors against a restricted fine reference and the
// resulting empirical convergence orders.

#include <vector>

#include "cgrp/config.hpp"
#include "cgrp/driver.hpp"

namespace cgrp {

struct ConvergenceRow {
  int level = 0;
  double err = 0.0;
  double eoc = 0.0;  // log2(err_prev / err); NaN on the first row
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
};

// Max over the three conserved components of the summed per-domain L1
// distances. The reference must live on the same bounds at the same time,
// with each domain's cell count an integer multiple of the coarse run's;
// it is restricted by exact cell averaging before differencing. Throws
// MismatchedDomains otherwise.
double l1_error(const Snapshot& run, const Snapshot& ref);

// Runs cfg at each level in [level_min, level_max] with the windowed GRP
// driver and compares final-time snapshots against one synchronized
// per-step coupled-RP reference at ref_level. A reference at the same
// resolution as a level is degenerate (err identically 0); it is allowed
// but warned about on stderr.
ConvergenceReport convergence_study(const SimConfig& cfg, int level_min,
                                    int level_max, int ref_level,
                                    const DriverOptions& opt = {});

}  // namespace cgrp
