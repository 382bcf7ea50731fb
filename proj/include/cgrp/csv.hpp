#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cgrp/convergence.hpp"
#include "cgrp/driver.hpp"

namespace cgrp {

// Columns: t, domain, x_center, rho, u, p, mom, energy.  Domain is L or R,
// doubles are round-trip exact (%.17g).
void write_snapshot_csv(std::ostream& os, const Snapshot& snap,
                        const GasParams& gas);

// One snapshot_NNNN.csv per snapshot plus index.csv (file, t) in dir,
// creating the directory if needed.  Returns the snapshot file names.
std::vector<std::string> write_run_csv(const std::string& dir,
                                       const RunResult& res,
                                       const GasParams& gas);

// Columns: level, err, eoc.  The first row has no predecessor; its eoc is
// written as nan.
void write_convergence_csv(std::ostream& os, const ConvergenceReport& report);

}  // namespace cgrp
