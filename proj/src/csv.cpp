#include "cgrp/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "cgrp/errors.hpp"

namespace cgrp {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_domain_rows(std::ostream& os, double t, char tag,
                       const DomainGrid& grid,
                       const std::vector<ConsState>& cells,
                       const GasParams& gas) {
  for (int i = 0; i < grid.n_cells; ++i) {
    const PrimState w = cons_to_prim(cells[i], gas);
    os << g17(t) << ',' << tag << ',' << g17(grid.x_center(i)) << ','
       << g17(w.rho) << ',' << g17(w.u) << ',' << g17(w.p) << ','
       << g17(cells[i].mom) << ',' << g17(cells[i].en) << '\n';
  }
}

}  // namespace

void write_snapshot_csv(std::ostream& os, const Snapshot& snap,
                        const GasParams& gas) {
  os << "t,domain,x_center,rho,u,p,mom,energy\n";
  write_domain_rows(os, snap.t, 'L', snap.left_grid, snap.left_cells, gas);
  write_domain_rows(os, snap.t, 'R', snap.right_grid, snap.right_cells, gas);
}

std::vector<std::string> write_run_csv(const std::string& dir,
                                       const RunResult& res,
                                       const GasParams& gas) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw ValidationError("cannot create output directory " + dir + ": " +
                          ec.message());

  std::vector<std::string> names;
  std::ofstream index(fs::path(dir) / "index.csv");
  if (!index)
    throw ValidationError("cannot open " + dir + "/index.csv for writing");
  index << "file,t\n";
  for (size_t k = 0; k < res.snapshots.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%04zu.csv", k);
    std::ofstream out(fs::path(dir) / name);
    if (!out)
      throw ValidationError("cannot open " + dir + "/" + name +
                            " for writing");
    write_snapshot_csv(out, res.snapshots[k], gas);
    index << name << ',' << g17(res.snapshots[k].t) << '\n';
    names.emplace_back(name);
  }
  return names;
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& report) {
  os << "level,err,eoc\n";
  for (const ConvergenceRow& row : report.rows)
    os << row.level << ',' << g17(row.err) << ',' << g17(row.eoc) << '\n';
}

}  // namespace cgrp
