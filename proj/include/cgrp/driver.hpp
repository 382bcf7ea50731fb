#pragma once

#include <vector>

#include "cgrp/coupled_grp.hpp"
#include "cgrp/fv.hpp"
#include "cgrp/outtake.hpp"

namespace cgrp {

// A full two-domain simulation joined at x = 0.
struct TwoDomainState {
  DomainState left, right;
  FarFieldSpec far_left, far_right;
  BoundaryFluxAccount left_account, right_account;
  double outtake_taken = 0.0;  // exact integral of the outtake so far
};

struct DriverOptions {
  double c_cfl = 0.2;
  // Step the two domains on separate threads within each window.  Results
  // are bit-identical to the sequential path: the steppers share only the
  // immutable boundary series.
  bool concurrent = false;
  // Optional cap on the window length (windowed runs) or on the common step
  // (reference runs); 0 disables.  Used by time-refinement experiments.
  double max_window = 0.0;
  double max_dt = 0.0;
};

struct WindowDiagnostics {
  double t0 = 0.0, t1 = 0.0;
  CoupledStarState star;
  CoupledDerivatives derivs;
  double det = 0.0;
  double psi = 0.0;  // scaled interface residual at the window start
  int left_steps = 0, right_steps = 0;
};

// Largest scaled defect of the interface solution: the three coupling
// conditions plus membership of the traces on their wave curves.  Pressure
// and density defects are relative, velocity defects are measured against
// the sound speed.
double interface_residual(const PrimState& wl, const PrimState& wr,
                          const CoupledStarState& star,
                          const CouplingData& cpl, const GasParams& gas);

// One synchronization window.  At the common time t0 a single coupled
// generalized Riemann solve on the interface-adjacent reconstructions yields
// linear-in-time boundary traces; both domains then advance to t1 on their
// own CFL steps (desynchronized), the last one clipped to land on t1.
//   t1 - t0 = min over the two interface cells of c_cfl dx / (|u*| + c*),
// further clipped at hard_stop and at the next outtake breakpoint so the
// outtake stays linear inside the window.
WindowDiagnostics advance_window(TwoDomainState& s,
                                 const OuttakeProfile& outtake,
                                 double hard_stop, const DriverOptions& opt,
                                 const GasParams& gas);

struct Snapshot {
  double t = 0.0;
  DomainGrid left_grid, right_grid;
  std::vector<ConsState> left_cells, right_cells;
};

Snapshot take_snapshot(const TwoDomainState& s);

struct RunResult {
  std::vector<Snapshot> snapshots;  // t = 0, requested times, then t_end
  std::vector<WindowDiagnostics> windows;  // windowed runs only
  double max_psi = 0.0;   // worst interface residual seen
  double min_det = 0.0, max_det = 0.0;  // range of coupling determinants
  // Global mass defect relative to the initial mass: change of total mass
  // minus (far-field inflow - outtake integral).
  double mass_drift = 0.0;
  long interface_solves = 0;
};

// Windowed, desynchronized run to t_end; snapshots at the requested times.
RunResult run(TwoDomainState s, const OuttakeProfile& outtake, double t_end,
              const std::vector<double>& snapshot_times,
              const DriverOptions& opt, const GasParams& gas);

// Synchronized reference: both domains share a common CFL step and the
// interface fluxes come from a coupled Riemann solve on the half-step
// predicted interface edge states (coupling refreshed every step, first
// order in time per solve, midpoint-centered).
RunResult run_reference(TwoDomainState s, const OuttakeProfile& outtake,
                        double t_end,
                        const std::vector<double>& snapshot_times,
                        const DriverOptions& opt, const GasParams& gas);

}  // namespace cgrp
