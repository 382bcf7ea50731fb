#include "cgrp/driver.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "cgrp/errors.hpp"
#include "cgrp/riemann.hpp"

namespace cgrp {

namespace {

double total_mass(const TwoDomainState& s) {
  double m = 0.0;
  for (const ConsState& q : s.left.cells) m += q.rho;
  m *= s.left.grid.dx();
  double mr = 0.0;
  for (const ConsState& q : s.right.cells) mr += q.rho;
  return m + mr * s.right.grid.dx();
}

// Cell value extrapolated to the interface face, plus the cell's slope: the
// piecewise-linear half-line data the interface solver expects.
void interface_data(const DomainState& d, const std::vector<SideSlopes>& slopes,
                    const GasParams& gas, PrimState& w_face, SideSlopes& s_out) {
  const int i = d.grid.side == Side::left ? d.grid.n_cells - 1 : 0;
  const double h = 0.5 * d.grid.dx();
  const PrimState w = cons_to_prim(d.cells[i], gas);
  const SideSlopes& s = slopes[i];
  const double sgn = d.grid.side == Side::left ? 1.0 : -1.0;
  w_face = PrimState{w.rho + sgn * h * s.d_rho_dx, w.u + sgn * h * s.d_u_dx,
                     w.p + sgn * h * s.d_p_dx};
  s_out = s;
}

double next_break_after(const OuttakeProfile& outtake, double t, double eps) {
  double nb = std::numeric_limits<double>::infinity();
  for (double b : outtake.breakpoints())
    if (b > t + eps) nb = std::min(nb, b);
  return nb;
}

// March one domain from its current time to t1 on its own CFL steps.
void advance_domain(DomainState& d, double t1,
                    const InterfaceBoundarySeries& bc, const FarFieldSpec& far,
                    const DriverOptions& opt, const GasParams& gas,
                    BoundaryFluxAccount& account, int& steps) {
  const double dx = d.grid.dx();
  const double eps = 1e-12 * std::max(1.0, std::abs(t1));
  while (t1 - d.t > eps) {
    double dt = cfl_dt(d, opt.c_cfl, 1, dx, gas);
    const double rem = t1 - d.t;
    if (dt >= rem || rem - dt < 1e-9 * dt) dt = rem;
    step(d, dt, bc, far, gas, &account);
    ++steps;
  }
  d.t = t1;
}

std::vector<double> stop_schedule(double t_begin, double t_end,
                                  const std::vector<double>& requested) {
  const double eps = 1e-12 * std::max(1.0, std::abs(t_end));
  std::vector<double> stops;
  for (double t : requested)
    if (t > t_begin + eps && t < t_end - eps) stops.push_back(t);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end(),
                          [eps](double a, double b) { return b - a < eps; }),
              stops.end());
  if (t_end - t_begin > eps) stops.push_back(t_end);
  return stops;
}

void tally_window(RunResult& out, const WindowDiagnostics& d) {
  if (out.windows.empty()) {
    out.min_det = d.det;
    out.max_det = d.det;
  } else {
    out.min_det = std::min(out.min_det, d.det);
    out.max_det = std::max(out.max_det, d.det);
  }
  out.max_psi = std::max(out.max_psi, d.psi);
  out.windows.push_back(d);
  ++out.interface_solves;
}

void finish_mass_ledger(RunResult& out, const TwoDomainState& s, double m0) {
  // Far accounts are time-integrated fluxes signed along +x: at the left
  // domain's far face positive means inflow, at the right domain's far face
  // positive means outflow.
  const double expected = s.left_account.farfield_total.rho -
                          s.right_account.farfield_total.rho - s.outtake_taken;
  out.mass_drift = std::abs(total_mass(s) - m0 - expected) / m0;
}

}  // namespace

double interface_residual(const PrimState& wl, const PrimState& wr,
                          const CoupledStarState& star,
                          const CouplingData& cpl, const GasParams& gas) {
  const std::array<double, 3> r = coupling_residual(star, cpl);
  const PrimState& lt = star.left_trace;
  const PrimState& rt = star.right_trace;
  const double cl = sound_speed(lt, gas);
  const double cr = sound_speed(rt, gas);
  const CurvePoint one = lax_curve_state(wl, lt.p, CurveFamily::one, gas);
  const CurvePoint three = lax_curve_state(wr, rt.p, CurveFamily::three, gas);
  return std::max({std::abs(r[0]) / lt.p, std::abs(r[1]) / lt.rho,
                   std::abs(r[2]) / cl, std::abs(one.rho - lt.rho) / lt.rho,
                   std::abs(one.u - lt.u) / cl,
                   std::abs(three.rho - star.rho_right_of_contact) /
                       star.rho_right_of_contact,
                   std::abs(three.u - rt.u) / cr});
}

WindowDiagnostics advance_window(TwoDomainState& s,
                                 const OuttakeProfile& outtake,
                                 double hard_stop, const DriverOptions& opt,
                                 const GasParams& gas) {
  const double t0 = s.left.t;
  const double tscale = std::max({1.0, std::abs(t0), std::abs(hard_stop)});
  if (std::abs(s.right.t - t0) > 1e-12 * tscale)
    throw MismatchedDomains("advance_window: domains at t = " +
                            std::to_string(t0) + " vs " +
                            std::to_string(s.right.t));
  if (!(hard_stop > t0))
    throw ValidationError("advance_window: hard_stop must exceed t0");

  const std::vector<SideSlopes> sll = reconstruct(s.left, gas);
  const std::vector<SideSlopes> slr = reconstruct(s.right, gas);
  PrimState wl, wr;
  SideSlopes sl, sr;
  interface_data(s.left, sll, gas, wl, sl);
  interface_data(s.right, slr, gas, wr, sr);

  const CouplingData cpl{outtake.value(t0), outtake.rate_right(t0)};
  CoupledGrpResult grp;
  try {
    grp = solve_coupled_grp(wl, wr, sl, sr, cpl, gas);
  } catch (const SingularCoupling& e) {
    throw SingularCoupling(std::string(e.what()) + " (window start t0 = " +
                           std::to_string(t0) + ")");
  }

  WindowDiagnostics diag;
  diag.t0 = t0;
  diag.star = grp.star;
  diag.derivs = grp.derivs;
  diag.det = grp.det;
  diag.psi = interface_residual(wl, wr, grp.star, cpl, gas);

  const PrimState& lt = grp.star.left_trace;
  const PrimState& rt = grp.star.right_trace;
  const double sig_l = std::abs(lt.u) + sound_speed(lt, gas);
  const double sig_r = std::abs(rt.u) + sound_speed(rt, gas);
  double t1 = t0 + opt.c_cfl * std::min(s.left.grid.dx() / sig_l,
                                        s.right.grid.dx() / sig_r);
  if (opt.max_window > 0.0) t1 = std::min(t1, t0 + opt.max_window);
  t1 = std::min(t1, next_break_after(outtake, t0, 1e-12 * tscale));
  t1 = std::min(t1, hard_stop);
  diag.t1 = t1;

  const InterfaceBoundarySeries bc =
      boundary_series(grp.star, grp.derivs, t0, t1);

  if (opt.concurrent) {
    std::exception_ptr left_error;
    std::thread worker([&] {
      try {
        advance_domain(s.left, t1, bc, s.far_left, opt, gas, s.left_account,
                       diag.left_steps);
      } catch (...) {
        left_error = std::current_exception();
      }
    });
    try {
      advance_domain(s.right, t1, bc, s.far_right, opt, gas, s.right_account,
                     diag.right_steps);
    } catch (...) {
      worker.join();
      throw;
    }
    worker.join();
    if (left_error) std::rethrow_exception(left_error);
  } else {
    advance_domain(s.left, t1, bc, s.far_left, opt, gas, s.left_account,
                   diag.left_steps);
    advance_domain(s.right, t1, bc, s.far_right, opt, gas, s.right_account,
                   diag.right_steps);
  }

  s.outtake_taken += outtake.integral(t0, t1);
  return diag;
}

Snapshot take_snapshot(const TwoDomainState& s) {
  Snapshot snap;
  snap.t = s.left.t;
  snap.left_grid = s.left.grid;
  snap.right_grid = s.right.grid;
  snap.left_cells = s.left.cells;
  snap.right_cells = s.right.cells;
  return snap;
}

RunResult run(TwoDomainState s, const OuttakeProfile& outtake, double t_end,
              const std::vector<double>& snapshot_times,
              const DriverOptions& opt, const GasParams& gas) {
  RunResult out;
  const double m0 = total_mass(s);
  out.snapshots.push_back(take_snapshot(s));
  for (double stop : stop_schedule(s.left.t, t_end, snapshot_times)) {
    const double eps = 1e-12 * std::max(1.0, std::abs(stop));
    while (stop - s.left.t > eps)
      tally_window(out, advance_window(s, outtake, stop, opt, gas));
    s.left.t = stop;
    s.right.t = stop;
    out.snapshots.push_back(take_snapshot(s));
  }
  finish_mass_ledger(out, s, m0);
  return out;
}

RunResult run_reference(TwoDomainState s, const OuttakeProfile& outtake,
                        double t_end,
                        const std::vector<double>& snapshot_times,
                        const DriverOptions& opt, const GasParams& gas) {
  RunResult out;
  const double m0 = total_mass(s);
  out.snapshots.push_back(take_snapshot(s));
  for (double stop : stop_schedule(s.left.t, t_end, snapshot_times)) {
    const double eps = 1e-12 * std::max(1.0, std::abs(stop));
    while (stop - s.left.t > eps) {
      const double t = s.left.t;
      double dt = std::min(
          cfl_dt(s.left, opt.c_cfl, 1, s.left.grid.dx(), gas),
          cfl_dt(s.right, opt.c_cfl, 1, s.right.grid.dx(), gas));
      if (opt.max_dt > 0.0) dt = std::min(dt, opt.max_dt);
      const double lim =
          std::min(stop, next_break_after(outtake, t, 1e-12 * (1.0 + t)));
      const double rem = lim - t;
      if (dt >= rem || rem - dt < 1e-9 * dt) dt = rem;

      const double tm = t + 0.5 * dt;
      const PrimState wl = predict_interface_edge(s.left, dt, gas);
      const PrimState wr = predict_interface_edge(s.right, dt, gas);
      const CouplingData cpl{outtake.value(tm), outtake.rate_right(tm)};
      const CoupledStarState star = solve_coupled_rp(wl, wr, cpl, gas);
      out.max_psi = std::max(out.max_psi,
                             interface_residual(wl, wr, star, cpl, gas));
      ++out.interface_solves;

      step_with_interface_flux(s.left, dt, euler_flux(star.left_trace, gas),
                               s.far_left, gas, &s.left_account);
      step_with_interface_flux(s.right, dt, euler_flux(star.right_trace, gas),
                               s.far_right, gas, &s.right_account);
      s.outtake_taken += outtake.integral(t, t + dt);
    }
    s.left.t = stop;
    s.right.t = stop;
    out.snapshots.push_back(take_snapshot(s));
  }
  finish_mass_ledger(out, s, m0);
  return out;
}

}  // namespace cgrp
