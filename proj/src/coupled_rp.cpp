#include "cgrp/coupled_rp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cgrp {

namespace {

// d(rho)/dp along the wave curve through state w (isentrope below w.p,
// Hugoniot above it).
double curve_density_slope(const PrimState& w, double p, const GasParams& gas) {
  const double g = gas.gamma;
  const double mu2 = (g - 1.0) / (g + 1.0);
  if (p > w.p) {
    const double den = mu2 * p + w.p;
    return w.rho * (1.0 - mu2 * mu2) * w.p / (den * den);
  }
  return w.rho * std::pow(p / w.p, 1.0 / g) / (g * p);
}

}  // namespace

CoupledStarState solve_coupled_rp(const PrimState& wl, const PrimState& wr,
                                  const CouplingData& cpl,
                                  const GasParams& gas) {
  validate_prim(wl);
  validate_prim(wr);
  if (!std::isfinite(cpl.outtake) || cpl.outtake < 0.0)
    throw ValidationError("outtake must be finite and >= 0, got " +
                          std::to_string(cpl.outtake));

  const double g = gas.gamma;
  const double cl = sound_speed(wl, gas);
  const double cr = sound_speed(wr, gas);
  const double E = cpl.outtake;

  // Interface velocities as functions of the interface pressure.  The left
  // trace rides the forward 1-family curve from wl, the right trace the
  // backward 3-family curve from wr; the left-curve density doubles as the
  // shared trace density rho_bar.
  auto u_left = [&](double p) {
    return lax_curve_state(wl, p, CurveFamily::one, gas).u;
  };
  auto u_right = [&](double p) {
    return lax_curve_state(wr, p, CurveFamily::three, gas).u;
  };
  auto rho_bar = [&](double p) {
    return lax_curve_state(wl, p, CurveFamily::one, gas).rho;
  };
  auto resid = [&](double p) { return u_left(p) - u_right(p) - E / rho_bar(p); };

  // The uncoupled star pressure gives a guaranteed non-positive end of the
  // bracket: there the velocity mismatch is exactly -E/rho_bar.
  const RiemannSolution unc = exact_rp(wl, wr, gas);
  double p_int = unc.p_star;

  if (E > 0.0) {
    double hi = unc.p_star;
    double lo = hi;
    const double p_floor = 1e-10 * std::min(wl.p, wr.p);
    // Walk down until the residual turns positive.  Removal of mass lowers
    // the interface pressure, so the physical root sits below uncoupled p*.
    bool bracketed = false;
    for (int i = 0; i < 400; ++i) {
      lo /= 1.5;
      if (lo < p_floor) break;
      if (resid(lo) > 0.0) {
        bracketed = true;
        break;
      }
      hi = lo;
    }
    if (!bracketed)
      throw NoConvergence(
          "coupled interface: outtake too large for a subsonic star region");

    // Round-off floor of resid() is a few ulps of the sound speeds.
    const double tol = 2e-14 * (cl + cr) + 1e-13;
    p_int = 0.5 * (lo + hi);
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const double f = resid(p_int);
      if (std::abs(f) < tol) {
        converged = true;
        break;
      }
      // Residual decreases in p on the physical branch.
      if (f > 0.0)
        lo = p_int;
      else
        hi = p_int;
      const double df =
          lax_curve_velocity_slope(wl, p_int, CurveFamily::one, gas) -
          lax_curve_velocity_slope(wr, p_int, CurveFamily::three, gas) +
          E / (rho_bar(p_int) * rho_bar(p_int)) *
              curve_density_slope(wl, p_int, gas);
      double pn = p_int - f / df;
      if (!(pn > lo) || !(pn < hi)) pn = 0.5 * (lo + hi);
      p_int = pn;
    }
    if (!converged)
      throw NoConvergence("coupled interface: pressure iteration stalled");
  }

  const CurvePoint left = lax_curve_state(wl, p_int, CurveFamily::one, gas);
  const CurvePoint right = lax_curve_state(wr, p_int, CurveFamily::three, gas);

  CoupledStarState s;
  s.left_trace = PrimState{left.rho, left.u, p_int};
  s.right_trace = PrimState{left.rho, right.u, p_int};
  s.rho_right_of_contact = right.rho;
  s.left_wave = left.wave;
  s.right_wave = right.wave;

  const double c_star = std::sqrt(g * p_int / left.rho);
  if (s.right_trace.u < 0.0 || s.left_trace.u < 0.0)
    throw NegativeVelocity("interface velocity " +
                           std::to_string(s.right_trace.u) +
                           " points into the generator");
  if (s.left_trace.u >= c_star)
    throw SupersonicInterface("left trace Mach >= 1");

  if (left.wave == WaveType::shock) {
    const double sig = shock_speed(wl, p_int, CurveFamily::one, gas);
    if (sig >= 0.0)
      throw SupersonicInterface("left shock would cross the interface");
    s.left_speeds = {sig, sig};
  } else {
    const double head = wl.u - cl;
    if (head >= 0.0)
      throw SupersonicInterface("left fan head reaches the interface");
    s.left_speeds = {head, s.left_trace.u - c_star};
  }
  if (right.wave == WaveType::shock) {
    const double sig = shock_speed(wr, p_int, CurveFamily::three, gas);
    if (sig <= 0.0)
      throw SupersonicInterface("right shock would cross the interface");
    s.right_speeds = {sig, sig};
  } else {
    const double c_star_r = std::sqrt(g * p_int / right.rho);
    s.right_speeds = {wr.u + cr, s.right_trace.u + c_star_r};
  }
  return s;
}

std::array<double, 3> coupling_residual(const CoupledStarState& s,
                                        const CouplingData& cpl) {
  return {s.left_trace.p - s.right_trace.p,
          s.left_trace.rho - s.right_trace.rho,
          s.left_trace.u - s.right_trace.u - cpl.outtake / s.left_trace.rho};
}

}  // namespace cgrp
