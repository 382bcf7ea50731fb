#include "cgrp/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cgrp {

namespace {

// f_i(p): velocity change across the wave connecting state i to pressure p.
// Shock branch for p > p_i, rarefaction branch otherwise (Toro ch. 4).
double pressure_fn(const PrimState& w, double p, const GasParams& gas) {
  const double g = gas.gamma;
  const double c = std::sqrt(g * w.p / w.rho);
  if (p > w.p) {
    const double a = 2.0 / ((g + 1.0) * w.rho);
    const double b = (g - 1.0) / (g + 1.0) * w.p;
    return (p - w.p) * std::sqrt(a / (p + b));
  }
  return 2.0 * c / (g - 1.0) *
         (std::pow(p / w.p, (g - 1.0) / (2.0 * g)) - 1.0);
}

double pressure_fn_deriv(const PrimState& w, double p, const GasParams& gas) {
  const double g = gas.gamma;
  const double c = std::sqrt(g * w.p / w.rho);
  if (p > w.p) {
    const double a = 2.0 / ((g + 1.0) * w.rho);
    const double b = (g - 1.0) / (g + 1.0) * w.p;
    const double root = std::sqrt(a / (p + b));
    return root * (1.0 - (p - w.p) / (2.0 * (b + p)));
  }
  return std::pow(p / w.p, -(g + 1.0) / (2.0 * g)) / (w.rho * c);
}

}  // namespace

CurvePoint lax_curve_state(const PrimState& w, double p, CurveFamily family,
                           const GasParams& gas) {
  validate_prim(w);
  if (!(p > 0.0))
    throw NonPhysicalState("lax_curve_state: p = " + std::to_string(p) +
                           " <= 0");
  const double g = gas.gamma;
  const double mu2 = (g - 1.0) / (g + 1.0);
  const double sign = (family == CurveFamily::one) ? -1.0 : +1.0;
  CurvePoint out;
  out.u = w.u + sign * pressure_fn(w, p, gas);
  if (p > w.p) {
    out.wave = WaveType::shock;
    const double r = p / w.p;
    out.rho = w.rho * (r + mu2) / (mu2 * r + 1.0);
  } else {
    out.wave = WaveType::rarefaction;
    out.rho = w.rho * std::pow(p / w.p, 1.0 / g);
  }
  return out;
}

double lax_curve_velocity_slope(const PrimState& w, double p,
                                CurveFamily family, const GasParams& gas) {
  const double sign = (family == CurveFamily::one) ? -1.0 : +1.0;
  return sign * pressure_fn_deriv(w, p, gas);
}

double shock_speed(const PrimState& w, double p_star, CurveFamily family,
                   const GasParams& gas) {
  const double g = gas.gamma;
  const double c = std::sqrt(g * w.p / w.rho);
  const double q =
      std::sqrt((g + 1.0) / (2.0 * g) * p_star / w.p + (g - 1.0) / (2.0 * g));
  return (family == CurveFamily::one) ? w.u - c * q : w.u + c * q;
}

RiemannSolution exact_rp(const PrimState& wl, const PrimState& wr,
                         const GasParams& gas) {
  validate_prim(wl);
  validate_prim(wr);
  const double g = gas.gamma;
  const double cl = std::sqrt(g * wl.p / wl.rho);
  const double cr = std::sqrt(g * wr.p / wr.rho);

  if (2.0 * (cl + cr) / (g - 1.0) <= wr.u - wl.u)
    throw VacuumState("states separate faster than the gas can expand");

  const double du = wr.u - wl.u;

  // Degenerate data carries no waves; return it bit-exactly rather than
  // letting pow() round-trips smudge the star state.
  const bool trivial = (du == 0.0 && wl.p == wr.p);

  // Two-rarefaction initial guess, clipped into the admissible band.
  double p = std::pow(
      (cl + cr - 0.5 * (g - 1.0) * du) /
          (cl / std::pow(wl.p, (g - 1.0) / (2.0 * g)) +
           cr / std::pow(wr.p, (g - 1.0) / (2.0 * g))),
      2.0 * g / (g - 1.0));

  double lo = 1e-10 * std::min(wl.p, wr.p);
  double hi = 50.0 * std::max(wl.p, wr.p);
  p = std::clamp(p, lo, hi);

  auto total = [&](double pp) {
    return pressure_fn(wl, pp, gas) + pressure_fn(wr, pp, gas) + du;
  };

  // total() is increasing in p.  Expand hi if the bracket misses the root
  // (enormous compressions), then Newton with a bisection safety net.
  while (total(hi) < 0.0) {
    hi *= 50.0;
    if (!std::isfinite(hi))
      throw NoConvergence("exact_rp: cannot bracket star pressure");
  }

  // Convergence is judged on the velocity residual.  The floor sits at a few
  // ulps of the sound speeds (the largest terms entering total()), so the
  // tolerance tracks both the star-velocity scale and that floor.
  const double u_scale =
      std::max(1.0, std::abs(0.5 * (wl.u + wr.u)) + 0.5 * std::abs(du));
  const double tol = std::max(1e-13 * u_scale, 1e-14 * (cl + cr));
  bool converged = trivial;
  if (trivial) p = wl.p;
  for (int it = 0; it < 100 && !converged; ++it) {
    const double f = total(p);
    if (std::abs(f) < tol) {
      converged = true;
      break;
    }
    if (f > 0.0)
      hi = p;
    else
      lo = p;
    const double df =
        pressure_fn_deriv(wl, p, gas) + pressure_fn_deriv(wr, p, gas);
    double pn = p - f / df;
    if (!(pn > lo) || !(pn < hi)) pn = 0.5 * (lo + hi);
    p = pn;
  }
  if (!converged)
    throw NoConvergence("exact_rp: star pressure iteration stalled");

  RiemannSolution s;
  s.p_star = p;
  const CurvePoint left = lax_curve_state(wl, p, CurveFamily::one, gas);
  const CurvePoint right = lax_curve_state(wr, p, CurveFamily::three, gas);
  s.u_star = 0.5 * (left.u + right.u);
  s.rho_star_l = left.rho;
  s.rho_star_r = right.rho;
  s.left_wave = left.wave;
  s.right_wave = right.wave;

  if (s.left_wave == WaveType::shock) {
    const double sp = shock_speed(wl, p, CurveFamily::one, gas);
    s.left_speeds = {sp, sp};
  } else {
    const double csl = std::sqrt(g * p / s.rho_star_l);
    s.left_speeds = {wl.u - cl, s.u_star - csl};
  }
  if (s.right_wave == WaveType::shock) {
    const double sp = shock_speed(wr, p, CurveFamily::three, gas);
    s.right_speeds = {sp, sp};
  } else {
    const double csr = std::sqrt(g * p / s.rho_star_r);
    s.right_speeds = {wr.u + cr, s.u_star + csr};
  }
  return s;
}

PrimState sample_rp(const RiemannSolution& sol, const PrimState& wl,
                    const PrimState& wr, double xi, const GasParams& gas) {
  const double g = gas.gamma;
  if (xi <= sol.u_star) {
    // Left of the contact.
    if (sol.left_wave == WaveType::shock) {
      if (xi <= sol.left_speeds.head) return wl;
      return PrimState{sol.rho_star_l, sol.u_star, sol.p_star};
    }
    if (xi <= sol.left_speeds.head) return wl;
    if (xi >= sol.left_speeds.tail)
      return PrimState{sol.rho_star_l, sol.u_star, sol.p_star};
    const double cl = std::sqrt(g * wl.p / wl.rho);
    PrimState w;
    const double cf = (2.0 * cl + (g - 1.0) * (wl.u - xi)) / (g + 1.0);
    w.u = xi + cf;
    w.rho = wl.rho * std::pow(cf / cl, 2.0 / (g - 1.0));
    w.p = wl.p * std::pow(cf / cl, 2.0 * g / (g - 1.0));
    return w;
  }
  // Right of the contact.
  if (sol.right_wave == WaveType::shock) {
    if (xi >= sol.right_speeds.head) return wr;
    return PrimState{sol.rho_star_r, sol.u_star, sol.p_star};
  }
  if (xi >= sol.right_speeds.head) return wr;
  if (xi <= sol.right_speeds.tail)
    return PrimState{sol.rho_star_r, sol.u_star, sol.p_star};
  const double cr = std::sqrt(g * wr.p / wr.rho);
  PrimState w;
  const double cf = (2.0 * cr - (g - 1.0) * (wr.u - xi)) / (g + 1.0);
  w.u = xi - cf;
  w.rho = wr.rho * std::pow(cf / cr, 2.0 / (g - 1.0));
  w.p = wr.p * std::pow(cf / cr, 2.0 * g / (g - 1.0));
  return w;
}

}  // namespace cgrp
