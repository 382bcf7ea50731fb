#include "cgrp/grp.hpp"

#include <cmath>

namespace cgrp {

namespace {

// Directional derivatives of the upstream field along the shock path
// dx/dt = sigma, with time derivatives eliminated through the smooth
// upstream PDE: D_sigma(chi) = (sigma - u) chi_x + chi_t.
struct UpstreamAlongShock {
  double rho, u, p;
};

UpstreamAlongShock along_shock(const PrimState& w, const SideSlopes& s,
                               double sigma, const GasParams& gas) {
  const double c2 = gas.gamma * w.p / w.rho;
  UpstreamAlongShock d;
  d.rho = (sigma - w.u) * s.d_rho_dx - w.rho * s.d_u_dx;
  d.u = (sigma - w.u) * s.d_u_dx - s.d_p_dx / w.rho;
  d.p = (sigma - w.u) * s.d_p_dx - w.rho * c2 * s.d_u_dx;
  return d;
}

}  // namespace

StarSideView star_side_view(const RiemannSolution& sol, Side side,
                            const GasParams& gas) {
  StarSideView v;
  v.p_star = sol.p_star;
  v.u_star = sol.u_star;
  if (side == Side::left) {
    v.rho_star = sol.rho_star_l;
    v.wave = sol.left_wave;
    v.sigma = sol.left_speeds.head;
  } else {
    v.rho_star = sol.rho_star_r;
    v.wave = sol.right_wave;
    v.sigma = sol.right_speeds.head;
  }
  v.c_star = std::sqrt(gas.gamma * v.p_star / v.rho_star);
  return v;
}

LagrangianCoeffs lagrangian_coeffs(const PrimState& init,
                                   const SideSlopes& slopes,
                                   const StarSideView& star, Side side,
                                   const GasParams& gas) {
  const double g = gas.gamma;
  const double mu2 = (g - 1.0) / (g + 1.0);
  const double sgn = (side == Side::left) ? 1.0 : -1.0;
  const double ci = std::sqrt(g * init.p / init.rho);

  LagrangianCoeffs out;
  if (star.wave == WaveType::rarefaction) {
    out.a = 1.0;
    out.b = sgn / (star.rho_star * star.c_star);
    // Slope of the Riemann invariant carried into the fan, and the entropy
    // gradient transported through it.
    const double theta = star.c_star / ci;
    const double inv_slope =
        slopes.d_u_dx + sgn * (ci / (g - 1.0)) *
                            (slopes.d_p_dx / init.p - slopes.d_rho_dx / init.rho);
    const double ent_slope =
        slopes.d_p_dx / init.p - g * slopes.d_rho_dx / init.rho;
    const double transport =
        ((1.0 + mu2) * std::pow(theta, 0.5 / mu2) +
         mu2 * std::pow(theta, (1.0 + mu2) / mu2)) /
        (1.0 + 2.0 * mu2);
    out.d = -sgn * ci * std::pow(theta, 0.5 / mu2) * inv_slope +
            ci * ci / (g * (g - 1.0)) * ent_slope * transport;
  } else {
    // Shock branch: differentiate the velocity jump relation along the
    // shock path.  All upstream quantities refer to this side's initial
    // state; phi1 is the pressure derivative of the jump relation.
    const double a6 = 2.0 / ((g + 1.0) * init.rho);
    const double b6 = mu2 * init.p;
    const double dp = star.p_star - init.p;
    const double gg = std::sqrt(a6 / (star.p_star + b6));
    const double phi1 = gg * (1.0 - dp / (2.0 * (b6 + star.p_star)));
    const double phi3u = gg * (1.0 + mu2 * dp / (2.0 * (star.p_star + b6)));
    const double rel = star.sigma - star.u_star;

    out.a = 1.0 - sgn * star.rho_star * rel * phi1;
    out.b = -rel / (star.rho_star * star.c_star * star.c_star) + sgn * phi1;

    const UpstreamAlongShock D = along_shock(init, slopes, star.sigma, gas);
    out.d = sgn * (dp * gg / (2.0 * init.rho)) * D.rho + D.u + sgn * phi3u * D.p;
  }
  return out;
}

AxisRegion axis_region(const StarSideView& axis_side) {
  return AxisRegion{axis_side.rho_star, axis_side.c_star, axis_side.u_star};
}

EulerianCoeffs eulerian_coeffs(const LagrangianCoeffs& lag,
                               const AxisRegion& axis) {
  const double c2 = axis.c * axis.c;
  EulerianCoeffs out;
  out.h = lag.a - axis.rho * axis.u * lag.b;
  out.k = lag.b - axis.u / (axis.rho * c2) * lag.a;
  out.q = (1.0 - axis.u * axis.u / c2) * lag.d;
  return out;
}

DensityCoeffs density_coeffs(const PrimState& init, const SideSlopes& slopes,
                             const StarSideView& star, Side /*side*/,
                             const GasParams& gas) {
  const double g = gas.gamma;
  const double mu2 = (g - 1.0) / (g + 1.0);
  const double c2 = star.c_star * star.c_star;
  const double us = star.u_star;

  DensityCoeffs out;
  if (star.wave == WaveType::rarefaction) {
    out.g_rho = c2;
    out.g_u = 0.0;
    out.g_p = -1.0;
    // Entropy advection: the upstream entropy gradient is transported
    // through the fan and converted back to a (p, rho) defect rate.
    const double theta = star.c_star / std::sqrt(g * init.p / init.rho);
    const double ent_slope =
        slopes.d_p_dx / init.p - g * slopes.d_rho_dx / init.rho;
    out.f = us * star.p_star * ent_slope *
            std::pow(theta, (1.0 - mu2) / mu2);
  } else {
    const double rel = star.sigma - star.u_star;
    // Density jump relation rho_star(rho_up, p_up, p_star): partials wrt the
    // star pressure and the upstream state.
    const double den = mu2 * star.p_star + init.p;
    const double gp_star = init.rho * (1.0 - mu2 * mu2) * init.p / (den * den);
    const double gr_up = (star.p_star + mu2 * init.p) / den;
    const double gp_up = -init.rho * (1.0 - mu2 * mu2) * star.p_star / (den * den);

    const UpstreamAlongShock D = along_shock(init, slopes, star.sigma, gas);
    const double e_up = gr_up * D.rho + gp_up * D.p;

    out.g_rho = c2 - us * us;
    out.g_u = star.sigma * star.rho_star * us * (1.0 - gp_star * c2) / rel;
    out.g_p = (-star.sigma + us * gp_star * (c2 - us * us + star.sigma * us)) / rel;
    out.f = -us * e_up * (c2 - us * us) / rel;
  }
  return out;
}

GrpSideCoeffs side_coeffs(const PrimState& init, const SideSlopes& slopes,
                          const StarSideView& star, const AxisRegion& axis,
                          Side side, const GasParams& gas) {
  const LagrangianCoeffs lag = lagrangian_coeffs(init, slopes, star, side, gas);
  const EulerianCoeffs eul = eulerian_coeffs(lag, axis);
  const DensityCoeffs den = density_coeffs(init, slopes, star, side, gas);
  GrpSideCoeffs out;
  out.a = lag.a;
  out.b = lag.b;
  out.d = lag.d;
  out.h = eul.h;
  out.k = eul.k;
  out.q = eul.q;
  out.g_rho = den.g_rho;
  out.g_u = den.g_u;
  out.g_p = den.g_p;
  out.f = den.f;
  out.wave = star.wave;
  out.side = side;
  return out;
}

std::array<double, 2> solve_linear2(double h_l, double k_l, double q_l,
                                    double h_r, double k_r, double q_r) {
  const double det = h_l * k_r - h_r * k_l;
  const double scale = std::abs(h_l * k_r) + std::abs(h_r * k_l);
  if (!(std::abs(det) > 1e-14 * scale))
    throw SingularSystem("interface derivative rows are parallel");
  return {(q_l * k_r - q_r * k_l) / det, (h_l * q_r - h_r * q_l) / det};
}

GrpDerivatives solve_single_grp(const PrimState& wl, const PrimState& wr,
                                const SideSlopes& sl, const SideSlopes& sr,
                                const GasParams& gas) {
  const RiemannSolution sol = exact_rp(wl, wr, gas);

  // The construction needs the t-axis strictly inside the intermediate
  // region; a fan straddling x = 0 (or a wave on the wrong side) is out.
  if (!(sol.left_speeds.tail < 0.0))
    throw SonicFan("left wave reaches or crosses the t-axis");
  if (!(sol.right_speeds.tail > 0.0))
    throw SonicFan("right wave reaches or crosses the t-axis");

  const StarSideView vl = star_side_view(sol, Side::left, gas);
  const StarSideView vr = star_side_view(sol, Side::right, gas);
  const AxisRegion axis = axis_region(sol.u_star >= 0.0 ? vl : vr);
  const GrpSideCoeffs cl = side_coeffs(wl, sl, vl, axis, Side::left, gas);
  const GrpSideCoeffs cr = side_coeffs(wr, sr, vr, axis, Side::right, gas);

  const auto up = solve_linear2(cl.h, cl.k, cl.q, cr.h, cr.k, cr.q);

  // Density follows from the wave on whichever side of the contact the
  // t-axis lies.
  const GrpSideCoeffs& cs = (sol.u_star >= 0.0) ? cl : cr;
  GrpDerivatives out;
  out.d_u_dt = up[0];
  out.d_p_dt = up[1];
  out.d_rho_dt = (cs.f - cs.g_u * up[0] - cs.g_p * up[1]) / cs.g_rho;
  return out;
}

}  // namespace cgrp
