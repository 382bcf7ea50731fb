#pragma once

#include <array>

#include "cgrp/riemann.hpp"

namespace cgrp {

enum class Side { left, right };

// One-sided spatial derivatives of the primitive variables adjacent to the
// interface (per meter).
struct SideSlopes {
  double d_rho_dx = 0.0;
  double d_u_dx = 0.0;
  double d_p_dx = 0.0;
};

// Everything about one resolved outer wave that the coefficient formulas
// need: the star state bordering it on the interface side, plus the wave
// type and (for shocks) the propagation speed.
struct StarSideView {
  double p_star = 0.0;
  double u_star = 0.0;   // trace velocity on this side of the interface
  double rho_star = 0.0; // density between this wave and the contact
  double c_star = 0.0;
  WaveType wave = WaveType::shock;
  double sigma = 0.0;    // shock speed; unused for rarefactions
};

struct LagrangianCoeffs {
  double a = 0.0, b = 0.0, d = 0.0;
};

// The star subregion that contains the t-axis.  The conversion from
// material to partial time derivatives happens at x = 0, so its factors
// (density, sound speed, advection velocity) belong to this region, not to
// the region adjacent to the wave being resolved.  For the wave on the
// axis side the two coincide; for the opposite wave they differ whenever
// the contact carries a density jump.
struct AxisRegion {
  double rho = 0.0;
  double c = 0.0;
  double u = 0.0;
};

struct EulerianCoeffs {
  double h = 0.0, k = 0.0, q = 0.0;
};

struct DensityCoeffs {
  double g_rho = 0.0, g_u = 0.0, g_p = 0.0, f = 0.0;
};

struct GrpSideCoeffs {
  double a = 0.0, b = 0.0, d = 0.0;
  double h = 0.0, k = 0.0, q = 0.0;
  double g_rho = 0.0, g_u = 0.0, g_p = 0.0, f = 0.0;
  WaveType wave = WaveType::shock;
  Side side = Side::left;
};

struct GrpDerivatives {
  double d_rho_dt = 0.0;
  double d_u_dt = 0.0;
  double d_p_dt = 0.0;
};

// Per-side view of a classical Riemann solution (u_star shared).
StarSideView star_side_view(const RiemannSolution& sol, Side side,
                            const GasParams& gas);

// Axis region taken from the star side the t-axis lies on.
AxisRegion axis_region(const StarSideView& axis_side);

LagrangianCoeffs lagrangian_coeffs(const PrimState& init,
                                   const SideSlopes& slopes,
                                   const StarSideView& star, Side side,
                                   const GasParams& gas);

EulerianCoeffs eulerian_coeffs(const LagrangianCoeffs& lag,
                               const AxisRegion& axis);

DensityCoeffs density_coeffs(const PrimState& init, const SideSlopes& slopes,
                             const StarSideView& star, Side side,
                             const GasParams& gas);

GrpSideCoeffs side_coeffs(const PrimState& init, const SideSlopes& slopes,
                          const StarSideView& star, const AxisRegion& axis,
                          Side side, const GasParams& gas);

// 2x2 solve of the (h,k|q) rows; throws SingularSystem when the rows are
// (numerically) parallel.  Returns (du/dt, dp/dt).
std::array<double, 2> solve_linear2(double h_l, double k_l, double q_l,
                                    double h_r, double k_r, double q_r);

// Full single-system GRP at the t-axis: returns the Eulerian time
// derivatives of (rho, u, p) at x = 0, t = 0+.
GrpDerivatives solve_single_grp(const PrimState& wl, const PrimState& wr,
                                const SideSlopes& sl, const SideSlopes& sr,
                                const GasParams& gas);

}  // namespace cgrp
