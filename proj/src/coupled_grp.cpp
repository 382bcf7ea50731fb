#include "cgrp/coupled_grp.hpp"

#include <cmath>

namespace cgrp {

namespace {

StarSideView coupled_side_view(const CoupledStarState& s, Side side,
                               const GasParams& gas) {
  StarSideView v;
  if (side == Side::left) {
    v.p_star = s.left_trace.p;
    v.u_star = s.left_trace.u;
    v.rho_star = s.left_trace.rho;
    v.wave = s.left_wave;
    v.sigma = s.left_speeds.head;
  } else {
    // The right-side wave coefficients live between the contact and the
    // 3-wave, where the density comes from the right state's wave curve.
    v.p_star = s.right_trace.p;
    v.u_star = s.right_trace.u;
    v.rho_star = s.rho_right_of_contact;
    v.wave = s.right_wave;
    v.sigma = s.right_speeds.head;
  }
  v.c_star = std::sqrt(gas.gamma * v.p_star / v.rho_star);
  return v;
}

}  // namespace

Matrix3 assemble_matrix(const GrpSideCoeffs& left, const GrpSideCoeffs& right,
                        const CoupledStarState& star, const CouplingData& cpl) {
  const double rho_bar = star.left_trace.rho;
  const double w = cpl.outtake / (rho_bar * rho_bar);

  Matrix3 out;
  out.m[0][0] = left.h;
  out.m[0][1] = 0.0;
  out.m[0][2] = left.k;
  out.rhs[0] = left.q;

  out.m[1][0] = 0.0;
  out.m[1][1] = right.h;
  out.m[1][2] = right.k;
  out.rhs[1] = right.q;

  // Differentiated velocity condition with d_rhobar_dt eliminated through
  // the left-wave density row.
  out.m[2][0] = 1.0 - w * left.g_u / left.g_rho;
  out.m[2][1] = -1.0;
  out.m[2][2] = -w * left.g_p / left.g_rho;
  out.rhs[2] = cpl.outtake_rate / rho_bar - w * left.f / left.g_rho;
  return out;
}

double det_check(const Matrix3& m) {
  auto cof = [&](int r, int c) {
    const int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
    const int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
    return m.m[r1][c1] * m.m[r2][c2] - m.m[r1][c2] * m.m[r2][c1];
  };
  const double det =
      m.m[0][0] * cof(0, 0) + m.m[0][1] * cof(0, 1) + m.m[0][2] * cof(0, 2);

  double norm_prod = 1.0;
  for (int r = 0; r < 3; ++r) {
    norm_prod *= std::max(
        {std::abs(m.m[r][0]), std::abs(m.m[r][1]), std::abs(m.m[r][2])});
  }
  if (!(std::abs(det) > 1e-12 * norm_prod))
    throw SingularCoupling("coupled derivative matrix is singular");
  return det;
}

CoupledGrpResult solve_coupled_grp(const PrimState& wl, const PrimState& wr,
                                   const SideSlopes& sl, const SideSlopes& sr,
                                   const CouplingData& cpl,
                                   const GasParams& gas) {
  CoupledGrpResult out;
  out.star = solve_coupled_rp(wl, wr, cpl, gas);

  const StarSideView vl = coupled_side_view(out.star, Side::left, gas);
  const StarSideView vr = coupled_side_view(out.star, Side::right, gas);
  // Each row's derivatives live in the interface-adjacent region on its own
  // side of x = 0.  Both share the trace density (and hence sound speed);
  // only the advection velocity differs by the momentum jump.
  const PrimState& lt = out.star.left_trace;
  const PrimState& rt = out.star.right_trace;
  const AxisRegion axis_l{lt.rho, std::sqrt(gas.gamma * lt.p / lt.rho), lt.u};
  const AxisRegion axis_r{rt.rho, std::sqrt(gas.gamma * rt.p / rt.rho), rt.u};
  const GrpSideCoeffs cl = side_coeffs(wl, sl, vl, axis_l, Side::left, gas);
  const GrpSideCoeffs cr = side_coeffs(wr, sr, vr, axis_r, Side::right, gas);

  const Matrix3 M = assemble_matrix(cl, cr, out.star, cpl);
  out.det = det_check(M);

  // Cramer's rule on the fixed 3x3 system.
  auto det3 = [](const double a[3][3]) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  double work[3][3];
  double sol[3];
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k)
        work[r][k] = (k == c) ? M.rhs[r] : M.m[r][k];
    sol[c] = det3(work) / out.det;
  }

  CoupledDerivatives& d = out.derivs;
  d.d_ubar_dt = sol[0];
  d.d_u_dt = sol[1];
  d.d_pbar_dt = sol[2];
  d.d_p_dt = d.d_pbar_dt;
  d.d_rhobar_dt =
      (cl.f - cl.g_u * d.d_ubar_dt - cl.g_p * d.d_pbar_dt) / cl.g_rho;
  d.d_rho_dt = d.d_rhobar_dt;
  return out;
}

InterfaceBoundarySeries boundary_series(const CoupledStarState& star,
                                        const CoupledDerivatives& derivs,
                                        double t0, double t1) {
  if (!(t1 > t0))
    throw ValidationError("boundary series needs t1 > t0");
  InterfaceBoundarySeries s;
  s.t0 = t0;
  s.t1 = t1;
  s.left_star = star.left_trace;
  s.right_star = star.right_trace;
  s.left_deriv = PrimState{derivs.d_rhobar_dt, derivs.d_ubar_dt, derivs.d_pbar_dt};
  s.right_deriv = PrimState{derivs.d_rho_dt, derivs.d_u_dt, derivs.d_p_dt};
  return s;
}

}  // namespace cgrp
