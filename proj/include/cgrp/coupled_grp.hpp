#pragma once

#include "cgrp/coupled_rp.hpp"
#include "cgrp/grp.hpp"

namespace cgrp {

// Interface time derivatives, barred quantities on the generator (left)
// side.  By construction d_p_dt == d_pbar_dt and d_rho_dt == d_rhobar_dt.
struct CoupledDerivatives {
  double d_ubar_dt = 0.0;
  double d_u_dt = 0.0;
  double d_pbar_dt = 0.0;
  double d_p_dt = 0.0;
  double d_rhobar_dt = 0.0;
  double d_rho_dt = 0.0;
};

struct Matrix3 {
  double m[3][3] = {};
  double rhs[3] = {};
};

// Rows: the two one-sided (h,k|q) relations, then the differentiated
// velocity coupling with the left density row substituted in.  Unknowns are
// (d_ubar_dt, d_u_dt, d_pbar_dt).
Matrix3 assemble_matrix(const GrpSideCoeffs& left, const GrpSideCoeffs& right,
                        const CoupledStarState& star, const CouplingData& cpl);

// Determinant of the assembled matrix; throws SingularCoupling when it is
// numerically zero relative to the row norms.
double det_check(const Matrix3& m);

struct CoupledGrpResult {
  CoupledStarState star;
  CoupledDerivatives derivs;
  double det = 0.0;
};

CoupledGrpResult solve_coupled_grp(const PrimState& wl, const PrimState& wr,
                                   const SideSlopes& sl, const SideSlopes& sr,
                                   const CouplingData& cpl,
                                   const GasParams& gas);

// Linear-in-time interface traces over a sync window; immutable, so both
// domain steppers may read one instance concurrently.
struct InterfaceBoundarySeries {
  double t0 = 0.0;
  double t1 = 0.0;
  PrimState left_star;
  PrimState right_star;
  PrimState left_deriv;   // PrimState-shaped (d_rho, d_u, d_p)
  PrimState right_deriv;

  PrimState eval_left(double t) const {
    const double dt = t - t0;
    return PrimState{left_star.rho + dt * left_deriv.rho,
                     left_star.u + dt * left_deriv.u,
                     left_star.p + dt * left_deriv.p};
  }
  PrimState eval_right(double t) const {
    const double dt = t - t0;
    return PrimState{right_star.rho + dt * right_deriv.rho,
                     right_star.u + dt * right_deriv.u,
                     right_star.p + dt * right_deriv.p};
  }
};

InterfaceBoundarySeries boundary_series(const CoupledStarState& star,
                                        const CoupledDerivatives& derivs,
                                        double t0, double t1);

}  // namespace cgrp
