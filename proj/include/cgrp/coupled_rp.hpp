#pragma once

#include <array>

#include "cgrp/riemann.hpp"

namespace cgrp {

// Instantaneous generator data at the interface: the area-specific mass
// outtake E(t) >= 0 and its time derivative.
struct CouplingData {
  double outtake = 0.0;
  double outtake_rate = 0.0;
};

// Star region of the coupled problem.  The interface x = 0 separates the
// left trace (rho_bar, u_bar, p_bar) from the right trace (rho, u, p); the
// traces share pressure and density while u_bar = u + E / rho_bar.  The
// contact travels at u >= 0 into the right domain, and beyond it the density
// jumps to rho_right_of_contact (set by the right state's wave curve).
struct CoupledStarState {
  PrimState left_trace;
  PrimState right_trace;
  WaveType left_wave = WaveType::shock;
  WaveType right_wave = WaveType::shock;
  WaveSpeeds left_speeds;
  WaveSpeeds right_speeds;
  double rho_right_of_contact = 0.0;
};

CoupledStarState solve_coupled_rp(const PrimState& wl, const PrimState& wr,
                                  const CouplingData& cpl,
                                  const GasParams& gas);

// Raw defect of the three interface conditions (p, rho, velocity), in that
// order, evaluated from the stored traces.
std::array<double, 3> coupling_residual(const CoupledStarState& s,
                                        const CouplingData& cpl);

}  // namespace cgrp
