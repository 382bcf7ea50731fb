#pragma once

#include "cgrp/euler.hpp"

namespace cgrp {

enum class WaveType { shock, rarefaction };

// Which acoustic family a wave curve belongs to, and whether we walk it
// forward (from the left initial state) or backward (from the right one).
enum class CurveFamily { one = 1, three = 3 };

struct WaveSpeeds {
  double head = 0.0;  // fastest signal of the wave (leftmost for family 1)
  double tail = 0.0;  // equals head for a shock
};

struct RiemannSolution {
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_l = 0.0;  // between the 1-wave and the contact
  double rho_star_r = 0.0;  // between the contact and the 3-wave
  WaveType left_wave = WaveType::shock;
  WaveType right_wave = WaveType::shock;
  WaveSpeeds left_speeds;
  WaveSpeeds right_speeds;
};

// Velocity reached on the wave curve of the given family through state `w`
// at pressure p, plus the density there.  Family 1 walked forward gives the
// locus of left traces; family 3 walked backward gives right traces.
struct CurvePoint {
  double u = 0.0;
  double rho = 0.0;
  WaveType wave = WaveType::shock;
};

CurvePoint lax_curve_state(const PrimState& w, double p, CurveFamily family,
                           const GasParams& gas);

// du/dp along the same curve (used by Newton iterations).
double lax_curve_velocity_slope(const PrimState& w, double p,
                                CurveFamily family, const GasParams& gas);

// Shock propagation speed for the wave of the given family when the star
// pressure is p_star (only meaningful when that wave is a shock, but the
// formula degrades gracefully to the acoustic speed as p_star -> p).
double shock_speed(const PrimState& w, double p_star, CurveFamily family,
                   const GasParams& gas);

RiemannSolution exact_rp(const PrimState& wl, const PrimState& wr,
                         const GasParams& gas);

// Self-similar sample of the solution at xi = x/t.
PrimState sample_rp(const RiemannSolution& sol, const PrimState& wl,
                    const PrimState& wr, double xi, const GasParams& gas);

}  // namespace cgrp
