#pragma once

#include <cmath>

#include "cgrp/errors.hpp"

namespace cgrp {

// Ideal gas closure.  r_sgc is the specific gas constant used to recover
// temperature; it never enters the dynamics.
struct GasParams {
  double gamma = 1.4;
  double r_sgc = 277.13333;
};

struct PrimState {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

struct ConsState {
  double rho = 0.0;  // mass density
  double mom = 0.0;  // momentum density rho*u
  double en = 0.0;   // total energy density p/(gamma-1) + rho*u^2/2

  ConsState& operator+=(const ConsState& o) {
    rho += o.rho;
    mom += o.mom;
    en += o.en;
    return *this;
  }
  ConsState& operator-=(const ConsState& o) {
    rho -= o.rho;
    mom -= o.mom;
    en -= o.en;
    return *this;
  }
  ConsState& operator*=(double s) {
    rho *= s;
    mom *= s;
    en *= s;
    return *this;
  }
};

inline ConsState operator+(ConsState a, const ConsState& b) { return a += b; }
inline ConsState operator-(ConsState a, const ConsState& b) { return a -= b; }
inline ConsState operator*(double s, ConsState a) { return a *= s; }
inline ConsState operator*(ConsState a, double s) { return a *= s; }

void validate_prim(const PrimState& w);

ConsState prim_to_cons(const PrimState& w, const GasParams& gas);
PrimState cons_to_prim(const ConsState& q, const GasParams& gas);

inline double sound_speed(const PrimState& w, const GasParams& gas) {
  if (!(w.rho > 0.0) || !(w.p > 0.0))
    throw NonPhysicalState("sound_speed needs rho > 0 and p > 0");
  return std::sqrt(gas.gamma * w.p / w.rho);
}

inline double temperature(const PrimState& w, const GasParams& gas) {
  return w.p / (w.rho * gas.r_sgc);
}

ConsState euler_flux(const PrimState& w, const GasParams& gas);

}  // namespace cgrp
