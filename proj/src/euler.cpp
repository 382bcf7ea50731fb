#include "cgrp/euler.hpp"

#include <cmath>
#include <string>

namespace cgrp {

void validate_prim(const PrimState& w) {
  if (!std::isfinite(w.rho) || !std::isfinite(w.u) || !std::isfinite(w.p))
    throw NonPhysicalState("non-finite primitive state");
  if (!(w.rho > 0.0))
    throw NonPhysicalState("rho = " + std::to_string(w.rho) + " <= 0");
  if (!(w.p > 0.0))
    throw NonPhysicalState("p = " + std::to_string(w.p) + " <= 0");
}

ConsState prim_to_cons(const PrimState& w, const GasParams& gas) {
  validate_prim(w);
  ConsState q;
  q.rho = w.rho;
  q.mom = w.rho * w.u;
  q.en = w.p / (gas.gamma - 1.0) + 0.5 * w.rho * w.u * w.u;
  return q;
}

PrimState cons_to_prim(const ConsState& q, const GasParams& gas) {
  if (!std::isfinite(q.rho) || !std::isfinite(q.mom) || !std::isfinite(q.en))
    throw NonPhysicalState("non-finite conserved state");
  if (!(q.rho > 0.0))
    throw NonPhysicalState("conserved rho = " + std::to_string(q.rho) +
                           " <= 0");
  PrimState w;
  w.rho = q.rho;
  w.u = q.mom / q.rho;
  w.p = (gas.gamma - 1.0) * (q.en - 0.5 * q.mom * q.mom / q.rho);
  if (!(w.p > 0.0))
    throw NonPhysicalState("recovered p = " + std::to_string(w.p) + " <= 0");
  return w;
}

ConsState euler_flux(const PrimState& w, const GasParams& gas) {
  ConsState q = prim_to_cons(w, gas);
  ConsState f;
  f.rho = q.mom;
  f.mom = q.mom * w.u + w.p;
  f.en = w.u * (q.en + w.p);
  return f;
}

}  // namespace cgrp
