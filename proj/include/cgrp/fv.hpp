#pragma once

#include <functional>
#include <vector>

#include "cgrp/coupled_grp.hpp"
#include "cgrp/euler.hpp"
#include "cgrp/grp.hpp"

namespace cgrp {

// One uniform-grid Euler domain.  The interface sits on the x_max face for
// a left-of-interface domain and on the x_min face for a right one.
struct DomainGrid {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 2;
  Side side = Side::right;

  double dx() const { return (x_max - x_min) / n_cells; }
  double x_center(int i) const { return x_min + (i + 0.5) * dx(); }
  double face(int i) const { return x_min + i * dx(); }
};

void validate_grid(const DomainGrid& grid);

// Far boundary: the exterior is pinned to the initial far state and the
// face flux comes from an exact half-Riemann solve against it.
struct FarFieldSpec {
  PrimState pinned;
};

struct DomainState {
  DomainGrid grid;
  double t = 0.0;
  std::vector<ConsState> cells;
  std::vector<SideSlopes> slopes;  // limited primitive slopes, per cell
};

// Cell averages from an exact average functional over [a, b].
DomainState make_domain(const DomainGrid& grid,
                        const std::function<ConsState(double, double)>& avg,
                        const GasParams& gas);

// Monotonized-central primitive slopes (central difference, minmod-limited
// against the doubled one-sided ones); boundary cells take their single
// one-sided difference.
std::vector<SideSlopes> reconstruct(const DomainState& state,
                                    const GasParams& gas);

// dt = c_cfl * dx / ((2 p_order + 1) lambda_max)
double cfl_dt(const DomainState& state, double c_cfl, int p_order, double dx,
              const GasParams& gas);

// Accumulated dt*flux through the two boundary faces, signed along +x.
struct BoundaryFluxAccount {
  ConsState interface_total{0.0, 0.0, 0.0};
  ConsState farfield_total{0.0, 0.0, 0.0};
};

// One MUSCL-Hancock step.  The interface face flux is taken from the
// window's boundary trace at t + dt/2; the far face couples to far.pinned.
void step(DomainState& state, double dt, const InterfaceBoundarySeries& bc,
          const FarFieldSpec& far, const GasParams& gas,
          BoundaryFluxAccount* account = nullptr);

// Same update with a caller-supplied interface face flux (synchronized
// reference coupling).
void step_with_interface_flux(DomainState& state, double dt,
                              const ConsState& interface_flux,
                              const FarFieldSpec& far, const GasParams& gas,
                              BoundaryFluxAccount* account = nullptr);

// Half-step-evolved edge value of the interface-adjacent cell at its
// interface face (the reference coupling's half-RP input).
PrimState predict_interface_edge(const DomainState& state, double dt,
                                 const GasParams& gas);

}  // namespace cgrp
