#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgrp/driver.hpp"

namespace cgrp {

// Additive density perturbation: a periodic cubic spline through the nodes,
// identically zero outside their range.
struct BumpSpec {
  std::vector<double> nodes, values;
};

struct DomainConfig {
  double x_min = 0.0, x_max = 0.0;
  int base_cells = 0;
  PrimState state{1.0, 0.0, 1.0};
  std::optional<BumpSpec> rho_bump;
};

struct OuttakeSpec {
  enum class Kind { constant, piecewise_linear, periodic_spline };
  Kind kind = Kind::constant;
  double value = 0.0;                  // constant profiles
  std::vector<double> nodes, values;   // tabulated profiles
};

struct SimConfig {
  GasParams gas;
  DomainConfig left, right;
  OuttakeSpec outtake;
  double t_end = 0.0;
  double c_cfl = 0.2;
  int level = 0;
  double snapshot_interval = 0.0;  // 0 keeps only initial and final frames
  std::string output_dir = ".";
};

// Sectioned key = value format, sections [gas] [left] [right] [interface]
// [time] and optional [output]; '#' starts a comment.  Unknown sections or
// keys raise ParseError with the line number; invariant violations raise
// ValidationError naming the field.
SimConfig parse_config(const std::string& text);
SimConfig load_config(const std::string& path);

OuttakeProfile make_outtake(const OuttakeSpec& spec);

// Both domains at 2^level * base_cells resolution with exact initial cell
// averages; far fields pinned to the initial far-end states.
TwoDomainState build_state(const SimConfig& cfg, int level);

// Interior snapshot times implied by snapshot_interval (exclusive of 0 and
// t_end, which the driver always emits).
std::vector<double> snapshot_schedule(const SimConfig& cfg);

}  // namespace cgrp
