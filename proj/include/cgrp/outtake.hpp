#pragma once

#include <optional>
#include <vector>

#include "cgrp/spline.hpp"

namespace cgrp {

// Mass outtake schedule at the interface.  Tabulated profiles vanish
// identically outside their node range; node values must be nonnegative
// (a spline may still undershoot between nodes, which the interface solver
// rejects at run time).
class OuttakeProfile {
 public:
  static OuttakeProfile constant(double value);
  static OuttakeProfile piecewise_linear(std::vector<double> t,
                                         std::vector<double> e);
  static OuttakeProfile periodic_spline(std::vector<double> t,
                                        std::vector<double> e);

  double value(double t) const;
  // One-sided derivative from the right: what a window starting at t sees.
  double rate_right(double t) const;
  // Exact integral of value() over [t0, t1].
  double integral(double t0, double t1) const;
  // Times where rate_right jumps; window ends must snap to these.
  const std::vector<double>& breakpoints() const { return breaks_; }

 private:
  OuttakeProfile() = default;

  enum class Kind { constant, linear, spline };
  Kind kind_ = Kind::constant;
  double const_value_ = 0.0;
  std::vector<double> t_, e_;
  std::vector<double> breaks_;
  std::optional<PeriodicSpline> spline_;
};

}  // namespace cgrp
