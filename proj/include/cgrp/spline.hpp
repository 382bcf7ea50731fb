#pragma once

#include <vector>

namespace cgrp {

// Cubic spline through (x_i, y_i) with periodic end conditions
// (y.front() == y.back() required); identically zero outside the node
// range.  Used for the tabulated outtake schedules and seeded density
// profiles.
class PeriodicSpline {
 public:
  PeriodicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  // One-sided derivative from the right (zero outside the node range).
  double deriv(double x) const;
  // Exact integral over [a, b], honoring the zero extension.
  double integral(double a, double b) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }
  const std::vector<double>& nodes() const { return x_; }

 private:
  std::vector<double> x_, y_, m_;  // m_: second derivatives, m_[n] == m_[0]

  int segment(double x) const;
  // Antiderivative within segment j measured from its left node.
  double partial(int j, double x) const;
};

}  // namespace cgrp
