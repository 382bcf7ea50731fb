#include "cgrp/outtake.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cgrp/errors.hpp"

namespace cgrp {

namespace {

void validate_table(const std::vector<double>& t, const std::vector<double>& e,
                    size_t min_nodes) {
  if (t.size() != e.size())
    throw ValidationError("outtake table: time and value counts differ");
  if (t.size() < min_nodes)
    throw ValidationError("outtake table: too few nodes");
  for (size_t i = 0; i + 1 < t.size(); ++i)
    if (!(t[i] < t[i + 1]))
      throw ValidationError("outtake table: times must increase strictly");
  for (double v : e) {
    if (!std::isfinite(v) || v < 0.0)
      throw ValidationError("outtake table: values must be finite and >= 0");
  }
}

}  // namespace

OuttakeProfile OuttakeProfile::constant(double value) {
  if (!std::isfinite(value) || value < 0.0)
    throw ValidationError("constant outtake must be finite and >= 0, got " +
                          std::to_string(value));
  OuttakeProfile p;
  p.kind_ = Kind::constant;
  p.const_value_ = value;
  return p;
}

OuttakeProfile OuttakeProfile::piecewise_linear(std::vector<double> t,
                                                std::vector<double> e) {
  validate_table(t, e, 2);
  OuttakeProfile p;
  p.kind_ = Kind::linear;
  p.breaks_ = t;
  p.t_ = std::move(t);
  p.e_ = std::move(e);
  return p;
}

OuttakeProfile OuttakeProfile::periodic_spline(std::vector<double> t,
                                               std::vector<double> e) {
  validate_table(t, e, 4);
  OuttakeProfile p;
  p.kind_ = Kind::spline;
  // The schedule is smooth across interior nodes; only the switch to the
  // zero extension breaks the rate.
  p.breaks_ = {t.front(), t.back()};
  p.spline_.emplace(std::move(t), std::move(e));
  return p;
}

double OuttakeProfile::value(double t) const {
  switch (kind_) {
    case Kind::constant:
      return const_value_;
    case Kind::linear: {
      if (t < t_.front() || t > t_.back()) return 0.0;
      const int j = std::min<int>(
          static_cast<int>(std::upper_bound(t_.begin(), t_.end(), t) -
                           t_.begin() - 1),
          static_cast<int>(t_.size()) - 2);
      const double s = (e_[j + 1] - e_[j]) / (t_[j + 1] - t_[j]);
      return e_[j] + s * (t - t_[j]);
    }
    case Kind::spline: {
      const double v = (*spline_)(t);
      // Shave round-off dust at zero-valued nodes so the interface solver
      // never sees a spurious negative.
      return (v < 0.0 && v > -1e-12) ? 0.0 : v;
    }
  }
  return 0.0;
}

double OuttakeProfile::rate_right(double t) const {
  switch (kind_) {
    case Kind::constant:
      return 0.0;
    case Kind::linear: {
      if (t < t_.front() || t >= t_.back()) return 0.0;
      const int j = std::min<int>(
          static_cast<int>(std::upper_bound(t_.begin(), t_.end(), t) -
                           t_.begin() - 1),
          static_cast<int>(t_.size()) - 2);
      return (e_[j + 1] - e_[j]) / (t_[j + 1] - t_[j]);
    }
    case Kind::spline:
      return spline_->deriv(t);
  }
  return 0.0;
}

double OuttakeProfile::integral(double t0, double t1) const {
  if (!(t1 >= t0))
    throw ValidationError("outtake integral: needs t1 >= t0");
  switch (kind_) {
    case Kind::constant:
      return const_value_ * (t1 - t0);
    case Kind::linear: {
      const double lo = std::max(t0, t_.front());
      const double hi = std::min(t1, t_.back());
      if (!(hi > lo)) return 0.0;
      double sum = 0.0;
      for (size_t j = 0; j + 1 < t_.size(); ++j) {
        const double a = std::max(lo, t_[j]);
        const double b = std::min(hi, t_[j + 1]);
        if (!(b > a)) continue;
        const double s = (e_[j + 1] - e_[j]) / (t_[j + 1] - t_[j]);
        const double ya = e_[j] + s * (a - t_[j]);
        const double yb = e_[j] + s * (b - t_[j]);
        sum += 0.5 * (ya + yb) * (b - a);
      }
      return sum;
    }
    case Kind::spline:
      return spline_->integral(t0, t1);
  }
  return 0.0;
}

}  // namespace cgrp
