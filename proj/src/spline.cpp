#include "cgrp/spline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cgrp/errors.hpp"

namespace cgrp {

namespace {

// Thomas elimination; a is sub-, b main, c super-diagonal.
std::vector<double> solve_tridiag(std::vector<double> a, std::vector<double> b,
                                  std::vector<double> c,
                                  std::vector<double> r) {
  const int n = static_cast<int>(b.size());
  for (int i = 1; i < n; ++i) {
    const double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    r[i] -= w * r[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = r[n - 1] / b[n - 1];
  for (int i = n - 2; i >= 0; --i) x[i] = (r[i] - c[i] * x[i + 1]) / b[i];
  return x;
}

// Cyclic tridiagonal solve via the Sherman-Morrison rank-one update.
std::vector<double> solve_cyclic(const std::vector<double>& a,
                                 const std::vector<double>& b,
                                 const std::vector<double>& c,
                                 const std::vector<double>& r) {
  const int n = static_cast<int>(b.size());
  const double alpha = c[n - 1];  // wrap entry A[n-1][0]
  const double beta = a[0];       // wrap entry A[0][n-1]
  const double gamma = -b[0];

  std::vector<double> bb = b;
  bb[0] = b[0] - gamma;
  bb[n - 1] = b[n - 1] - alpha * beta / gamma;

  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = alpha;

  const auto x = solve_tridiag(a, bb, c, r);
  const auto z = solve_tridiag(a, bb, c, u);

  const double fact = (x[0] + beta * x[n - 1] / gamma) /
                      (1.0 + z[0] + beta * z[n - 1] / gamma);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = x[i] - fact * z[i];
  return out;
}

}  // namespace

PeriodicSpline::PeriodicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size())
    throw ValidationError("spline: node and value counts differ");
  if (x_.size() < 4)
    throw ValidationError("spline: need at least 4 nodes");
  for (size_t i = 0; i + 1 < x_.size(); ++i)
    if (!(x_[i] < x_[i + 1]))
      throw ValidationError("spline: nodes must increase strictly");
  for (double v : x_)
    if (!std::isfinite(v)) throw ValidationError("spline: non-finite node");
  for (double v : y_)
    if (!std::isfinite(v)) throw ValidationError("spline: non-finite value");
  if (y_.front() != y_.back())
    throw ValidationError(
        "spline: periodic closure needs equal first and last values");

  // Second derivatives at the n distinct nodes, cyclic coupling.
  const int n = static_cast<int>(x_.size()) - 1;
  std::vector<double> a(n), b(n), c(n), r(n);
  auto h = [&](int j) { return x_[j + 1] - x_[j]; };
  for (int j = 0; j < n; ++j) {
    const int jm = (j + n - 1) % n;
    const double hm = h(jm), hj = h(j);
    a[j] = hm / 6.0;
    b[j] = (hm + hj) / 3.0;
    c[j] = hj / 6.0;
    const double y_prev = y_[j == 0 ? n - 1 : j - 1];
    r[j] = (y_[j + 1] - y_[j]) / hj - (y_[j] - y_prev) / hm;
  }
  m_ = solve_cyclic(a, b, c, r);
  m_.push_back(m_.front());
}

int PeriodicSpline::segment(double x) const {
  const int j = static_cast<int>(
      std::upper_bound(x_.begin(), x_.end(), x) - x_.begin() - 1);
  return std::min(j, static_cast<int>(x_.size()) - 2);
}

double PeriodicSpline::operator()(double x) const {
  if (x < x_.front() || x > x_.back()) return 0.0;
  const int j = segment(x);
  if (x == x_[j]) return y_[j];
  const double hj = x_[j + 1] - x_[j];
  const double A = x_[j + 1] - x, B = x - x_[j];
  return m_[j] * A * A * A / (6.0 * hj) + m_[j + 1] * B * B * B / (6.0 * hj) +
         (y_[j] / hj - m_[j] * hj / 6.0) * A +
         (y_[j + 1] / hj - m_[j + 1] * hj / 6.0) * B;
}

double PeriodicSpline::deriv(double x) const {
  if (x < x_.front() || x >= x_.back()) return 0.0;
  const int j = segment(x);
  const double hj = x_[j + 1] - x_[j];
  const double A = x_[j + 1] - x, B = x - x_[j];
  return -m_[j] * A * A / (2.0 * hj) + m_[j + 1] * B * B / (2.0 * hj) +
         (y_[j + 1] - y_[j]) / hj - (m_[j + 1] - m_[j]) * hj / 6.0;
}

double PeriodicSpline::partial(int j, double x) const {
  const double hj = x_[j + 1] - x_[j];
  const double A = x_[j + 1] - x, B = x - x_[j];
  return m_[j] * (hj * hj * hj * hj - A * A * A * A) / (24.0 * hj) +
         m_[j + 1] * B * B * B * B / (24.0 * hj) +
         (y_[j] / hj - m_[j] * hj / 6.0) * (hj * hj - A * A) / 2.0 +
         (y_[j + 1] / hj - m_[j + 1] * hj / 6.0) * B * B / 2.0;
}

double PeriodicSpline::integral(double a, double b) const {
  if (!(b >= a)) throw ValidationError("spline integral: needs b >= a");
  const double lo = std::max(a, x_.front());
  const double hi = std::min(b, x_.back());
  if (!(hi > lo)) return 0.0;
  const int jl = segment(lo), jh = segment(hi);
  if (jl == jh) return partial(jl, hi) - partial(jl, lo);
  double sum = partial(jl, x_[jl + 1]) - partial(jl, lo);
  for (int j = jl + 1; j < jh; ++j) sum += partial(j, x_[j + 1]);
  sum += partial(jh, hi);
  return sum;
}

}  // namespace cgrp
