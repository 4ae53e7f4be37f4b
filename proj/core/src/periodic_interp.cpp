#include "s2adv/periodic_interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "s2adv/velocity.hpp"

namespace s2adv {

CellLocation locate_cell(double x, std::size_t n, double snap) {
  const double position = wrap_unit(x) * static_cast<double>(n);
  auto cell = static_cast<std::size_t>(std::floor(position));
  if (cell >= n) {
    cell = n - 1;
  }
  double lambda = position - static_cast<double>(cell);
  if (lambda < snap) {
    lambda = 0.0;
  } else if (lambda > 1.0 - snap) {
    lambda = 1.0;
  }
  return {cell, lambda};
}

double interpolate_linear_periodic(std::span<const double> values, double x) {
  const std::size_t n = values.size();
  const CellLocation at = locate_cell(x, n);
  const double lo = values[at.cell];
  const double hi = values[(at.cell + 1) % n];
  if (at.lambda == 1.0) {
    return hi;
  }
  return lo + at.lambda * (hi - lo);
}

PeriodicMonotoneCubic::PeriodicMonotoneCubic(std::vector<double> values)
    : values_(std::move(values)), slopes_(values_.size(), 0.0) {
  const std::size_t n = values_.size();
  if (n < 3) {
    throw std::invalid_argument("PeriodicMonotoneCubic: need at least three samples");
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double left = values_[k] - values_[(k + n - 1) % n];
    const double right = values_[(k + 1) % n] - values_[k];
    if (left * right <= 0.0) {
      slopes_[k] = 0.0;
      continue;
    }
    const double centered = 0.5 * (left + right);
    const double bound = 3.0 * std::min(std::abs(left), std::abs(right));
    slopes_[k] = std::copysign(std::min(std::abs(centered), bound), centered);
  }
}

double PeriodicMonotoneCubic::operator()(double x) const {
  return evaluate(locate_cell(x, values_.size()));
}

double PeriodicMonotoneCubic::evaluate(const CellLocation& where) const {
  const std::size_t n = values_.size();
  const std::size_t next = (where.cell + 1) % n;
  const double t = where.lambda;
  if (t == 0.0) {
    return values_[where.cell];
  }
  if (t == 1.0) {
    return values_[next];
  }
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * values_[where.cell] + h10 * slopes_[where.cell] + h01 * values_[next] +
         h11 * slopes_[next];
}

double interpolate_cubic_lagrange_periodic(std::span<const double> values, double x) {
  const std::size_t n = values.size();
  const CellLocation at = locate_cell(x, n);
  const double t = at.lambda;
  if (t == 0.0) {
    return values[at.cell];
  }
  if (t == 1.0) {
    return values[(at.cell + 1) % n];
  }
  const double fm1 = values[(at.cell + n - 1) % n];
  const double f0 = values[at.cell];
  const double f1 = values[(at.cell + 1) % n];
  const double f2 = values[(at.cell + 2) % n];
  // Nodes at -1, 0, 1, 2.
  const double wm1 = -t * (t - 1.0) * (t - 2.0) / 6.0;
  const double w0 = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
  const double w1 = -(t + 1.0) * t * (t - 2.0) / 2.0;
  const double w2 = (t + 1.0) * t * (t - 1.0) / 6.0;
  return wm1 * fm1 + w0 * f0 + w1 * f1 + w2 * f2;
}

}  // namespace s2adv
