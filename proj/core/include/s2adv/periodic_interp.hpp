#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace s2adv {

/// Position of a query inside a uniform periodic mesh s_j = j/N.
struct CellLocation {
  std::size_t cell;  ///< j, with the query in [s_j, s_{j+1}]
  double lambda;     ///< (x - s_j) N, in [0, 1]
};

/// Locates x (any real; wrapped periodically) on the mesh of size n.
///
/// Queries within `snap` (in cell units) of a node are moved onto it, so
/// characteristics that land on a node up to round-off reproduce the node
/// value exactly. A snapped query lands at lambda = 0 of the node's cell, or
/// at lambda = 1 of the previous cell when approached from below.
CellLocation locate_cell(double x, std::size_t n, double snap = 1e-9);

/// Periodic piecewise-linear interpolation of uniformly sampled data.
double interpolate_linear_periodic(std::span<const double> values, double x);

/// Shape-preserving periodic cubic Hermite interpolant on a uniform mesh.
///
/// Node slopes start from the centered three-point estimate and are limited
/// in the Fritsch-Carlson manner: zero at a local extremum of the data,
/// otherwise clipped to three times the smaller adjacent secant. Each cell's
/// cubic is therefore monotone and creates no new extrema.
class PeriodicMonotoneCubic {
 public:
  explicit PeriodicMonotoneCubic(std::vector<double> values);

  double operator()(double x) const;
  double evaluate(const CellLocation& where) const;

  std::span<const double> slopes() const { return slopes_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
  std::vector<double> slopes_;  // per unit of cell index, i.e. dy/dj
};

/// Four-point centered Lagrange cubic on a uniform periodic mesh (no limiting).
double interpolate_cubic_lagrange_periodic(std::span<const double> values, double x);

}  // namespace s2adv
