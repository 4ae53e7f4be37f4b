#include "s2adv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "s2adv/error.hpp"

namespace s2adv {

namespace {

void require_same_mesh(const SphereCurve& a, const SphereCurve& b, const char* what) {
  if (a.size() != b.size() || a.size() == 0) {
    std::ostringstream msg;
    msg << what << ": curves have " << a.size() << " and " << b.size() << " nodes";
    throw MeshMismatch(msg.str());
  }
}

}  // namespace

double error_l1(const SphereCurve& curve, const SphereCurve& exact) {
  require_same_mesh(curve, exact, "error_l1");
  double sum = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    sum += (curve[i] - exact[i]).lpNorm<1>();
  }
  return sum * curve.spacing();
}

double error_l2(const SphereCurve& curve, const SphereCurve& exact) {
  require_same_mesh(curve, exact, "error_l2");
  double sum = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    sum += (curve[i] - exact[i]).squaredNorm();
  }
  return std::sqrt(sum * curve.spacing());
}

bool default_kink_mask(double z_exact) { return z_exact > 0.5; }

double masked_error(const SphereCurve& curve, const SphereCurve& exact, const ExactMask& mask,
                    ErrorNorm norm) {
  require_same_mesh(curve, exact, "masked_error");
  double sum = 0.0;
  std::size_t selected = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (!mask(exact[i].z())) {
      continue;
    }
    ++selected;
    const Vec3 diff = curve[i] - exact[i];
    sum += norm == ErrorNorm::l1 ? diff.lpNorm<1>() : diff.squaredNorm();
  }
  if (selected == 0) {
    throw DomainError("masked_error: mask selects no nodes");
  }
  sum *= curve.spacing();
  return norm == ErrorNorm::l1 ? sum : std::sqrt(sum);
}

ConvergenceSummary convergence_order(const std::vector<ErrorSample>& rows) {
  if (rows.size() < 2) {
    throw std::invalid_argument("convergence_order: need at least two rows");
  }
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k].n <= rows[k - 1].n) {
      throw std::invalid_argument("convergence_order: mesh sizes must increase strictly");
    }
  }
  ConvergenceSummary out;
  out.order.resize(rows.size());
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double e0 = rows[k - 1].error;
    const double e1 = rows[k].error;
    if (e0 > 0.0 && e1 > 0.0) {
      out.order[k] = std::log(e0 / e1) /
                     std::log(static_cast<double>(rows[k].n) / static_cast<double>(rows[k - 1].n));
    }
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& row : rows) {
    if (row.error > 0.0 && std::isfinite(row.error)) {
      xs.push_back(std::log(static_cast<double>(row.n)));
      ys.push_back(std::log(row.error));
    } else {
      out.excluded.push_back(row.n);
    }
  }
  if (xs.size() >= 2) {
    const double count = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      mx += xs[k];
      my += ys[k];
    }
    mx /= count;
    my /= count;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      sxy += (xs[k] - mx) * (ys[k] - my);
      sxx += (xs[k] - mx) * (xs[k] - mx);
    }
    out.slope = -sxy / sxx;
  }
  return out;
}

void ErrorReport::finalize() {
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.n < b.n; });
  if (rows.size() < 2) {
    l1 = {};
    l2 = {};
    l1.order.resize(rows.size());
    l2.order.resize(rows.size());
    return;
  }
  std::vector<ErrorSample> e1;
  std::vector<ErrorSample> e2;
  for (const auto& row : rows) {
    e1.push_back({row.n, row.e1});
    e2.push_back({row.n, row.e2});
  }
  l1 = convergence_order(e1);
  l2 = convergence_order(e2);
}

std::vector<std::size_t> find_jumps(const SphereCurve& exact, double ratio) {
  const std::size_t n = exact.size();
  std::vector<double> chords(n);
  for (std::size_t k = 0; k < n; ++k) {
    chords[k] = (exact[(k + 1) % n] - exact[k]).norm();
  }
  std::vector<double> sorted = chords;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(n / 2), sorted.end());
  const double median = sorted[n / 2];
  std::vector<std::size_t> jumps;
  for (std::size_t k = 0; k < n; ++k) {
    if (chords[k] > ratio * median && chords[k] > 0.0) {
      jumps.push_back(k);
    }
  }
  return jumps;
}

std::vector<std::size_t> transition_width(const SphereCurve& curve, const SphereCurve& exact,
                                          double threshold, std::size_t window) {
  require_same_mesh(curve, exact, "transition_width");
  const std::vector<std::size_t> jumps = find_jumps(exact);
  if (jumps.empty()) {
    throw DomainError("transition_width: exact solution has no jump discontinuity");
  }
  const std::size_t n = exact.size();
  std::vector<std::size_t> widths;
  for (std::size_t j = 0; j < jumps.size(); ++j) {
    const std::size_t k = jumps[j];
    // Half the distance (in nodes) to the nearest other jump, measured on the circle.
    std::size_t reach = window;
    for (std::size_t other : jumps) {
      if (other == k) {
        continue;
      }
      const std::size_t gap = std::min((other + n - k) % n, (k + n - other) % n);
      reach = std::min(reach, gap / 2);
    }
    const double magnitude = (exact[(k + 1) % n] - exact[k]).norm();
    const double limit = threshold * magnitude;
    std::size_t count = 0;
    // Nodes k-reach+1 .. k on the left and k+1 .. k+reach on the right.
    for (std::size_t offset = 0; offset < reach; ++offset) {
      const std::size_t left = (k + n - offset) % n;
      const std::size_t right = (k + 1 + offset) % n;
      if ((curve[left] - exact[left]).norm() > limit) {
        ++count;
      }
      if ((curve[right] - exact[right]).norm() > limit) {
        ++count;
      }
    }
    widths.push_back(count);
  }
  return widths;
}

}  // namespace s2adv
