#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "s2adv/curve.hpp"

namespace s2adv {

/// Delta s * sum_i |p_i - q_i|_1 (left-endpoint rule on the periodic mesh).
double error_l1(const SphereCurve& curve, const SphereCurve& exact);
/// sqrt(Delta s * sum_i |p_i - q_i|_2^2)
double error_l2(const SphereCurve& curve, const SphereCurve& exact);

/// Predicate on the z component of the exact solution at a node.
using ExactMask = std::function<bool(double z_exact)>;

/// Default mask: z_exact > 0.5, the region away from the kinks of |sin 4 pi s|.
bool default_kink_mask(double z_exact);

enum class ErrorNorm { l1, l2 };

/// The L1 (or L2) error restricted to nodes where mask(z_exact) holds. The
/// weight stays Delta s, so the masked L1 error never exceeds error_l1.
/// Throws DomainError if no node is selected.
double masked_error(const SphereCurve& curve, const SphereCurve& exact,
                    const ExactMask& mask = default_kink_mask, ErrorNorm norm = ErrorNorm::l1);

/// Pairwise and least-squares convergence orders of an error sequence.
struct ConvergenceSummary {
  /// order[k] relates rows k-1 and k (order[0] is always empty);
  /// log(E_{k-1}/E_k) / log(N_k/N_{k-1}).
  std::vector<std::optional<double>> order;
  /// Negated least-squares slope of log E against log N over rows with E > 0.
  std::optional<double> slope;
  /// Mesh sizes dropped because their error was not positive.
  std::vector<std::size_t> excluded;
};

struct ErrorSample {
  std::size_t n;
  double error;
};

/// Rows must have strictly increasing N; throws std::invalid_argument
/// otherwise or when fewer than two rows are given.
ConvergenceSummary convergence_order(const std::vector<ErrorSample>& rows);

/// Per-mesh E1/E2 errors with their convergence orders.
struct ErrorReport {
  struct Row {
    std::size_t n;
    double e1;
    double e2;
  };
  std::vector<Row> rows;
  ConvergenceSummary l1;
  ConvergenceSummary l2;

  /// Sorts rows by N and recomputes both summaries.
  void finalize();
};

/// Indices k such that the exact curve jumps between node k and k+1 (mod N).
///
/// A jump is a chord |q_{k+1} - q_k| longer than `ratio` times the median
/// chord of the curve.
std::vector<std::size_t> find_jumps(const SphereCurve& exact, double ratio = 10.0);

/// Number of nodes around each jump of `exact` whose pointwise error
/// |p_i - q_i|_2 exceeds threshold * |jump|. Nodes are examined within a
/// window of `window` nodes on each side of the jump (limited to half the
/// gap to the neighboring jumps). Throws DomainError if `exact` has no jump.
std::vector<std::size_t> transition_width(const SphereCurve& curve, const SphereCurve& exact,
                                          double threshold, std::size_t window = 16);

}  // namespace s2adv
