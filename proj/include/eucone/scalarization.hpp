#pragma once

// Angle-distance scalarization
//
//   G(x*) = max_{y in X}  sum_i (F_i(y) - F_i(x*)) - s sqrt(n) ||F(y) - F(x*)||
//         = max_{y}  sqrt(n) ||dF|| (cos(dF, r) - s),
//
// which is >= 0 (take y = x*) and vanishes exactly at the weak K(s)-optimal
// points. A root is strong K(s)-optimal when every maximizer has the same
// utility vector as x*.

#include "eucone/certificate.hpp"
#include "eucone/problem.hpp"
#include "eucone/types.hpp"

#include <string>
#include <vector>

namespace eucone {

/// Maximizers within this absolute distance of the maximum are ties.
inline constexpr double kArgmaxTieTol = 1e-9;
/// Utility distance below which a maximizer counts as F(y*) = F(x*).
inline constexpr double kUniqueUtilityTol = 1e-9;

struct ScalarizationResult {
  double value = 0.0;
  std::vector<std::string> argmax_ids;  // in decision order
  bool unique_in_utility = true;
};

/// Values of the inner objective for every y, in decision order.
Eigen::VectorXd inner_objective(const FiniteProblem& problem, std::size_t xstar, double s);
/// Same, for a reference utility vector that need not belong to the problem.
Eigen::VectorXd inner_objective(const FiniteProblem& problem, const UtilityVector& Fx, double s);

ScalarizationResult G_value(const FiniteProblem& problem, const std::string& xstar_id, double s);

/// Weak K(s)-optimality as G(x*) <= tol; the witness is a maximizer with G > tol.
Certificate weak_optimal(const FiniteProblem& problem, const std::string& xstar_id, double s,
                         double tol = kGeometryTol);

/// Strong K(s)-optimality: a root of G whose maximizers all share F(x*).
Certificate strong_optimal(const FiniteProblem& problem, const std::string& xstar_id, double s,
                           double tol = kGeometryTol);

/// Maximin scalarization max_y min_i (F_i(y) - F_i(x*)); zero iff x* is weak Pareto-optimal.
double G1_value(const FiniteProblem& problem, const std::string& xstar_id);

/// Root flags of G for every decision (G <= tol), pruned by the utility sum:
/// only competitors with a larger sum of utilities can make the inner objective positive.
std::vector<bool> weak_roots(const FiniteProblem& problem, double s, double tol = kGeometryTol);

}  // namespace eucone
