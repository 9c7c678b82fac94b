#include "eucone/scalarization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eucone {

Eigen::VectorXd inner_objective(const FiniteProblem& problem, std::size_t xstar, double s) {
  return inner_objective(problem, problem[xstar].F, s);
}

Eigen::VectorXd inner_objective(const FiniteProblem& problem, const UtilityVector& Fx, double s) {
  require_valid_s(s);
  if (Fx.size() != problem.n()) throw DimensionError("inner_objective: reference has wrong dimension");
  const Matrix& U = problem.utilities();
  const Matrix D = U.colwise() - Fx;
  const double scale = s * std::sqrt(static_cast<double>(problem.n()));
  return (D.colwise().sum() - scale * D.colwise().norm()).transpose();
}

ScalarizationResult G_value(const FiniteProblem& problem, const std::string& xstar_id, double s) {
  const std::size_t xi = problem.index_of(xstar_id);
  const Eigen::VectorXd values = inner_objective(problem, xi, s);

  ScalarizationResult result;
  result.value = values.maxCoeff();
  const UtilityVector& Fx = problem[xi].F;
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    if (values[j] < result.value - kArgmaxTieTol) continue;
    const Decision& y = problem[static_cast<std::size_t>(j)];
    result.argmax_ids.push_back(y.id);
    if ((y.F - Fx).norm() > kUniqueUtilityTol) result.unique_in_utility = false;
  }
  return result;
}

Certificate weak_optimal(const FiniteProblem& problem, const std::string& xstar_id, double s,
                         double tol) {
  const ScalarizationResult g = G_value(problem, xstar_id, s);
  Certificate cert;
  cert.test = "scalarization-weak";
  cert.add("G", g.value);
  if (g.value <= tol) {
    cert.verdict = Verdict::Optimal;
    return cert;
  }
  cert.verdict = Verdict::NotOptimal;
  cert.witness_id = g.argmax_ids.front();
  cert.reason = "a competitor improves through the interior of the cone";
  return cert;
}

Certificate strong_optimal(const FiniteProblem& problem, const std::string& xstar_id, double s,
                           double tol) {
  const ScalarizationResult g = G_value(problem, xstar_id, s);
  Certificate cert;
  cert.test = "scalarization-strong";
  cert.add("G", g.value);
  cert.add("argmax_count", static_cast<double>(g.argmax_ids.size()));
  if (g.value > tol) {
    cert.verdict = Verdict::NotOptimal;
    cert.witness_id = g.argmax_ids.front();
    cert.reason = "not weak optimal";
    return cert;
  }
  if (!g.unique_in_utility) {
    const UtilityVector& Fx = problem.at(xstar_id).F;
    for (const std::string& id : g.argmax_ids) {
      if ((problem.at(id).F - Fx).norm() > kUniqueUtilityTol) {
        cert.witness_id = id;
        break;
      }
    }
    cert.verdict = Verdict::NotOptimal;
    cert.reason = "maximizer with a different utility vector (boundary improvement)";
    return cert;
  }
  cert.verdict = Verdict::Optimal;
  return cert;
}

double G1_value(const FiniteProblem& problem, const std::string& xstar_id) {
  const Matrix& U = problem.utilities();
  const Matrix D = U.colwise() - U.col(static_cast<Eigen::Index>(problem.index_of(xstar_id)));
  return D.colwise().minCoeff().maxCoeff();
}

std::vector<bool> weak_roots(const FiniteProblem& problem, double s, double tol) {
  require_valid_s(s);
  const Matrix& U = problem.utilities();
  const Eigen::Index m = U.cols();
  const Eigen::VectorXd sums = U.colwise().sum().transpose();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return sums[a] > sums[b]; });

  const double scale = s * std::sqrt(static_cast<double>(problem.n()));
  std::vector<bool> roots(static_cast<std::size_t>(m), true);
  for (Eigen::Index x = 0; x < m; ++x) {
    for (Eigen::Index y : order) {
      // Inner objective <= sum difference, so once sums stop exceeding by tol nothing can.
      if (sums[y] - sums[x] <= tol) break;
      const double value = (sums[y] - sums[x]) - scale * (U.col(y) - U.col(x)).norm();
      if (value > tol) {
        roots[static_cast<std::size_t>(x)] = false;
        break;
      }
    }
  }
  return roots;
}

}  // namespace eucone
