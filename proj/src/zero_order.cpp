#include "eucone/zero_order.hpp"

#include <algorithm>
#include <cmath>

namespace eucone {

DeltaVector DeltaVector::from(UtilityVector d) {
  DeltaVector out;
  out.sum = d.sum();
  double cross = 0.0;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    for (Eigen::Index j = 0; j < d.size(); ++j) {
      if (i != j) cross += d[i] * d[j];
    }
  }
  out.cross = cross;
  out.values = std::move(d);
  return out;
}

DeltaVector delta(const FiniteProblem& problem, const std::string& xstar_id,
                  const std::string& x_id) {
  return DeltaVector::from(problem.at(x_id).F - problem.at(xstar_id).F);
}

namespace {

Certificate cross_product_test(const FiniteProblem& problem, const std::string& xstar_id,
                               double tol, bool strong) {
  const std::size_t xi = problem.index_of(xstar_id);
  const UtilityVector& Fx = problem[xi].F;

  Certificate cert;
  cert.test = strong ? "cross-product-strong" : "cross-product-weak";
  std::optional<std::size_t> violation;
  std::optional<std::size_t> marginal;
  double worst_cross = -std::numeric_limits<double>::infinity();
  std::size_t screened = 0;

  for (std::size_t j = 0; j < problem.size(); ++j) {
    const DeltaVector d = DeltaVector::from(problem[j].F - Fx);
    bool screened_in = false;
    if (strong) {
      screened_in = d.values.lpNorm<Eigen::Infinity>() > kUtilityEqualTol && d.sum >= -tol;
    } else {
      screened_in = d.sum > tol;
    }
    if (!screened_in) continue;
    ++screened;
    worst_cross = std::max(worst_cross, d.cross);
    // weak requires cross <= 0, strong requires cross < 0; both with a band of width tol.
    if (d.cross > tol) {
      if (!violation) violation = j;
    } else if (strong ? d.cross >= -tol : d.cross > -tol) {
      if (!marginal) marginal = j;
    }
  }

  cert.add("screened", static_cast<double>(screened));
  if (screened > 0) cert.add("max_cross", worst_cross);
  if (violation) {
    cert.verdict = Verdict::NotOptimal;
    cert.witness_id = problem[*violation].id;
    cert.reason = "competitor with positive cross term";
  } else if (marginal) {
    cert.verdict = Verdict::Marginal;
    cert.witness_id = problem[*marginal].id;
    cert.reason = "cross term inside the tolerance band";
  } else {
    cert.verdict = Verdict::Optimal;
  }
  return cert;
}

}  // namespace

Certificate weak_upper_optimal(const FiniteProblem& problem, const std::string& xstar_id,
                               double tol) {
  return cross_product_test(problem, xstar_id, tol, false);
}

Certificate strong_upper_optimal(const FiniteProblem& problem, const std::string& xstar_id,
                                 double tol) {
  return cross_product_test(problem, xstar_id, tol, true);
}

Membership validate_weight(const UtilityVector& lambda, double s, int n, double tol) {
  if (lambda.size() != n) {
    throw DimensionError("weight has length " + std::to_string(lambda.size()) + ", expected " +
                         std::to_string(n));
  }
  return classify(dual(EuclideanCone::family(n, s)), lambda, tol);
}

WeightedScalarization weighted_scalarize(const FiniteProblem& problem,
                                         const UtilityVector& lambda, double s, double tol) {
  WeightedScalarization out;
  out.weight = validate_weight(lambda, s, problem.n(), tol);
  // Ties are judged on the unit weight so that lambda and c*lambda agree.
  const double norm = lambda.norm();
  const UtilityVector unit = norm > kZeroTol ? UtilityVector(lambda / norm) : lambda;
  const Eigen::VectorXd scores = (unit.transpose() * problem.utilities()).transpose();
  const double best = scores.maxCoeff();
  for (Eigen::Index j = 0; j < scores.size(); ++j) {
    if (scores[j] >= best - 1e-9) out.maximizer_ids.push_back(problem[static_cast<std::size_t>(j)].id);
  }
  out.value = lambda.dot(problem.at(out.maximizer_ids.front()).F);
  out.claim = out.weight.interior() ? Verdict::Optimal : Verdict::Unsupported;
  return out;
}

}  // namespace eucone
