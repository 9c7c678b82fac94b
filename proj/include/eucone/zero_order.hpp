#pragma once

// Zero-order certificates.
//
// Cross-product tests for the largest cone K_U = K(1/sqrt(n)), written in the
// utility increments d_i = F_i(x) - F_i(x*):
//   weak:   every x with sum d > 0 has sum_{i != j} d_i d_j <= 0;
//   strong: every x with F(x) != F(x*) and sum d >= 0 has sum_{i != j} d_i d_j < 0.
// Weighted-sum maximizers with a weight interior to the dual cone
// K(sqrt(1 - s^2)) are K(s)-optimal (sufficient only).

#include "eucone/certificate.hpp"
#include "eucone/cone.hpp"
#include "eucone/problem.hpp"

#include <string>
#include <vector>

namespace eucone {

struct DeltaVector {
  UtilityVector values;
  double sum = 0.0;
  double cross = 0.0;  // sum over ordered pairs i != j of d_i d_j

  static DeltaVector from(UtilityVector d);
};

DeltaVector delta(const FiniteProblem& problem, const std::string& xstar_id,
                  const std::string& x_id);

/// Three-valued: Marginal when the only offending competitors sit inside the tolerance band.
Certificate weak_upper_optimal(const FiniteProblem& problem, const std::string& xstar_id,
                               double tol = kGeometryTol);
Certificate strong_upper_optimal(const FiniteProblem& problem, const std::string& xstar_id,
                                 double tol = kGeometryTol);

/// Classification of a weight against the dual cone K(r, sqrt(1 - s^2)).
Membership validate_weight(const UtilityVector& lambda, double s, int n,
                           double tol = kGeometryTol);

struct WeightedScalarization {
  Membership weight;
  double value = 0.0;
  std::vector<std::string> maximizer_ids;
  /// Optimal when the weight is interior to the dual cone, Unsupported otherwise.
  Verdict claim = Verdict::Unsupported;
};

/// All maximizers of <lambda, F(x)>; ties within 1e-9 on the normalized weight.
WeightedScalarization weighted_scalarize(const FiniteProblem& problem,
                                         const UtilityVector& lambda, double s,
                                         double tol = kGeometryTol);

}  // namespace eucone
