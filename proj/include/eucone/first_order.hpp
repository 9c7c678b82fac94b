#pragma once

// First-order necessary conditions for smooth problems.
//
// Weak optimal pair (x*, y*): x* is a root of G and y* maximizes the inner
// objective sum_i d_i - s sqrt(n) ||d||, d = F(y) - F(x*). At an interior y*
//   eq15:  sum_i F_i'(y*) [ sum_j d_j - s^2 n d_i ] = 0
//   eq16:  sum_i d_i - s sqrt(n) ||d|| = 0
//   eq19:  sum_i F_i'(y*) sum_{j != i} d_j = 0          (s = 1/sqrt(n))
// and, at a local weak optimum x*, some non-zero lambda in K(sqrt(1 - s^2))
// annihilates the Jacobian: sum_i lambda_i F_i'(x*) = 0.

#include "eucone/cone.hpp"
#include "eucone/problem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eucone {

/// Analytic Jacobian when registered, central differences otherwise.
/// Throws DomainError unless x is strictly inside the box.
Matrix gradient(const SmoothProblem& problem, const DecisionPoint& x);

/// Central differences with h = max(1e-6, 1e-7 (1 + |x_j|)).
Matrix finite_difference_jacobian(const SmoothProblem& problem, const DecisionPoint& x);

struct GradientCheck {
  bool passed = true;
  double max_relative_error = 0.0;  // ||J_analytic - J_fd||_F / max(1, ||J_analytic||_F)
  std::size_t points = 0;
};

/// Compares the analytic Jacobian against central differences at seeded interior points.
GradientCheck check_jacobian(const SmoothProblem& problem, std::size_t points, std::uint64_t seed,
                             double rel_tol = 1e-5);

struct PairResidual {
  double eq15 = 0.0;
  double eq16 = 0.0;
  std::optional<double> eq19;  // only at s = 1/sqrt(n)
  /// Norm of the stationarity vector sum_i F_i' - s sqrt(n) sum_j F_j' d_j / ||d||;
  /// absent for degenerate pairs.
  std::optional<double> eq17;
  /// ||eq15 vector - (sum d) * eq17 vector||; vanishes wherever eq16 does.
  std::optional<double> substitution_gap;
  bool degenerate = false;  // ||F(y*) - F(x*)|| <= 1e-9
  Eigen::VectorXd eq15_vector;
  Eigen::VectorXd eq19_vector;
};

/// Throws DomainError when y* is not interior.
PairResidual pair_residuals(const SmoothProblem& problem, const DecisionPoint& xstar,
                            const DecisionPoint& ystar, double s);

struct MultiplierCertificate {
  bool exists = false;
  std::optional<UtilityVector> lambda;  // unit norm
  double axial_projection_norm = 0.0;   // ||P_N r||
  double threshold = 0.0;               // sqrt(1 - s^2)
  int gradient_matrix_rank = 0;
  bool rank_ambiguous = false;  // a singular value within a factor 10 of the cut-off
  double stationarity_residual = 0.0;  // ||J^T lambda||
};

/// Null space of J^T from the SVD of the k x n transposed Jacobian (cut-off
/// 1e-10 of the largest singular value); lambda = P_N r / ||P_N r|| is the unit
/// vector of the null space closest to the ideal direction.
MultiplierCertificate multiplier_from_jacobian(const Matrix& jacobian, double s,
                                               double tol = kGeometryTol);

MultiplierCertificate multiplier_exists(const SmoothProblem& problem, const DecisionPoint& xstar,
                                        double s, double tol = kGeometryTol);

/// Orthonormal basis (columns) of { lambda : J^T lambda = 0 } plus rank information.
struct NullSpace {
  Matrix basis;
  int rank = 0;
  bool ambiguous = false;
};
NullSpace left_null_space(const Matrix& jacobian);

/// Inner objective of the scalarization at a continuous point y.
double pair_objective(const SmoothProblem& problem, const UtilityVector& Fx,
                      const DecisionPoint& y, double s);

/// Coordinate pattern search for the maximum of the inner objective, kept strictly
/// inside the box; only strict improvements are accepted.
DecisionPoint refine_maximizer(const SmoothProblem& problem, const UtilityVector& Fx,
                               DecisionPoint start, double s, double initial_step);

enum class PairStatus {
  Located,       // non-degenerate interior pair after refinement
  Inapplicable,  // best competing maximizer lies on the box boundary
  Rejected,      // refinement found a positive inner objective: x* is not a root
};

struct WeakPair {
  std::string xstar_id;
  std::string ystar_id;  // grid maximizer before refinement
  DecisionPoint xstar;
  DecisionPoint ystar;   // refined
  double refined_value = 0.0;
  PairStatus status = PairStatus::Located;
  PairResidual residual;
};

/// Scans the grid roots of G; for every root with a tied maximizer whose utility
/// differs, refines it locally and evaluates the residuals. `grid` must be a
/// discretization of `problem` (decision points filled in).
std::vector<WeakPair> locate_weak_pairs(const SmoothProblem& problem, const FiniteProblem& grid,
                                        double s, double tol = kGeometryTol);

/// Best competing maximizer for a single x*: refined pair, or nullopt when the
/// maximizer is x* itself (in utility).
std::optional<WeakPair> best_pair_for(const SmoothProblem& problem, const FiniteProblem& grid,
                                      std::size_t xstar_index, double s,
                                      double tol = kGeometryTol);
/// Same for an arbitrary decision point x* of the box; competitors come from the grid.
std::optional<WeakPair> best_pair_for(const SmoothProblem& problem, const FiniteProblem& grid,
                                      const DecisionPoint& xstar, std::string xstar_id, double s,
                                      double tol = kGeometryTol);

struct LocalCertificate {
  bool certified = true;
  std::size_t evaluations = 0;
  std::optional<DecisionPoint> witness;  // point improving through Int K(s)
};

/// Dense local sampling of weak K(s)-optimality: `directions` unit directions
/// (evenly spaced with a seeded phase when k = 2, Gaussian otherwise) and radii
/// radius * 2^-j, j < radii; any F(x + t d) - F(x) interior to K(s) refutes.
LocalCertificate certify_local_weak_optimal(const SmoothProblem& problem, const DecisionPoint& x,
                                            double s, double radius = 1e-2,
                                            std::size_t directions = 1000,
                                            std::uint64_t seed = 1, int radii = 12);

}  // namespace eucone
