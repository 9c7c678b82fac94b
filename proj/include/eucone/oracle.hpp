#pragma once

// Brute-force ground truth straight from the optimality definitions:
//   strong: no x with F(x) != F(x*) and F(x) - F(x*) in K,
//   weak:   no x with F(x) - F(x*) in Int K,
// plus componentwise (Pareto) dominance, the nesting of optimal sets along the
// cone family, and a sampled check of the dual-cone formula.

#include "eucone/cone.hpp"
#include "eucone/problem.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace eucone {

/// Pareto improvement with tolerance on the unit increment: weak needs every
/// component > tol*||d||, strong needs every component >= -tol*||d|| and d != 0.
bool pareto_improvement(const UtilityVector& from, const UtilityVector& to, OptimalityMode mode,
                        double tol = kGeometryTol);

struct OptimalSetReport {
  double s = 0.0;
  OptimalityMode mode = OptimalityMode::Strong;
  std::vector<std::string> optimal_ids;  // sorted
  std::vector<std::string> pareto_ids;   // sorted
  std::chrono::nanoseconds elapsed{0};
};

OptimalSetReport brute_force_optimal_set(const FiniteProblem& problem, double s,
                                         OptimalityMode mode, double tol = kGeometryTol);

/// Per-decision verdicts of the pairwise scan, in decision order.
std::vector<bool> brute_force_flags(const FiniteProblem& problem, double s, OptimalityMode mode,
                                    double tol = kGeometryTol);
std::vector<bool> pareto_flags(const FiniteProblem& problem, OptimalityMode mode,
                               double tol = kGeometryTol);

struct InclusionViolation {
  std::string subset;    // label of the set that should be contained, e.g. "s=0.57735"
  std::string superset;
  std::string id;        // member of subset missing from superset
};

struct NestingReport {
  OptimalityMode mode = OptimalityMode::Strong;
  std::vector<double> s_grid;
  std::vector<std::size_t> sizes;  // |X*(s)| per grid value
  std::size_t upper_size = 0;      // |X*_U|
  std::size_t pareto_size = 0;     // |X*_PO|
  std::size_t lower_size = 0;      // |X*_L|
  std::vector<InclusionViolation> violations;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks X*(s2) within X*(s1) for s1 > s2 on the grid, and X*_U within X*_PO within X*_L.
/// Throws DomainError on an empty or unsorted grid; values outside the family interval warn.
NestingReport nesting_check(const FiniteProblem& problem, const std::vector<double>& s_grid,
                            OptimalityMode mode, double tol = kGeometryTol);

/// Evenly spaced grid over the admissible interval (all equal when n = 2).
std::vector<double> default_s_grid(int n, int points = 9);

struct DualCheckReport {
  int n = 0;
  double s = 0.0;
  double dual_s = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t pairs_checked = 0;
  double min_inner_product = 0.0;
  std::size_t violations = 0;  // member pairs with <x,y> < -1e-9
  double margin = 0.05;
  std::size_t outside_checked = 0;
  std::size_t counterexamples_found = 0;

  bool ok() const noexcept {
    return violations == 0 && counterexamples_found == outside_checked;
  }
};

/// Samples members of the cone and of its dual and checks <x,y> >= 0 on member pairs
/// (random pairings plus the worst boundary member built in the plane of x and the
/// axis), then draws x with cos(x, axis) = sqrt(1 - s^2) - margin and constructs a
/// member y with <x,y> < 0. Deterministic under the seed (mt19937_64).
DualCheckReport sampled_dual_check(const EuclideanCone& cone, std::size_t samples,
                                   std::uint64_t seed, double margin = 0.05);

/// Unit member of K(axis, s) in the plane of x and the axis, on the far side from x,
/// minimizing <x, y> over the cone's unit members.
UtilityVector worst_boundary_member(const EuclideanCone& cone, const UtilityVector& x);

}  // namespace eucone
