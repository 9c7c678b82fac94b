#pragma once

#include "eucone/types.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace eucone {

struct Decision {
  std::string id;
  DecisionPoint x;  // may be empty
  UtilityVector F;
};

/// A finite decision set with precomputed utilities. Immutable after construction.
class FiniteProblem {
public:
  /// Throws DomainError on an empty list, n < 2, non-finite utilities or duplicate ids;
  /// DimensionError when a utility vector does not have length n.
  FiniteProblem(int n, std::vector<Decision> decisions, std::string provenance = {});

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return decisions_.size(); }
  const std::vector<Decision>& decisions() const noexcept { return decisions_; }
  const Decision& operator[](std::size_t i) const { return decisions_[i]; }
  const std::string& provenance() const noexcept { return provenance_; }

  /// Index of a decision id; throws UnknownIdError.
  std::size_t index_of(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  const Decision& at(const std::string& id) const { return decisions_[index_of(id)]; }

  /// Utilities as an n x |X| matrix (one column per decision).
  const Matrix& utilities() const noexcept { return utilities_; }

private:
  int n_;
  std::vector<Decision> decisions_;
  std::string provenance_;
  std::unordered_map<std::string, std::size_t> index_;
  Matrix utilities_;
};

/// Maps a decision point to its utility vector. Must be reentrant.
using UtilityMap = std::function<UtilityVector(const DecisionPoint&)>;
/// Maps a decision point to the n x k Jacobian whose rows are the utility gradients.
using JacobianMap = std::function<Matrix(const DecisionPoint&)>;

struct Box {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  int dimension() const noexcept { return static_cast<int>(lower.size()); }
  /// Strictly inside, with a margin of 1e-9 of the box width per coordinate.
  bool interior(const DecisionPoint& x) const;
  bool contains(const DecisionPoint& x) const;
};

/// Differentiable utilities on a box of R^k.
class SmoothProblem {
public:
  /// Validates the box and, when a Jacobian is supplied, compares it with central
  /// differences at 10 seeded interior points (1e-5 relative); throws DomainError on failure.
  SmoothProblem(std::string name, int n, Box box, UtilityMap F, JacobianMap jacobian = {});

  const std::string& name() const noexcept { return name_; }
  int k() const noexcept { return box_.dimension(); }
  int n() const noexcept { return n_; }
  const Box& box() const noexcept { return box_; }
  bool has_analytic_jacobian() const noexcept { return static_cast<bool>(jacobian_); }

  /// F(x); checks the output dimension.
  UtilityVector evaluate(const DecisionPoint& x) const;
  /// Analytic Jacobian; precondition has_analytic_jacobian().
  Matrix analytic_jacobian(const DecisionPoint& x) const;

  /// Same problem on another box (re-validated).
  SmoothProblem with_box(Box box) const;

private:
  std::string name_;
  int n_;
  Box box_;
  UtilityMap F_;
  JacobianMap jacobian_;
};

}  // namespace eucone
