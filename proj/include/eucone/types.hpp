#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace eucone {

/// A point of utility space R^n: F(x), an increment F(y) - F(x), or a weight.
using UtilityVector = Eigen::VectorXd;
/// A point of decision space R^k.
using DecisionPoint = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Norms at or below this are the zero vector.
inline constexpr double kZeroTol = 1e-12;
/// Default membership band on the cosine scale.
inline constexpr double kGeometryTol = 1e-9;
/// Default tolerance for first-order residuals.
inline constexpr double kResidualTol = 1e-6;
/// Sup-norm threshold for "F(x) != F(x*)" in the brute-force oracle.
inline constexpr double kUtilityEqualTol = 1e-12;

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class UnknownIdError : public std::out_of_range {
public:
  explicit UnknownIdError(const std::string& id)
      : std::out_of_range("unknown decision id '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

private:
  std::string id_;
};

inline void require_same_dimension(const UtilityVector& a, const UtilityVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

inline void require_valid_s(double s) {
  if (!(s > 0.0 && s < 1.0)) {
    throw DomainError("cosine threshold s must lie in (0,1), got " + std::to_string(s));
  }
}

}  // namespace eucone
