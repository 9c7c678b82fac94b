#include "eucone/problem.hpp"

#include "eucone/first_order.hpp"

namespace eucone {

FiniteProblem::FiniteProblem(int n, std::vector<Decision> decisions, std::string provenance)
    : n_(n), decisions_(std::move(decisions)), provenance_(std::move(provenance)) {
  if (n_ < 2) throw DomainError("objective dimension must be at least 2");
  if (decisions_.empty()) throw DomainError("decision list is empty");
  utilities_.resize(n_, static_cast<Eigen::Index>(decisions_.size()));
  for (std::size_t i = 0; i < decisions_.size(); ++i) {
    const Decision& d = decisions_[i];
    if (d.F.size() != n_) {
      throw DimensionError("decision '" + d.id + "': utility vector has length " +
                           std::to_string(d.F.size()) + ", expected " + std::to_string(n_));
    }
    if (!d.F.allFinite()) throw DomainError("decision '" + d.id + "': non-finite utility");
    if (!index_.emplace(d.id, i).second) throw DomainError("duplicate decision id '" + d.id + "'");
    utilities_.col(static_cast<Eigen::Index>(i)) = d.F;
  }
}

std::size_t FiniteProblem::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownIdError(id);
  return it->second;
}

bool Box::interior(const DecisionPoint& x) const {
  if (x.size() != lower.size()) return false;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const double margin = 1e-9 * (upper[j] - lower[j]);
    if (!(x[j] > lower[j] + margin && x[j] < upper[j] - margin)) return false;
  }
  return true;
}

bool Box::contains(const DecisionPoint& x) const {
  if (x.size() != lower.size()) return false;
  return (x.array() >= lower.array()).all() && (x.array() <= upper.array()).all();
}

SmoothProblem::SmoothProblem(std::string name, int n, Box box, UtilityMap F, JacobianMap jacobian)
    : name_(std::move(name)), n_(n), box_(std::move(box)), F_(std::move(F)),
      jacobian_(std::move(jacobian)) {
  if (n_ < 2) throw DomainError(name_ + ": objective dimension must be at least 2");
  if (!F_) throw DomainError(name_ + ": missing utility evaluator");
  if (box_.lower.size() == 0 || box_.lower.size() != box_.upper.size()) {
    throw DimensionError(name_ + ": box bounds must be non-empty and of equal length");
  }
  if (!(box_.lower.array() < box_.upper.array()).all()) {
    throw DomainError(name_ + ": box lower bounds must be below upper bounds");
  }
  if (jacobian_) {
    const GradientCheck check = check_jacobian(*this, 10, 20240917u);
    if (!check.passed) {
      throw DomainError(name_ + ": analytic Jacobian disagrees with central differences (relative error " +
                        std::to_string(check.max_relative_error) + ")");
    }
  }
}

UtilityVector SmoothProblem::evaluate(const DecisionPoint& x) const {
  if (x.size() != k()) throw DimensionError(name_ + ": decision point has wrong dimension");
  UtilityVector f = F_(x);
  if (f.size() != n_) throw DimensionError(name_ + ": evaluator returned wrong dimension");
  return f;
}

Matrix SmoothProblem::analytic_jacobian(const DecisionPoint& x) const {
  Matrix J = jacobian_(x);
  if (J.rows() != n_ || J.cols() != k()) {
    throw DimensionError(name_ + ": Jacobian evaluator returned wrong shape");
  }
  return J;
}

SmoothProblem SmoothProblem::with_box(Box box) const {
  return {name_, n_, std::move(box), F_, jacobian_};
}

}  // namespace eucone
