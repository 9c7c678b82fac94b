#include "eucone/cone.hpp"

#include <algorithm>
#include <cmath>

namespace eucone {

double cos_angle(const UtilityVector& x, const UtilityVector& y) {
  require_same_dimension(x, y);
  const double nx = x.norm();
  const double ny = y.norm();
  if (nx <= kZeroTol || ny <= kZeroTol) {
    throw DomainError("cos_angle: the angle to the zero vector is undefined");
  }
  return std::clamp(x.dot(y) / (nx * ny), -1.0, 1.0);
}

double discrepancy_tan(const UtilityVector& x, const UtilityVector& axis) {
  const double c = cos_angle(x, axis);
  if (c <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(std::max(0.0, 1.0 - c * c)) / c;
}

double threshold_from_discrepancy(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw DomainError("discrepancy limit must be a finite non-negative number");
  }
  return 1.0 / std::sqrt(a * a + 1.0);
}

UtilityVector ideal_direction(int n) {
  if (n < 1) throw DomainError("dimension must be positive");
  return UtilityVector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
}

EuclideanCone::EuclideanCone(UtilityVector axis, double s) : axis_(std::move(axis)), s_(s) {
  require_valid_s(s);
  const double norm = axis_.norm();
  if (!(norm > kZeroTol) || !axis_.allFinite()) {
    throw DomainError("cone axis must be a finite non-zero vector");
  }
  axis_ /= norm;
}

EuclideanCone EuclideanCone::family(int n, double s) { return {ideal_direction(n), s}; }

double EuclideanCone::angular_radius() const { return std::acos(s_); }

std::string_view to_string(MembershipClass c) {
  switch (c) {
    case MembershipClass::Zero: return "zero";
    case MembershipClass::Interior: return "interior";
    case MembershipClass::Boundary: return "boundary";
    case MembershipClass::Exterior: return "exterior";
  }
  return "?";
}

std::string_view to_string(OptimalityMode m) {
  return m == OptimalityMode::Weak ? "weak" : "strong";
}

Membership classify(const EuclideanCone& cone, const UtilityVector& x, double tol) {
  require_same_dimension(cone.axis(), x);
  if (!(tol > 0.0)) throw DomainError("classify: tolerance must be positive");
  if (x.norm() <= kZeroTol) return {};
  const double c = cos_angle(x, cone.axis());
  MembershipClass cls = MembershipClass::Boundary;
  if (c > cone.s() + tol) {
    cls = MembershipClass::Interior;
  } else if (c < cone.s() - tol) {
    cls = MembershipClass::Exterior;
  }
  return {cls, c};
}

EuclideanCone dual(const EuclideanCone& cone) {
  return {cone.axis(), std::sqrt((1.0 - cone.s()) * (1.0 + cone.s()))};
}

ConeFamilyBounds family_bounds(int n) {
  if (n < 2) throw DomainError("family_bounds: need n >= 2");
  const double rn = std::sqrt(static_cast<double>(n));
  return {n, 1.0 / rn, std::sqrt(static_cast<double>(n - 1)) / rn};
}

bool is_improvement(const EuclideanCone& cone, const UtilityVector& from,
                    const UtilityVector& to, OptimalityMode mode, double tol) {
  require_same_dimension(from, to);
  const Membership m = classify(cone, to - from, tol);
  if (mode == OptimalityMode::Weak) return m.interior();
  return m.cls == MembershipClass::Interior || m.cls == MembershipClass::Boundary;
}

}  // namespace eucone
