#pragma once

// Geometry of Euclidean (ice-cream) cones
//
//   K(q, s) = { x : cos(x, q) >= s } U {0},   ||q|| = 1,  0 < s < 1.
//
// The family used for preference orders shares the ideal axis
// r = (1/sqrt(n), ..., 1/sqrt(n)) and keeps s inside
// [1/sqrt(n), sqrt(n-1)/sqrt(n)]; the end points give the largest cone K_U
// (the orts lie on its boundary) and the smallest cone K_L (the projections of
// r onto the coordinate hyperplanes lie on its boundary).

#include "eucone/types.hpp"

#include <limits>
#include <string_view>

namespace eucone {

/// Cosine of the angle between two non-zero vectors, clamped to [-1, 1].
double cos_angle(const UtilityVector& x, const UtilityVector& y);

/// Tangent of the angle between x and the axis: ||p2|| / ||p1|| where p1 is the
/// projection of x on the axis half-line and p2 the orthogonal remainder.
/// Returns +infinity when the axial projection is not positive.
double discrepancy_tan(const UtilityVector& x, const UtilityVector& axis);

/// Threshold s matching a discrepancy limit a: s = 1 / sqrt(a^2 + 1).
double threshold_from_discrepancy(double a);

/// The normalized all-ones direction of R^n.
UtilityVector ideal_direction(int n);

class EuclideanCone {
public:
  /// Cone around `axis` (normalized here; must be non-zero) with cosine threshold s.
  EuclideanCone(UtilityVector axis, double s);

  /// Cone of the preference family: axis r in R^n.
  static EuclideanCone family(int n, double s);

  const UtilityVector& axis() const noexcept { return axis_; }
  double s() const noexcept { return s_; }
  int dimension() const noexcept { return static_cast<int>(axis_.size()); }

  /// Half-aperture arccos(s).
  double angular_radius() const;

private:
  UtilityVector axis_;
  double s_;
};

enum class MembershipClass { Zero, Interior, Boundary, Exterior };

std::string_view to_string(MembershipClass c);

struct Membership {
  MembershipClass cls = MembershipClass::Zero;
  /// cos(x, axis); NaN for the zero vector.
  double cosine = std::numeric_limits<double>::quiet_NaN();

  /// The zero vector belongs to every cone.
  bool member() const noexcept { return cls != MembershipClass::Exterior; }
  bool interior() const noexcept { return cls == MembershipClass::Interior; }
};

Membership classify(const EuclideanCone& cone, const UtilityVector& x,
                    double tol = kGeometryTol);

/// Dual cone: same axis, threshold sqrt(1 - s^2).
EuclideanCone dual(const EuclideanCone& cone);

struct ConeFamilyBounds {
  int n = 2;
  double s_min = 0.0;  // 1/sqrt(n): K_U
  double s_max = 0.0;  // sqrt(n-1)/sqrt(n): K_L

  EuclideanCone upper_cone() const { return EuclideanCone::family(n, s_min); }
  EuclideanCone lower_cone() const { return EuclideanCone::family(n, s_max); }
  /// Closed interval membership with a small slack for rounding.
  bool admits(double s, double slack = 1e-12) const {
    return s >= s_min - slack && s <= s_max + slack;
  }
};

ConeFamilyBounds family_bounds(int n);

enum class OptimalityMode { Weak, Strong };

std::string_view to_string(OptimalityMode m);

/// Whether moving from utility `from` to utility `to` is an improvement under the cone.
/// Strong: to - from is a non-zero member. Weak: to - from is interior.
bool is_improvement(const EuclideanCone& cone, const UtilityVector& from,
                    const UtilityVector& to, OptimalityMode mode,
                    double tol = kGeometryTol);

}  // namespace eucone
