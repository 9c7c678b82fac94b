#include "eucone/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

namespace eucone {

namespace {

std::vector<std::string> sorted_ids(const FiniteProblem& problem, const std::vector<bool>& flags) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) ids.push_back(problem[i].id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool differs(const UtilityVector& a, const UtilityVector& b) {
  return (a - b).lpNorm<Eigen::Infinity>() > kUtilityEqualTol;
}

UtilityVector random_unit(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  UtilityVector v(n);
  do {
    for (int i = 0; i < n; ++i) v[i] = normal(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

/// Random unit vector orthogonal to the unit vector q.
UtilityVector random_orthogonal_unit(std::mt19937_64& rng, const UtilityVector& q) {
  for (;;) {
    UtilityVector v = random_unit(rng, static_cast<int>(q.size()));
    v -= v.dot(q) * q;
    if (v.norm() > 1e-6) return v.normalized();
  }
}

/// Unit vector at angle theta from the unit axis q, in the direction of the unit u (u _|_ q).
UtilityVector at_angle(const UtilityVector& q, const UtilityVector& u, double theta) {
  return std::cos(theta) * q + std::sin(theta) * u;
}

std::string s_label(double s) {
  std::ostringstream os;
  os << "s=" << std::setprecision(12) << s;
  return os.str();
}

void check_inclusion(const FiniteProblem& problem, const std::vector<bool>& sub,
                     const std::vector<bool>& super, const std::string& sub_label,
                     const std::string& super_label, std::vector<InclusionViolation>& out) {
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (sub[i] && !super[i]) out.push_back({sub_label, super_label, problem[i].id});
  }
}

}  // namespace

bool pareto_improvement(const UtilityVector& from, const UtilityVector& to, OptimalityMode mode,
                        double tol) {
  require_same_dimension(from, to);
  const UtilityVector d = to - from;
  if (!differs(to, from)) return false;
  const double band = tol * d.norm();
  if (mode == OptimalityMode::Weak) return d.minCoeff() > band;
  return d.minCoeff() >= -band;
}

std::vector<bool> brute_force_flags(const FiniteProblem& problem, double s, OptimalityMode mode,
                                    double tol) {
  require_valid_s(s);
  const EuclideanCone cone = EuclideanCone::family(problem.n(), s);
  std::vector<bool> flags(problem.size(), true);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const UtilityVector& Fx = problem[i].F;
    for (std::size_t j = 0; j < problem.size(); ++j) {
      if (j == i) continue;
      const UtilityVector& Fy = problem[j].F;
      if (mode == OptimalityMode::Strong && !differs(Fy, Fx)) continue;
      if (is_improvement(cone, Fx, Fy, mode, tol)) {
        flags[i] = false;
        break;
      }
    }
  }
  return flags;
}

std::vector<bool> pareto_flags(const FiniteProblem& problem, OptimalityMode mode, double tol) {
  std::vector<bool> flags(problem.size(), true);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    for (std::size_t j = 0; j < problem.size(); ++j) {
      if (j != i && pareto_improvement(problem[i].F, problem[j].F, mode, tol)) {
        flags[i] = false;
        break;
      }
    }
  }
  return flags;
}

OptimalSetReport brute_force_optimal_set(const FiniteProblem& problem, double s,
                                         OptimalityMode mode, double tol) {
  const auto start = std::chrono::steady_clock::now();
  OptimalSetReport report;
  report.s = s;
  report.mode = mode;
  report.optimal_ids = sorted_ids(problem, brute_force_flags(problem, s, mode, tol));
  report.pareto_ids = sorted_ids(problem, pareto_flags(problem, mode, tol));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<double> default_s_grid(int n, int points) {
  if (points < 1) throw DomainError("grid needs at least one point");
  const ConeFamilyBounds b = family_bounds(n);
  std::vector<double> grid;
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    grid.push_back(b.s_min + t * (b.s_max - b.s_min));
  }
  return grid;
}

NestingReport nesting_check(const FiniteProblem& problem, const std::vector<double>& s_grid,
                            OptimalityMode mode, double tol) {
  if (s_grid.empty()) throw DomainError("nesting_check: empty s grid");
  if (!std::is_sorted(s_grid.begin(), s_grid.end())) {
    throw DomainError("nesting_check: s grid must be sorted ascending");
  }
  const ConeFamilyBounds bounds = family_bounds(problem.n());
  NestingReport report;
  report.mode = mode;
  report.s_grid = s_grid;

  std::vector<std::vector<bool>> sets;
  for (double s : s_grid) {
    if (!bounds.admits(s)) {
      report.warnings.push_back(s_label(s) + " lies outside the family interval [" +
                                std::to_string(bounds.s_min) + ", " +
                                std::to_string(bounds.s_max) + "]");
    }
    sets.push_back(brute_force_flags(problem, s, mode, tol));
    report.sizes.push_back(static_cast<std::size_t>(std::count(sets.back().begin(), sets.back().end(), true)));
  }
  // Smaller s means a larger cone, hence fewer optimal points.
  for (std::size_t a = 0; a < s_grid.size(); ++a) {
    for (std::size_t b = a + 1; b < s_grid.size(); ++b) {
      if (s_grid[b] > s_grid[a]) {
        check_inclusion(problem, sets[a], sets[b], s_label(s_grid[a]), s_label(s_grid[b]),
                        report.violations);
      }
    }
  }

  const std::vector<bool> upper = brute_force_flags(problem, bounds.s_min, mode, tol);
  const std::vector<bool> pareto = pareto_flags(problem, mode, tol);
  const std::vector<bool> lower = brute_force_flags(problem, bounds.s_max, mode, tol);
  report.upper_size = static_cast<std::size_t>(std::count(upper.begin(), upper.end(), true));
  report.pareto_size = static_cast<std::size_t>(std::count(pareto.begin(), pareto.end(), true));
  report.lower_size = static_cast<std::size_t>(std::count(lower.begin(), lower.end(), true));
  check_inclusion(problem, upper, pareto, "upper", "pareto", report.violations);
  check_inclusion(problem, pareto, lower, "pareto", "lower", report.violations);
  return report;
}

UtilityVector worst_boundary_member(const EuclideanCone& cone, const UtilityVector& x) {
  require_same_dimension(cone.axis(), x);
  const UtilityVector& q = cone.axis();
  UtilityVector w = x - x.dot(q) * q;
  if (w.norm() <= 1e-12 * std::max(1.0, x.norm())) {
    // x parallel to the axis: every boundary direction is equally far.
    w = UtilityVector::Zero(q.size());
    Eigen::Index k = 0;
    q.cwiseAbs().minCoeff(&k);
    w[k] = 1.0;
    w -= w.dot(q) * q;
  }
  w.normalize();
  return at_angle(q, -w, cone.angular_radius());
}

DualCheckReport sampled_dual_check(const EuclideanCone& cone, std::size_t samples,
                                   std::uint64_t seed, double margin) {
  if (samples < 1) throw DomainError("sampled_dual_check: need at least one sample");
  const EuclideanCone dual_cone = dual(cone);
  const UtilityVector& q = cone.axis();
  const int n = cone.dimension();

  DualCheckReport report;
  report.n = n;
  report.s = cone.s();
  report.dual_s = dual_cone.s();
  report.samples = samples;
  report.seed = seed;
  report.margin = margin;
  report.min_inner_product = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit01(0.0, 1.0);

  // n = 2 has only two unit directions orthogonal to q; random_orthogonal_unit covers both.
  std::vector<UtilityVector> members;
  std::vector<UtilityVector> dual_members;
  members.reserve(samples);
  dual_members.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    members.push_back(at_angle(q, random_orthogonal_unit(rng, q),
                               unit01(rng) * cone.angular_radius()));
    dual_members.push_back(at_angle(q, random_orthogonal_unit(rng, q),
                                    unit01(rng) * dual_cone.angular_radius()));
  }

  auto record = [&](const UtilityVector& x, const UtilityVector& y) {
    const double ip = x.dot(y);
    ++report.pairs_checked;
    report.min_inner_product = std::min(report.min_inner_product, ip);
    if (ip < -1e-9) ++report.violations;
  };

  constexpr std::size_t kPairings = 16;
  for (std::size_t i = 0; i < samples; ++i) {
    const UtilityVector& x = dual_members[i];
    for (std::size_t t = 0; t < std::min(kPairings, samples); ++t) {
      record(x, members[(i + t) % samples]);
    }
    const UtilityVector worst = worst_boundary_member(cone, x);
    if (classify(cone, worst).member()) record(x, worst);
  }
  // Uniform sphere samples classified independently of the constructions above.
  for (std::size_t i = 0; i < samples; ++i) {
    const UtilityVector x = random_unit(rng, n);
    const UtilityVector y = random_unit(rng, n);
    if (classify(dual_cone, x).member() && classify(cone, y).member()) record(x, y);
  }

  // Just outside the dual: cos(x, q) = sqrt(1 - s^2) - margin.
  const double target = std::max(-1.0, dual_cone.s() - margin);
  for (std::size_t i = 0; i < samples; ++i) {
    const UtilityVector x = at_angle(q, random_orthogonal_unit(rng, q), std::acos(target));
    ++report.outside_checked;
    const UtilityVector y = worst_boundary_member(cone, x);
    if (classify(cone, y).member() && x.dot(y) < 0.0) ++report.counterexamples_found;
  }
  return report;
}

}  // namespace eucone
