#include "eucone/first_order.hpp"

#include "eucone/scalarization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace eucone {

namespace {

void require_interior(const SmoothProblem& problem, const DecisionPoint& x, const char* what) {
  if (x.size() != problem.k()) {
    throw DimensionError(std::string(what) + ": decision point has dimension " +
                         std::to_string(x.size()) + ", expected " + std::to_string(problem.k()));
  }
  if (!problem.box().interior(x)) {
    throw DomainError(std::string(what) + ": point must lie strictly inside the box");
  }
}

DecisionPoint random_interior_point(const Box& box, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 0.95);
  DecisionPoint x(box.dimension());
  for (int j = 0; j < box.dimension(); ++j) x[j] = box.lower[j] + u(rng) * (box.upper[j] - box.lower[j]);
  return x;
}

}  // namespace

Matrix finite_difference_jacobian(const SmoothProblem& problem, const DecisionPoint& x) {
  Matrix J(problem.n(), problem.k());
  for (int j = 0; j < problem.k(); ++j) {
    const double h = std::max(1e-6, 1e-7 * (1.0 + std::abs(x[j])));
    DecisionPoint fwd = x;
    DecisionPoint bwd = x;
    fwd[j] += h;
    bwd[j] -= h;
    J.col(j) = (problem.evaluate(fwd) - problem.evaluate(bwd)) / (fwd[j] - bwd[j]);
  }
  return J;
}

Matrix gradient(const SmoothProblem& problem, const DecisionPoint& x) {
  require_interior(problem, x, "gradient");
  return problem.has_analytic_jacobian() ? problem.analytic_jacobian(x)
                                         : finite_difference_jacobian(problem, x);
}

GradientCheck check_jacobian(const SmoothProblem& problem, std::size_t points, std::uint64_t seed,
                             double rel_tol) {
  GradientCheck check;
  if (!problem.has_analytic_jacobian()) return check;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < points; ++i) {
    const DecisionPoint x = random_interior_point(problem.box(), rng);
    const Matrix Ja = problem.analytic_jacobian(x);
    const Matrix Jf = finite_difference_jacobian(problem, x);
    const double err = (Ja - Jf).norm() / std::max(1.0, Ja.norm());
    check.max_relative_error = std::max(check.max_relative_error, err);
    ++check.points;
  }
  check.passed = check.max_relative_error <= rel_tol;
  return check;
}

PairResidual pair_residuals(const SmoothProblem& problem, const DecisionPoint& xstar,
                            const DecisionPoint& ystar, double s) {
  require_valid_s(s);
  require_interior(problem, ystar, "pair_residuals");
  const int n = problem.n();
  const UtilityVector d = problem.evaluate(ystar) - problem.evaluate(xstar);
  const Matrix J = gradient(problem, ystar);
  const double sum = d.sum();
  const double norm = d.norm();
  const double rn = std::sqrt(static_cast<double>(n));

  PairResidual res;
  res.degenerate = norm <= 1e-9;
  const UtilityVector w15 = UtilityVector::Constant(n, sum) - (s * s * n) * d;
  res.eq15_vector = J.transpose() * w15;
  res.eq15 = res.eq15_vector.norm();
  res.eq16 = std::abs(sum - s * rn * norm);

  if (std::abs(s - 1.0 / rn) <= 1e-12) {
    UtilityVector w19 = UtilityVector::Zero(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j != i) w19[i] += d[j];
      }
    }
    res.eq19_vector = J.transpose() * w19;
    res.eq19 = res.eq19_vector.norm();
  }
  if (!res.degenerate) {
    const Eigen::VectorXd stationarity =
        J.transpose() * (UtilityVector::Ones(n) - (s * rn / norm) * d);
    res.eq17 = stationarity.norm();
    res.substitution_gap = (res.eq15_vector - sum * stationarity).norm();
  }
  return res;
}

NullSpace left_null_space(const Matrix& jacobian) {
  const Eigen::Index n = jacobian.rows();
  const Matrix Jt = jacobian.transpose();
  NullSpace ns;
  if (Jt.size() == 0) {
    ns.basis = Matrix::Identity(n, n);
    return ns;
  }
  Eigen::JacobiSVD<Matrix> svd(Jt, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv.maxCoeff() : 0.0;
  if (largest > 0.0) {
    const double cut = 1e-10 * largest;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv[i] > cut) ++ns.rank;
      if (sv[i] > cut / 10.0 && sv[i] <= cut * 10.0) ns.ambiguous = true;
    }
  }
  ns.basis = svd.matrixV().rightCols(n - ns.rank);
  return ns;
}

MultiplierCertificate multiplier_from_jacobian(const Matrix& jacobian, double s, double tol) {
  require_valid_s(s);
  const int n = static_cast<int>(jacobian.rows());
  const NullSpace ns = left_null_space(jacobian);
  const UtilityVector r = ideal_direction(n);
  const UtilityVector projected = ns.basis * (ns.basis.transpose() * r);

  MultiplierCertificate cert;
  cert.gradient_matrix_rank = ns.rank;
  cert.rank_ambiguous = ns.ambiguous;
  cert.axial_projection_norm = projected.norm();
  cert.threshold = std::sqrt((1.0 - s) * (1.0 + s));
  cert.exists = cert.axial_projection_norm > kZeroTol &&
                cert.axial_projection_norm >= cert.threshold - tol;
  if (cert.exists) {
    UtilityVector lambda = projected / cert.axial_projection_norm;
    cert.stationarity_residual = (jacobian.transpose() * lambda).norm();
    cert.lambda = std::move(lambda);
  }
  return cert;
}

MultiplierCertificate multiplier_exists(const SmoothProblem& problem, const DecisionPoint& xstar,
                                        double s, double tol) {
  require_interior(problem, xstar, "multiplier_exists");
  return multiplier_from_jacobian(gradient(problem, xstar), s, tol);
}

double pair_objective(const SmoothProblem& problem, const UtilityVector& Fx,
                      const DecisionPoint& y, double s) {
  const UtilityVector d = problem.evaluate(y) - Fx;
  return d.sum() - s * std::sqrt(static_cast<double>(problem.n())) * d.norm();
}

DecisionPoint refine_maximizer(const SmoothProblem& problem, const UtilityVector& Fx,
                               DecisionPoint start, double s, double initial_step) {
  constexpr double kMinStep = 1e-12;
  constexpr double kGain = 1e-14;  // ignore rounding-level "improvements"
  const Box& box = problem.box();
  DecisionPoint best = std::move(start);
  double best_value = pair_objective(problem, Fx, best, s);
  double step = initial_step;
  for (int iter = 0; iter < 100000 && step >= kMinStep; ++iter) {
    bool moved = false;
    for (int j = 0; j < problem.k() && !moved; ++j) {
      for (double sign : {1.0, -1.0}) {
        DecisionPoint trial = best;
        trial[j] += sign * step;
        if (!box.interior(trial)) continue;
        const double v = pair_objective(problem, Fx, trial, s);
        if (v > best_value + kGain) {
          best = std::move(trial);
          best_value = v;
          moved = true;
          break;
        }
      }
    }
    if (!moved) step /= 2.0;
  }
  return best;
}

std::optional<WeakPair> best_pair_for(const SmoothProblem& problem, const FiniteProblem& grid,
                                      std::size_t xstar_index, double s, double tol) {
  return best_pair_for(problem, grid, grid[xstar_index].x, grid[xstar_index].id, s, tol);
}

std::optional<WeakPair> best_pair_for(const SmoothProblem& problem, const FiniteProblem& grid,
                                      const DecisionPoint& xstar, std::string xstar_id, double s,
                                      double tol) {
  const UtilityVector Fx = problem.evaluate(xstar);
  const Eigen::VectorXd values = inner_objective(grid, Fx, s);
  const double G = std::max(0.0, values.maxCoeff());

  WeakPair pair;
  pair.xstar_id = std::move(xstar_id);
  pair.xstar = xstar;
  if (G > tol) {
    Eigen::Index j = 0;
    values.maxCoeff(&j);
    pair.ystar_id = grid[static_cast<std::size_t>(j)].id;
    pair.ystar = grid[static_cast<std::size_t>(j)].x;
    pair.refined_value = G;
    pair.status = PairStatus::Rejected;
    return pair;
  }

  std::optional<std::size_t> interior_pick;
  std::optional<std::size_t> boundary_pick;
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    const Decision& y = grid[static_cast<std::size_t>(j)];
    if (values[j] < G - kArgmaxTieTol || (y.F - Fx).norm() <= kUniqueUtilityTol) continue;
    if (problem.box().interior(y.x)) {
      if (!interior_pick || values[j] > values[static_cast<Eigen::Index>(*interior_pick)]) {
        interior_pick = static_cast<std::size_t>(j);
      }
    } else if (!boundary_pick) {
      boundary_pick = static_cast<std::size_t>(j);
    }
  }
  if (!interior_pick && !boundary_pick) return std::nullopt;
  if (!interior_pick) {
    pair.ystar_id = grid[*boundary_pick].id;
    pair.ystar = grid[*boundary_pick].x;
    pair.refined_value = values[static_cast<Eigen::Index>(*boundary_pick)];
    pair.status = PairStatus::Inapplicable;
    return pair;
  }

  const Decision& y0 = grid[*interior_pick];
  pair.ystar_id = y0.id;
  const double width = (problem.box().upper - problem.box().lower).minCoeff();
  pair.ystar = refine_maximizer(problem, Fx, y0.x, s, 1e-2 * width);
  pair.refined_value = pair_objective(problem, Fx, pair.ystar, s);
  if (pair.refined_value > tol) {
    pair.status = PairStatus::Rejected;
    return pair;
  }
  pair.residual = pair_residuals(problem, xstar, pair.ystar, s);
  pair.status = PairStatus::Located;
  return pair;
}

std::vector<WeakPair> locate_weak_pairs(const SmoothProblem& problem, const FiniteProblem& grid,
                                        double s, double tol) {
  const std::vector<bool> roots = weak_roots(grid, s, tol);
  std::vector<WeakPair> pairs;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i]) continue;
    if (auto pair = best_pair_for(problem, grid, i, s, tol)) pairs.push_back(std::move(*pair));
  }
  return pairs;
}

LocalCertificate certify_local_weak_optimal(const SmoothProblem& problem, const DecisionPoint& x,
                                            double s, double radius, std::size_t directions,
                                            std::uint64_t seed, int radii) {
  const EuclideanCone cone = EuclideanCone::family(problem.n(), s);
  const UtilityVector Fx = problem.evaluate(x);
  const int k = problem.k();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double phase = std::uniform_real_distribution<double>(0.0, 1.0)(rng);

  LocalCertificate cert;
  for (std::size_t i = 0; i < directions; ++i) {
    DecisionPoint dir(k);
    if (k == 1) {
      dir[0] = i % 2 == 0 ? 1.0 : -1.0;
    } else if (k == 2) {
      const double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + phase) /
                           static_cast<double>(directions);
      dir << std::cos(angle), std::sin(angle);
    } else {
      do {
        for (int j = 0; j < k; ++j) dir[j] = normal(rng);
      } while (dir.norm() < 1e-9);
      dir.normalize();
    }
    double t = radius;
    for (int r = 0; r < radii; ++r, t /= 2.0) {
      const DecisionPoint p = x + t * dir;
      if (!problem.box().contains(p)) continue;
      ++cert.evaluations;
      if (classify(cone, problem.evaluate(p) - Fx).interior()) {
        cert.certified = false;
        cert.witness = p;
        return cert;
      }
    }
  }
  return cert;
}

}  // namespace eucone
