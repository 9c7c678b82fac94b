#pragma once

// Test-only reference computations written with plain loops over std::vector,
// independent of the library's Eigen code paths.

#include "eucone/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace brute {

using Vec = std::vector<double>;

inline Vec to_vec(const Eigen::VectorXd& v) { return Vec(v.data(), v.data() + v.size()); }

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec minus(const Vec& a, const Vec& b) {
  Vec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

/// cos(d, r) with r the normalized all-ones vector: sum(d) / (sqrt(n) ||d||).
inline double cos_to_ideal(const Vec& d) {
  double sum = 0.0;
  for (double v : d) sum += v;
  return sum / (std::sqrt(static_cast<double>(d.size())) * norm(d));
}

inline double max_abs(const Vec& d) {
  double m = 0.0;
  for (double v : d) m = std::max(m, std::abs(v));
  return m;
}

inline std::vector<Vec> utilities(const eucone::FiniteProblem& p) {
  std::vector<Vec> out;
  for (const auto& d : p.decisions()) out.push_back(to_vec(d.F));
  return out;
}

/// Definition (3): no y with F(y) - F(x) interior to K(s) (cosine > s + tol).
inline std::vector<bool> weak_optimal(const std::vector<Vec>& U, double s, double tol = 1e-9) {
  std::vector<bool> out(U.size(), true);
  for (std::size_t i = 0; i < U.size(); ++i) {
    for (std::size_t j = 0; j < U.size(); ++j) {
      const Vec d = minus(U[j], U[i]);
      if (norm(d) <= 1e-12) continue;
      if (cos_to_ideal(d) > s + tol) {
        out[i] = false;
        break;
      }
    }
  }
  return out;
}

/// Definition (2): no y with F(y) != F(x) and F(y) - F(x) in K(s) (cosine >= s - tol).
inline std::vector<bool> strong_optimal(const std::vector<Vec>& U, double s, double tol = 1e-9) {
  std::vector<bool> out(U.size(), true);
  for (std::size_t i = 0; i < U.size(); ++i) {
    for (std::size_t j = 0; j < U.size(); ++j) {
      const Vec d = minus(U[j], U[i]);
      if (max_abs(d) <= 1e-12) continue;
      if (cos_to_ideal(d) >= s - tol) {
        out[i] = false;
        break;
      }
    }
  }
  return out;
}

/// Componentwise dominance with exact comparisons.
inline std::vector<bool> pareto(const std::vector<Vec>& U, bool weak) {
  std::vector<bool> out(U.size(), true);
  for (std::size_t i = 0; i < U.size(); ++i) {
    for (std::size_t j = 0; j < U.size() && out[i]; ++j) {
      if (i == j) continue;
      bool all_ge = true;
      bool all_gt = true;
      bool any_gt = false;
      for (std::size_t k = 0; k < U[i].size(); ++k) {
        all_ge = all_ge && U[j][k] >= U[i][k];
        all_gt = all_gt && U[j][k] > U[i][k];
        any_gt = any_gt || U[j][k] > U[i][k];
      }
      if (weak ? all_gt : (all_ge && any_gt)) out[i] = false;
    }
  }
  return out;
}

/// G(x_i) by a direct loop.
inline double G(const std::vector<Vec>& U, std::size_t i, double s) {
  double best = -std::numeric_limits<double>::infinity();
  const double scale = s * std::sqrt(static_cast<double>(U[i].size()));
  for (const Vec& y : U) {
    const Vec d = minus(y, U[i]);
    double sum = 0.0;
    for (double v : d) sum += v;
    best = std::max(best, sum - scale * norm(d));
  }
  return best;
}

}  // namespace brute
