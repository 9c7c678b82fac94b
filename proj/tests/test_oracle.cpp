#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eucone/oracle.hpp"
#include "eucone/problems_io.hpp"
#include "eucone/report.hpp"
#include "support/brute.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace eucone;

namespace {

FiniteProblem make(int n, std::vector<std::pair<std::string, std::vector<double>>> pts) {
  std::vector<Decision> ds;
  for (auto& [id, f] : pts) {
    ds.push_back({id, DecisionPoint(), Eigen::Map<UtilityVector>(f.data(), static_cast<Eigen::Index>(f.size()))});
  }
  return {n, std::move(ds)};
}

std::vector<std::string> ids_of(const FiniteProblem& p, const std::vector<bool>& flags) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(p[i].id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("optimal sets on worked instances") {
  const FiniteProblem single = make(3, {{"only", {0.1, 0.2, 0.3}}});
  for (auto mode : {OptimalityMode::Weak, OptimalityMode::Strong}) {
    const OptimalSetReport r = brute_force_optimal_set(single, 0.6, mode);
    CHECK(r.optimal_ids == std::vector<std::string>{"only"});
    CHECK(r.pareto_ids == std::vector<std::string>{"only"});
  }

  const FiniteProblem four = make(3, {{"e1", {1, 0, 0}}, {"e2", {0, 1, 0}}, {"e3", {0, 0, 1}}, {"ones", {1, 1, 1}}});
  const OptimalSetReport r = brute_force_optimal_set(four, 1.0 / std::sqrt(3.0), OptimalityMode::Strong);
  CHECK(r.optimal_ids == std::vector<std::string>{"ones"});
  CHECK(r.pareto_ids == std::vector<std::string>{"ones"});
}

TEST_CASE("n = 2 with s = 1/sqrt(2) reproduces the Pareto sets") {
  const double s = 1.0 / std::sqrt(2.0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const FiniteProblem p = generate_random(2, seed == 1 ? 1000 : 120, seed);
    const auto U = brute::utilities(p);
    for (auto mode : {OptimalityMode::Weak, OptimalityMode::Strong}) {
      const OptimalSetReport r = brute_force_optimal_set(p, s, mode);
      CHECK(r.optimal_ids == r.pareto_ids);
      CHECK(r.pareto_ids == ids_of(p, brute::pareto(U, mode == OptimalityMode::Weak)));
    }
  }
}

TEST_CASE("oracle agrees with the loop reference and strong sets sit inside weak sets") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const FiniteProblem p = generate_random(n, 70, seed + 50);
    const auto U = brute::utilities(p);
    for (double s : default_s_grid(n, 4)) {
      const auto weak = brute_force_flags(p, s, OptimalityMode::Weak);
      const auto strong = brute_force_flags(p, s, OptimalityMode::Strong);
      CHECK(weak == brute::weak_optimal(U, s));
      CHECK(strong == brute::strong_optimal(U, s));
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (strong[i]) CHECK(weak[i]);
      }
    }
  }
}

TEST_CASE("report is invariant under permutation and deterministic") {
  const FiniteProblem p = generate_random(3, 90, 5);
  std::vector<Decision> shuffled = p.decisions();
  std::mt19937_64 rng(8);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const FiniteProblem q(3, shuffled);
  for (auto mode : {OptimalityMode::Weak, OptimalityMode::Strong}) {
    const OptimalSetReport a = brute_force_optimal_set(p, 0.7, mode);
    const OptimalSetReport b = brute_force_optimal_set(q, 0.7, mode);
    CHECK(a.optimal_ids == b.optimal_ids);
    CHECK(a.pareto_ids == b.pareto_ids);
    CHECK(to_json(a, false) == to_json(brute_force_optimal_set(p, 0.7, mode), false));
  }
  CHECK_THROWS_AS(brute_force_optimal_set(p, 1.0, OptimalityMode::Weak), DomainError);
}

TEST_CASE("nesting") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const FiniteProblem p = generate_random(n, 100, seed);
    for (auto mode : {OptimalityMode::Weak, OptimalityMode::Strong}) {
      const NestingReport r = nesting_check(p, default_s_grid(n), mode);
      CHECK(r.ok());
      CHECK(r.warnings.empty());
      CHECK(std::is_sorted(r.sizes.begin(), r.sizes.end()));
      CHECK(r.upper_size <= r.pareto_size);
      CHECK(r.pareto_size <= r.lower_size);
    }
  }

  const FiniteProblem bi = generate_random(2, 80, 4);
  const NestingReport r2 = nesting_check(bi, default_s_grid(2), OptimalityMode::Strong);
  CHECK(r2.ok());
  CHECK(std::adjacent_find(r2.sizes.begin(), r2.sizes.end(), std::not_equal_to<>()) == r2.sizes.end());
  CHECK(r2.upper_size == r2.pareto_size);
  CHECK(r2.lower_size == r2.pareto_size);

  const FiniteProblem same = make(3, {{"a", {1, 1, 1}}, {"b", {1, 1, 1}}, {"c", {1, 1, 1}}});
  const NestingReport rs = nesting_check(same, default_s_grid(3), OptimalityMode::Strong);
  CHECK(rs.ok());
  for (std::size_t size : rs.sizes) CHECK(size == 3);

  CHECK_THROWS_AS(nesting_check(bi, {}, OptimalityMode::Weak), DomainError);
  CHECK_THROWS_AS(nesting_check(bi, {0.8, 0.6}, OptimalityMode::Weak), DomainError);
  const NestingReport outside = nesting_check(generate_random(3, 10, 1), {0.3, 0.6}, OptimalityMode::Weak);
  CHECK(outside.warnings.size() == 1);
}

TEST_CASE("a deliberately broken chain is reported") {
  // Feeding an ascending grid with a value outside (0,1) is an error, not a silent pass.
  const FiniteProblem p = generate_random(3, 10, 2);
  CHECK_THROWS_AS(nesting_check(p, {0.6, 1.2}, OptimalityMode::Weak), DomainError);
}

TEST_CASE("sampled dual check") {
  const EuclideanCone lorentz = EuclideanCone::family(4, 1.0 / std::sqrt(2.0));
  const DualCheckReport self = sampled_dual_check(lorentz, 4000, 1);
  CHECK(self.ok());
  CHECK(self.min_inner_product >= -1e-9);
  CHECK(self.dual_s == doctest::Approx(self.s));

  for (int n = 2; n <= 6; ++n) {
    const DualCheckReport r = sampled_dual_check(family_bounds(n).upper_cone(), 3000, 10 + n);
    CHECK(r.violations == 0);
    CHECK(r.counterexamples_found == r.outside_checked);
    CHECK(r.dual_s == doctest::Approx(family_bounds(n).s_max));
  }

  // General axis, and the tighter margin.
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  UtilityVector q(5);
  for (int i = 0; i < 5; ++i) q[i] = g(rng);
  const DualCheckReport tight = sampled_dual_check(EuclideanCone(q, 0.3), 2000, 3, 1e-3);
  CHECK(tight.ok());

  const DualCheckReport a = sampled_dual_check(lorentz, 500, 99);
  const DualCheckReport b = sampled_dual_check(lorentz, 500, 99);
  CHECK(to_json(a) == to_json(b));
  CHECK_THROWS_AS(sampled_dual_check(lorentz, 0, 1), DomainError);
}

TEST_CASE("worst boundary member") {
  const EuclideanCone k = EuclideanCone::family(3, 0.6);
  UtilityVector x(3);
  x << 1.0, -0.2, 0.1;
  const UtilityVector y = worst_boundary_member(k, x);
  CHECK(y.norm() == doctest::Approx(1.0));
  CHECK(classify(k, y).cls == MembershipClass::Boundary);
  // Minimum of <x,y> over unit members, by dense sampling of the boundary circle.
  const UtilityVector q = k.axis();
  UtilityVector u = UtilityVector::Zero(3);
  u << 1, -1, 0;
  u.normalize();
  const Eigen::Vector3d v = Eigen::Vector3d(q).cross(Eigen::Vector3d(u));
  double best = 1e9;
  for (int i = 0; i < 20000; ++i) {
    const double a = 2 * M_PI * i / 20000.0;
    const UtilityVector b = 0.6 * q + 0.8 * (std::cos(a) * u + std::sin(a) * UtilityVector(v));
    best = std::min(best, x.normalized().dot(b));
  }
  CHECK(x.normalized().dot(y) <= best + 1e-8);
  // Parallel to the axis still yields a boundary member.
  CHECK(classify(k, worst_boundary_member(k, k.axis())).cls == MembershipClass::Boundary);
}
