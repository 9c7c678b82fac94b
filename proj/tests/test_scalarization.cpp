#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eucone/cone.hpp"
#include "eucone/oracle.hpp"
#include "eucone/problems_io.hpp"
#include "eucone/scalarization.hpp"
#include "support/brute.hpp"

#include <cmath>

using namespace eucone;

namespace {

FiniteProblem make(int n, std::vector<std::pair<std::string, std::vector<double>>> pts) {
  std::vector<Decision> ds;
  for (auto& [id, f] : pts) {
    ds.push_back({id, DecisionPoint(), Eigen::Map<UtilityVector>(f.data(), static_cast<Eigen::Index>(f.size()))});
  }
  return {n, std::move(ds)};
}

FiniteProblem four_point() {
  return make(3, {{"e1", {1, 0, 0}}, {"e2", {0, 1, 0}}, {"e3", {0, 0, 1}}, {"ones", {1, 1, 1}}});
}

}  // namespace

TEST_CASE("G on a singleton") {
  const FiniteProblem p = make(2, {{"a", {0.3, 0.7}}});
  const ScalarizationResult g = G_value(p, "a", 0.6);
  CHECK(g.value == 0.0);
  CHECK(g.argmax_ids == std::vector<std::string>{"a"});
  CHECK(g.unique_in_utility);
  CHECK(weak_optimal(p, "a", 0.6).holds());
  CHECK(strong_optimal(p, "a", 0.6).holds());
  CHECK(G1_value(p, "a") == 0.0);
}

TEST_CASE("G on the four-point example") {
  const FiniteProblem p = four_point();
  const double s = 1.0 / std::sqrt(3.0);
  const auto U = brute::utilities(p);

  // Direct evaluation: against (1,1,1) the increment is (0,1,1): 2 - sqrt(3)(1/sqrt 3) sqrt 2.
  const double expected = brute::G(U, 0, s);
  CHECK(expected == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
  const ScalarizationResult g = G_value(p, "e1", s);
  CHECK(g.value == doctest::Approx(expected).epsilon(1e-13));
  CHECK(g.value > 0.0);
  CHECK(g.argmax_ids == std::vector<std::string>{"ones"});

  CHECK(brute::G(U, 3, s) == 0.0);
  CHECK(G_value(p, "ones", s).value == 0.0);

  const Certificate weak_ones = weak_optimal(p, "ones", s);
  CHECK(weak_ones.verdict == Verdict::Optimal);
  const Certificate weak_e1 = weak_optimal(p, "e1", s);
  CHECK(weak_e1.verdict == Verdict::NotOptimal);
  CHECK(weak_e1.witness_id == std::optional<std::string>("ones"));
  CHECK(is_improvement(EuclideanCone::family(3, s), p.at("e1").F, p.at("ones").F, OptimalityMode::Weak));

  CHECK(strong_optimal(p, "ones", s).holds());
  CHECK_FALSE(strong_optimal(p, "e2", s).holds());
}

TEST_CASE("strong optimality is judged in utility space") {
  // Two decisions with the same utility vector: the maximizer set maps to one point.
  const FiniteProblem twins = make(2, {{"a", {1, 1}}, {"b", {1, 1}}, {"c", {0, 0.5}}});
  const double s = 1.0 / std::sqrt(2.0);
  const ScalarizationResult g = G_value(twins, "a", s);
  CHECK(g.argmax_ids.size() == 2);
  CHECK(g.unique_in_utility);
  CHECK(strong_optimal(twins, "a", s).holds());
  CHECK(strong_optimal(twins, "b", s).holds());

  // Increment (1, 0) sits on the boundary of K(1/sqrt 2) = R^2_+: weak but not strong.
  const FiniteProblem edge = make(2, {{"x", {0, 0}}, {"y", {1, 0}}});
  CHECK(classify(EuclideanCone::family(2, s), edge.at("y").F - edge.at("x").F).cls ==
        MembershipClass::Boundary);
  CHECK(weak_optimal(edge, "x", s).holds());
  const Certificate strong = strong_optimal(edge, "x", s);
  CHECK(strong.verdict == Verdict::NotOptimal);
  CHECK(strong.witness_id == std::optional<std::string>("y"));
  CHECK(strong.reason.find("boundary") != std::string::npos);
  CHECK(brute::strong_optimal(brute::utilities(edge), s)[0] == false);
}

TEST_CASE("G1 maximin") {
  const FiniteProblem p = make(2, {{"o", {0, 0}}, {"u", {1, 1}}});
  CHECK(G1_value(p, "o") == doctest::Approx(1.0));
  CHECK(G1_value(p, "u") == 0.0);
  const FiniteProblem q = make(2, {{"a", {2, 0}}, {"b", {0, 2}}});
  CHECK(G1_value(q, "a") == 0.0);
  CHECK(G1_value(q, "b") == 0.0);
  const auto wp = brute::pareto(brute::utilities(q), true);
  CHECK(wp[0]);
  CHECK(wp[1]);
}

TEST_CASE("errors") {
  const FiniteProblem p = four_point();
  CHECK_THROWS_AS(G_value(p, "missing", 0.6), UnknownIdError);
  CHECK_THROWS_AS(G_value(p, "e1", 0.0), DomainError);
  CHECK_THROWS_AS(G_value(p, "e1", 1.5), DomainError);
  CHECK_THROWS_AS(weak_optimal(p, "missing", 0.6), UnknownIdError);
  CHECK_THROWS_AS(G1_value(p, "missing"), UnknownIdError);
}

TEST_CASE("properties on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const FiniteProblem p = generate_random(n, 60, seed);
    const auto U = brute::utilities(p);
    const ConeFamilyBounds b = family_bounds(n);
    std::vector<double> grid = default_s_grid(n, 5);

    std::vector<bool> previous;
    for (double s : grid) {
      const auto weak_ref = brute::weak_optimal(U, s);
      const auto strong_ref = brute::strong_optimal(U, s);
      const std::vector<bool> roots = weak_roots(p, s);
      std::vector<bool> current;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const ScalarizationResult g = G_value(p, p[i].id, s);
        REQUIRE(g.value >= 0.0);
        CHECK(g.value == doctest::Approx(brute::G(U, i, s)).epsilon(1e-12));
        const bool weak = weak_optimal(p, p[i].id, s).holds();
        CHECK(weak == weak_ref[i]);
        CHECK(roots[i] == weak);
        CHECK(strong_optimal(p, p[i].id, s).holds() == strong_ref[i]);
        if (g.value == 0.0) {
          CHECK(std::find(g.argmax_ids.begin(), g.argmax_ids.end(), p[i].id) != g.argmax_ids.end());
        }
        current.push_back(weak);
      }
      // Weak verdicts only gain members as s grows.
      if (!previous.empty()) {
        for (std::size_t i = 0; i < current.size(); ++i) {
          if (previous[i]) CHECK(current[i]);
        }
      }
      previous = current;
    }
    if (n == 2) {
      const auto wp = brute::pareto(U, true);
      for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(weak_optimal(p, p[i].id, b.s_min).holds() == wp[i]);
        CHECK((G1_value(p, p[i].id) <= kGeometryTol) == wp[i]);
      }
    }
  }
}
