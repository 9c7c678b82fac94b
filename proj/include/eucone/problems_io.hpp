#pragma once

#include "eucone/problem.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eucone {

inline constexpr int kProblemSchemaVersion = 1;

class ProblemParseError : public std::runtime_error {
public:
  enum class Kind { MalformedJson, SchemaViolation, UnknownGenerator, DuplicateId };

  ProblemParseError(Kind kind, std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        kind_(kind), path_(std::move(path)) {}

  Kind kind() const noexcept { return kind_; }
  /// JSON pointer of the offending field ("" for the document).
  const std::string& path() const noexcept { return path_; }

private:
  Kind kind_;
  std::string path_;
};

std::string_view to_string(ProblemParseError::Kind kind);

class UnknownGeneratorError : public std::invalid_argument {
public:
  explicit UnknownGeneratorError(const std::string& name);
};

/// Names of the built-in smooth problems.
std::vector<std::string> builtin_names();

/// Built-in smooth problem with analytic gradients:
///   concave-2    F1 = -(x1-1)^2 - x2^2, F2 = -x1^2 - (x2-1)^2 on [-2,2]^2
///   nonconvex-2  F1 = 1 - x1^2, F2 = 1 - (x2-1/2)^2 + x1^4 on [-1,1]^2
///                (non-convex image; the ridge x1 = 0 holds weak but not strong optima)
///   concave-3    F_i = -||x - a_i||^2 with a_i the vertices of a unit equilateral
///                triangle centred at the origin, on [-2,2]^2
SmoothProblem builtin_smooth(const std::string& name);

/// Grid of resolution[j] >= 2 points per axis, row-major (last axis fastest),
/// ids g0..g(M-1). F is evaluated once per node.
FiniteProblem discretize(const SmoothProblem& problem, const std::vector<int>& resolution);

/// Uniform i.i.d. utilities in [lo, hi), ids p0..p(count-1); deterministic under the seed.
FiniteProblem generate_random(int n, std::size_t count, std::uint64_t seed, double lo = -1.0,
                              double hi = 1.0);

struct SmoothSpec {
  std::string generator;
  Box box;
  std::vector<int> grid;
};

/// A parsed problem file. Smooth files also carry their grid discretization.
struct LoadedProblem {
  int n = 0;
  std::optional<SmoothProblem> smooth;
  std::optional<SmoothSpec> smooth_spec;
  std::optional<FiniteProblem> finite;  // always set: the decisions (or the grid)

  bool is_smooth() const noexcept { return smooth.has_value(); }
  const FiniteProblem& decisions() const { return *finite; }
};

LoadedProblem parse_problem(std::string_view text);
LoadedProblem load_problem_file(const std::string& path);

nlohmann::json problem_to_json(const LoadedProblem& problem);
nlohmann::json finite_to_json(const FiniteProblem& problem);
std::string serialize_problem(const LoadedProblem& problem);

LoadedProblem make_loaded(FiniteProblem problem);

}  // namespace eucone
