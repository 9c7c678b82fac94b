#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace eucone::cli {

enum class Command { Certify, Frontier, Sweep, Scalarize, FirstOrder, DualCheck };
enum class Format { Json, Csv };

struct RunConfig {
  Command command = Command::Certify;
  std::string problem_path;
  std::string s_spec = "upper";  // number, or upper | lower | selfdual
  std::string mode = "strong";   // weak | strong
  std::optional<double> tol;     // default 1e-9 (geometry) or 1e-6 (first-order residuals)
  Format format = Format::Json;
  std::uint64_t seed = 1;
  std::optional<std::string> point_id;
  std::optional<std::vector<double>> point_coords;
  std::optional<std::vector<double>> lambda;
  std::size_t samples = 10000;
  std::optional<int> n;  // dualcheck without a problem file
  std::string out_path;  // empty: standard output
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

/// Resolves upper -> 1/sqrt(n), lower -> sqrt(n-1)/sqrt(n), selfdual -> 1/sqrt(2).
double resolve_s(const std::string& spec, int n);

/// Thrown by parse_args for --help and for usage errors.
struct ArgsExit {
  int code = 0;  // 0 for help
  std::string text;
};

/// Parses argv into a config.
RunConfig parse_args(int argc, const char* const* argv);

/// Runs one command. Reports go to `out` (or --out), errors as JSON to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with usage errors mapped to exit code 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eucone::cli
