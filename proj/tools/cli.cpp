#include "cli.hpp"

#include "eucone/cone.hpp"
#include "eucone/first_order.hpp"
#include "eucone/oracle.hpp"
#include "eucone/problems_io.hpp"
#include "eucone/report.hpp"
#include "eucone/scalarization.hpp"
#include "eucone/zero_order.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

namespace eucone::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* command_name(Command c) {
  switch (c) {
    case Command::Certify: return "certify";
    case Command::Frontier: return "frontier";
    case Command::Sweep: return "sweep";
    case Command::Scalarize: return "scalarize";
    case Command::FirstOrder: return "firstorder";
    case Command::DualCheck: return "dualcheck";
  }
  return "?";
}

OptimalityMode parse_mode(const std::string& m) {
  if (m == "weak") return OptimalityMode::Weak;
  if (m == "strong") return OptimalityMode::Strong;
  throw UsageError("--mode must be weak or strong");
}

/// Fixed 12 significant digits for CSV cells.
std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

struct Output {
  json report;
  std::string csv;
  int exit_code = kExitOk;
};

json envelope(const RunConfig& cfg, const LoadedProblem* problem) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command_name(cfg.command);
  if (problem) {
    j["problem"] = {{"kind", problem->is_smooth() ? "smooth" : "finite"},
                    {"n", problem->n},
                    {"size", problem->decisions().size()},
                    {"provenance", problem->decisions().provenance()}};
  } else {
    j["problem"] = nullptr;
  }
  j["warnings"] = json::array();
  return j;
}

void warn_outside_family(json& report, int n, double s) {
  const ConeFamilyBounds b = family_bounds(n);
  if (!b.admits(s)) {
    report["warnings"].push_back("s=" + num(s) + " lies outside the family interval [" +
                                 num(b.s_min) + ", " + num(b.s_max) + "]");
  }
}

LoadedProblem require_problem(const RunConfig& cfg) {
  if (cfg.problem_path.empty()) throw UsageError("--problem is required for this command");
  return load_problem_file(cfg.problem_path);
}

const std::string& require_point(const RunConfig& cfg) {
  if (!cfg.point_id) throw UsageError("--point is required for this command");
  return *cfg.point_id;
}

Output run_certify(const RunConfig& cfg) {
  const LoadedProblem lp = require_problem(cfg);
  const FiniteProblem& problem = lp.decisions();
  const std::string& id = require_point(cfg);
  if (!problem.contains(id)) throw UnknownIdError(id);
  const double s = resolve_s(cfg.s_spec, problem.n());
  const OptimalityMode mode = parse_mode(cfg.mode);
  const double tol = cfg.tol.value_or(kGeometryTol);

  Output out;
  out.report = envelope(cfg, &lp);
  out.report["params"] = {{"s", s}, {"s_spec", cfg.s_spec}, {"mode", to_string(mode)}, {"tol", tol}, {"point", id}};
  warn_outside_family(out.report, problem.n(), s);

  std::vector<Certificate> certs;
  certs.push_back(weak_optimal(problem, id, s, tol));
  certs.push_back(strong_optimal(problem, id, s, tol));
  const bool upper = std::abs(s - family_bounds(problem.n()).s_min) <= 1e-12;
  if (upper) {
    certs.push_back(weak_upper_optimal(problem, id, tol));
    certs.push_back(strong_upper_optimal(problem, id, tol));
  }
  const Certificate& primary = mode == OptimalityMode::Weak ? certs[0] : certs[1];

  json list = json::array();
  for (const Certificate& c : certs) list.push_back(to_json(c));
  out.report["result"] = {{"point", id},
                          {"G", to_json(G_value(problem, id, s))},
                          {"G1", G1_value(problem, id)},
                          {"certificates", list},
                          {"verdict", to_string(primary.verdict)}};
  out.exit_code = primary.holds() ? kExitOk : kExitFalse;

  std::ostringstream csv;
  csv << "test,verdict,witness\n";
  for (const Certificate& c : certs) {
    csv << c.test << ',' << to_string(c.verdict) << ',' << c.witness_id.value_or("") << '\n';
  }
  out.csv = csv.str();
  return out;
}

Output run_frontier(const RunConfig& cfg) {
  const LoadedProblem lp = require_problem(cfg);
  const FiniteProblem& problem = lp.decisions();
  const double s = resolve_s(cfg.s_spec, problem.n());
  const OptimalityMode mode = parse_mode(cfg.mode);
  const double tol = cfg.tol.value_or(kGeometryTol);

  const OptimalSetReport report = brute_force_optimal_set(problem, s, mode, tol);
  Output out;
  out.report = envelope(cfg, &lp);
  out.report["params"] = {{"s", s}, {"s_spec", cfg.s_spec}, {"mode", to_string(mode)}, {"tol", tol}};
  warn_outside_family(out.report, problem.n(), s);
  out.report["result"] = to_json(report);

  const std::vector<bool> opt = brute_force_flags(problem, s, mode, tol);
  const std::vector<bool> par = pareto_flags(problem, mode, tol);
  std::ostringstream csv;
  csv << "id,optimal,pareto\n";
  for (std::size_t i = 0; i < problem.size(); ++i) {
    csv << problem[i].id << ',' << (opt[i] ? 1 : 0) << ',' << (par[i] ? 1 : 0) << '\n';
  }
  out.csv = csv.str();
  return out;
}

Output run_sweep(const RunConfig& cfg) {
  const LoadedProblem lp = require_problem(cfg);
  const FiniteProblem& problem = lp.decisions();
  const OptimalityMode mode = parse_mode(cfg.mode);
  const double tol = cfg.tol.value_or(kGeometryTol);

  const NestingReport report = nesting_check(problem, default_s_grid(problem.n()), mode, tol);
  Output out;
  out.report = envelope(cfg, &lp);
  out.report["params"] = {{"mode", to_string(mode)}, {"tol", tol}, {"grid_points", report.s_grid.size()}};
  for (const std::string& w : report.warnings) out.report["warnings"].push_back(w);
  out.report["result"] = to_json(report);
  out.exit_code = report.ok() ? kExitOk : kExitFalse;

  std::ostringstream csv;
  csv << "s,optimal_count\n";
  for (std::size_t i = 0; i < report.s_grid.size(); ++i) {
    csv << num(report.s_grid[i]) << ',' << report.sizes[i] << '\n';
  }
  out.csv = csv.str();
  return out;
}

Output run_scalarize(const RunConfig& cfg) {
  const LoadedProblem lp = require_problem(cfg);
  const FiniteProblem& problem = lp.decisions();
  if (!cfg.lambda) throw UsageError("--lambda is required for scalarize");
  const double s = resolve_s(cfg.s_spec, problem.n());
  const double tol = cfg.tol.value_or(kGeometryTol);
  const UtilityVector lambda = Eigen::Map<const Eigen::VectorXd>(
      cfg.lambda->data(), static_cast<Eigen::Index>(cfg.lambda->size()));

  const WeightedScalarization w = weighted_scalarize(problem, lambda, s, tol);
  Output out;
  out.report = envelope(cfg, &lp);
  out.report["params"] = {{"s", s}, {"s_spec", cfg.s_spec}, {"tol", tol}, {"lambda", vector_json(lambda)}};
  warn_outside_family(out.report, problem.n(), s);
  if (!w.weight.interior()) {
    out.report["warnings"].push_back("weight is not interior to the dual cone; optimality claim unsupported");
  }
  out.report["result"] = to_json(w);

  std::ostringstream csv;
  csv << "id,value,claim\n";
  for (const std::string& id : w.maximizer_ids) {
    csv << id << ',' << num(lambda.dot(problem.at(id).F)) << ',' << to_string(w.claim) << '\n';
  }
  out.csv = csv.str();
  return out;
}

Output run_firstorder(const RunConfig& cfg) {
  const LoadedProblem lp = require_problem(cfg);
  if (!lp.is_smooth()) throw UsageError("firstorder needs a smooth problem file");
  const SmoothProblem& smooth = *lp.smooth;
  const FiniteProblem& grid = lp.decisions();
  const double s = resolve_s(cfg.s_spec, smooth.n());
  const double tol = cfg.tol.value_or(kResidualTol);

  DecisionPoint x;
  std::string label;
  if (cfg.point_id) {
    x = grid.at(*cfg.point_id).x;
    label = *cfg.point_id;
  } else if (cfg.point_coords) {
    x = Eigen::Map<const Eigen::VectorXd>(cfg.point_coords->data(),
                                          static_cast<Eigen::Index>(cfg.point_coords->size()));
    if (x.size() != smooth.k()) throw DimensionError("--x needs " + std::to_string(smooth.k()) + " coordinates");
    label = "x";
  } else {
    throw UsageError("firstorder needs --point or --x");
  }

  Output out;
  out.report = envelope(cfg, &lp);
  out.report["params"] = {{"s", s}, {"s_spec", cfg.s_spec}, {"tol", tol}, {"point", label},
                          {"x", vector_json(x)}};
  warn_outside_family(out.report, smooth.n(), s);

  json result = {{"point", label}, {"x", vector_json(x)}, {"F", vector_json(smooth.evaluate(x))}};
  std::ostringstream csv;
  csv << "quantity,value\n";
  if (!smooth.box().interior(x)) {
    result["verdict"] = "inapplicable";
    result["reason"] = "point is not interior to the box";
    result["pair"] = nullptr;
    result["multiplier"] = nullptr;
    result["local"] = nullptr;
    out.report["result"] = result;
    out.exit_code = kExitFalse;
    csv << "verdict,inapplicable\n";
    out.csv = csv.str();
    return out;
  }

  const MultiplierCertificate mult = multiplier_exists(smooth, x, s);
  const LocalCertificate local = certify_local_weak_optimal(smooth, x, s, 1e-2, 1000, cfg.seed);
  const std::optional<WeakPair> pair = best_pair_for(smooth, grid, x, label, s);

  bool residuals_ok = true;
  json pair_json = nullptr;
  if (pair) {
    const char* status = pair->status == PairStatus::Located ? "located"
                         : pair->status == PairStatus::Inapplicable ? "inapplicable" : "rejected";
    pair_json = {{"status", status},
                 {"ystar_grid_id", pair->ystar_id},
                 {"ystar", vector_json(pair->ystar)},
                 {"refined_value", pair->refined_value}};
    if (pair->status == PairStatus::Located) {
      pair_json["residuals"] = to_json(pair->residual);
      residuals_ok = pair->residual.eq15 <= tol && pair->residual.eq16 <= tol;
      csv << "eq15," << num(pair->residual.eq15) << "\neq16," << num(pair->residual.eq16) << '\n';
    }
  } else {
    const PairResidual self = pair_residuals(smooth, x, x, s);
    pair_json = {{"status", "degenerate"}, {"residuals", to_json(self)}};
  }
  const bool verdict = mult.exists && residuals_ok;
  result["pair"] = pair_json;
  result["multiplier"] = to_json(mult);
  result["local"] = to_json(local);
  result["verdict"] = verdict ? "consistent" : "violated";
  out.report["result"] = result;
  out.exit_code = verdict ? kExitOk : kExitFalse;

  csv << "multiplier_exists," << (mult.exists ? 1 : 0) << '\n'
      << "axial_projection_norm," << num(mult.axial_projection_norm) << '\n'
      << "threshold," << num(mult.threshold) << '\n'
      << "locally_certified," << (local.certified ? 1 : 0) << '\n';
  out.csv = csv.str();
  return out;
}

Output run_dualcheck(const RunConfig& cfg) {
  std::optional<LoadedProblem> lp;
  int n = 0;
  if (cfg.n) {
    n = *cfg.n;
  } else if (!cfg.problem_path.empty()) {
    lp = load_problem_file(cfg.problem_path);
    n = lp->n;
  } else {
    throw UsageError("dualcheck needs --n or --problem");
  }
  if (n < 2) throw UsageError("--n must be at least 2");
  if (cfg.samples < 1) throw UsageError("--samples must be positive");
  const double s = resolve_s(cfg.s_spec, n);
  const DualCheckReport report = sampled_dual_check(EuclideanCone::family(n, s), cfg.samples, cfg.seed);

  Output out;
  out.report = envelope(cfg, lp ? &*lp : nullptr);
  out.report["params"] = {{"s", s}, {"s_spec", cfg.s_spec}, {"n", n}, {"samples", cfg.samples}, {"seed", cfg.seed}};
  warn_outside_family(out.report, n, s);
  out.report["result"] = to_json(report);
  out.exit_code = report.ok() ? kExitOk : kExitFalse;

  std::ostringstream csv;
  csv << "n,s,dual_s,samples,seed,pairs_checked,min_inner_product,violations,outside_checked,counterexamples_found\n"
      << report.n << ',' << num(report.s) << ',' << num(report.dual_s) << ',' << report.samples << ','
      << report.seed << ',' << report.pairs_checked << ',' << num(report.min_inner_product) << ','
      << report.violations << ',' << report.outside_checked << ',' << report.counterexamples_found << '\n';
  out.csv = csv.str();
  return out;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  // Write to a sibling temporary and rename so readers never see a partial report.
  const std::filesystem::path target(cfg.out_path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << text;
    if (!f.flush()) throw std::runtime_error("cannot write '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message,
                const std::string& path = {}) {
  json e = {{"kind", kind}, {"message", message}};
  if (!path.empty()) e["path"] = path;
  err << json{{"error", e}}.dump() << '\n';
}

}  // namespace

double resolve_s(const std::string& spec, int n) {
  const ConeFamilyBounds b = family_bounds(n);
  if (spec == "upper") return b.s_min;
  if (spec == "lower") return b.s_max;
  if (spec == "selfdual") return 1.0 / std::numbers::sqrt2;
  std::size_t used = 0;
  double s = 0.0;
  try {
    s = std::stod(spec, &used);
  } catch (const std::exception&) {
    throw UsageError("--s must be a number or one of upper, lower, selfdual");
  }
  if (used != spec.size()) throw UsageError("--s must be a number or one of upper, lower, selfdual");
  require_valid_s(s);
  return s;
}

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Optimality certificates for multi-objective maximization under Euclidean preference cones"};
  app.require_subcommand(1, 1);

  std::string format = "json";
  double tol = 0.0;
  std::string point;
  std::vector<double> lambda;
  std::vector<double> coords;
  int n = 0;

  auto add_common = [&](CLI::App* sub, bool needs_problem) {
    auto* opt = sub->add_option("--problem", cfg.problem_path, "problem file (JSON)");
    if (needs_problem) opt->required();
    sub->add_option("--s", cfg.s_spec, "cone threshold: number, upper, lower or selfdual");
    sub->add_option("--tol", tol, "tolerance (default 1e-9; 1e-6 for first-order residuals)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--out", cfg.out_path, "output path (default: standard output)");
  };

  auto* certify = app.add_subcommand("certify", "certify one decision (scalarization and cross-product tests)");
  add_common(certify, true);
  certify->add_option("--mode", cfg.mode, "weak or strong")->check(CLI::IsMember({"weak", "strong"}));
  certify->add_option("--point", point, "decision id")->required();

  auto* frontier = app.add_subcommand("frontier", "brute-force optimal set and Pareto set");
  add_common(frontier, true);
  frontier->add_option("--mode", cfg.mode, "weak or strong")->check(CLI::IsMember({"weak", "strong"}));

  auto* sweep = app.add_subcommand("sweep", "optimal-set sizes and nesting over a 9-point s grid");
  add_common(sweep, true);
  sweep->add_option("--mode", cfg.mode, "weak or strong")->check(CLI::IsMember({"weak", "strong"}));

  auto* scalarize = app.add_subcommand("scalarize", "weighted-sum maximizers with a dual-cone weight");
  add_common(scalarize, true);
  scalarize->add_option("--lambda", lambda, "comma-separated weights")->delimiter(',')->required();

  auto* firstorder = app.add_subcommand("firstorder", "pair residuals and multiplier at a point of a smooth problem");
  add_common(firstorder, true);
  firstorder->add_option("--point", point, "grid decision id");
  firstorder->add_option("--x", coords, "comma-separated decision coordinates")->delimiter(',');

  auto* dualcheck = app.add_subcommand("dualcheck", "sampled check of the dual-cone formula");
  add_common(dualcheck, false);
  dualcheck->add_option("--n", n, "objective dimension (instead of --problem)")->check(CLI::Range(2, 1000));
  dualcheck->add_option("--samples", cfg.samples, "number of samples")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream er;
    const int code = app.exit(e, o, er);
    throw ArgsExit{code == 0 ? kExitOk : kExitError, code == 0 ? o.str() : e.what()};
  }

  if (certify->parsed()) cfg.command = Command::Certify;
  if (frontier->parsed()) cfg.command = Command::Frontier;
  if (sweep->parsed()) cfg.command = Command::Sweep;
  if (scalarize->parsed()) cfg.command = Command::Scalarize;
  if (firstorder->parsed()) cfg.command = Command::FirstOrder;
  if (dualcheck->parsed()) cfg.command = Command::DualCheck;

  cfg.format = format == "csv" ? Format::Csv : Format::Json;
  if (tol > 0.0) cfg.tol = tol;
  if (!point.empty()) cfg.point_id = point;
  if (!lambda.empty()) cfg.lambda = lambda;
  if (!coords.empty()) cfg.point_coords = coords;
  if (n > 0) cfg.n = n;
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Output result;
    switch (config.command) {
      case Command::Certify: result = run_certify(config); break;
      case Command::Frontier: result = run_frontier(config); break;
      case Command::Sweep: result = run_sweep(config); break;
      case Command::Scalarize: result = run_scalarize(config); break;
      case Command::FirstOrder: result = run_firstorder(config); break;
      case Command::DualCheck: result = run_dualcheck(config); break;
    }
    const std::string text = config.format == Format::Csv ? result.csv : result.report.dump(2) + "\n";
    write_output(config, text, out);
    return result.exit_code;
  } catch (const ProblemParseError& e) {
    emit_error(err, std::string(to_string(e.kind())), e.what(), e.path());
  } catch (const UsageError& e) {
    emit_error(err, "usage", e.what());
  } catch (const UnknownIdError& e) {
    emit_error(err, "unknown-id", e.what());
  } catch (const DimensionError& e) {
    emit_error(err, "dimension", e.what());
  } catch (const DomainError& e) {
    emit_error(err, "domain", e.what());
  } catch (const std::exception& e) {
    emit_error(err, "io", e.what());
  }
  return kExitError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const ArgsExit& e) {
    if (e.code == kExitOk) {
      out << e.text;
    } else {
      emit_error(err, "usage", e.text);
    }
    return e.code;
  }
  return run(cfg, out, err);
}

}  // namespace eucone::cli
