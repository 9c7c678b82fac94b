#include "eucone/report.hpp"

#include <cmath>

namespace eucone {

using nlohmann::json;

namespace {

/// JSON has no infinities; they are written as strings.
json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

json vector_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(number(v[i]));
  return a;
}

json to_json(const Membership& m) {
  return {{"class", to_string(m.cls)}, {"cosine", number(m.cosine)}};
}

json to_json(const Certificate& c) {
  json residuals = json::object();
  for (const auto& [name, value] : c.residuals) residuals[name] = number(value);
  json j = {{"test", c.test},
            {"verdict", to_string(c.verdict)},
            {"residuals", residuals},
            {"witness", c.witness_id ? json(*c.witness_id) : json(nullptr)}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

json to_json(const ScalarizationResult& r) {
  return {{"value", r.value}, {"argmax_ids", r.argmax_ids}, {"unique_in_utility", r.unique_in_utility}};
}

json to_json(const OptimalSetReport& r, bool include_timing) {
  json j = {{"s", r.s},
            {"mode", to_string(r.mode)},
            {"optimal_ids", r.optimal_ids},
            {"pareto_ids", r.pareto_ids}};
  if (include_timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

json to_json(const NestingReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"subset", v.subset}, {"superset", v.superset}, {"id", v.id}});
  }
  json rows = json::array();
  for (std::size_t i = 0; i < r.s_grid.size(); ++i) {
    rows.push_back({{"s", r.s_grid[i]}, {"size", r.sizes[i]}});
  }
  return {{"mode", to_string(r.mode)},
          {"grid", rows},
          {"upper_size", r.upper_size},
          {"pareto_size", r.pareto_size},
          {"lower_size", r.lower_size},
          {"violations", violations},
          {"ok", r.ok()}};
}

json to_json(const DualCheckReport& r) {
  return {{"n", r.n},
          {"s", r.s},
          {"dual_s", r.dual_s},
          {"samples", r.samples},
          {"seed", r.seed},
          {"pairs_checked", r.pairs_checked},
          {"min_inner_product", number(r.min_inner_product)},
          {"violations", r.violations},
          {"margin", r.margin},
          {"outside_checked", r.outside_checked},
          {"counterexamples_found", r.counterexamples_found},
          {"ok", r.ok()}};
}

json to_json(const WeightedScalarization& w) {
  return {{"weight", to_json(w.weight)},
          {"value", w.value},
          {"maximizer_ids", w.maximizer_ids},
          {"claim", to_string(w.claim)}};
}

json to_json(const PairResidual& r) {
  json j = {{"eq15", r.eq15}, {"eq16", r.eq16}, {"degenerate", r.degenerate}};
  j["eq19"] = r.eq19 ? json(*r.eq19) : json(nullptr);
  j["eq17"] = r.eq17 ? json(*r.eq17) : json(nullptr);
  j["substitution_gap"] = r.substitution_gap ? json(*r.substitution_gap) : json(nullptr);
  return j;
}

json to_json(const MultiplierCertificate& m) {
  return {{"exists", m.exists},
          {"lambda", m.lambda ? vector_json(*m.lambda) : json(nullptr)},
          {"axial_projection_norm", m.axial_projection_norm},
          {"threshold", m.threshold},
          {"gradient_matrix_rank", m.gradient_matrix_rank},
          {"rank_ambiguous", m.rank_ambiguous},
          {"stationarity_residual", m.stationarity_residual}};
}

json to_json(const LocalCertificate& c) {
  return {{"certified", c.certified},
          {"evaluations", c.evaluations},
          {"witness", c.witness ? vector_json(*c.witness) : json(nullptr)}};
}

}  // namespace eucone
