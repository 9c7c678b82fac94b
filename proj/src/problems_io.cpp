#include "eucone/problems_io.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace eucone {

using nlohmann::json;
using Kind = ProblemParseError::Kind;

std::string_view to_string(ProblemParseError::Kind kind) {
  switch (kind) {
    case Kind::MalformedJson: return "malformed-json";
    case Kind::SchemaViolation: return "schema-violation";
    case Kind::UnknownGenerator: return "unknown-generator";
    case Kind::DuplicateId: return "duplicate-id";
  }
  return "?";
}

namespace {

SmoothProblem make_concave2() {
  Box box{Eigen::Vector2d(-2.0, -2.0), Eigen::Vector2d(2.0, 2.0)};
  auto F = [](const DecisionPoint& x) {
    UtilityVector f(2);
    f << -(x[0] - 1.0) * (x[0] - 1.0) - x[1] * x[1], -x[0] * x[0] - (x[1] - 1.0) * (x[1] - 1.0);
    return f;
  };
  auto J = [](const DecisionPoint& x) {
    Matrix j(2, 2);
    j << -2.0 * (x[0] - 1.0), -2.0 * x[1],
         -2.0 * x[0], -2.0 * (x[1] - 1.0);
    return j;
  };
  return {"concave-2", 2, std::move(box), F, J};
}

SmoothProblem make_nonconvex2() {
  Box box{Eigen::Vector2d(-1.0, -1.0), Eigen::Vector2d(1.0, 1.0)};
  auto F = [](const DecisionPoint& x) {
    UtilityVector f(2);
    const double x1sq = x[0] * x[0];
    f << 1.0 - x1sq, 1.0 - (x[1] - 0.5) * (x[1] - 0.5) + x1sq * x1sq;
    return f;
  };
  auto J = [](const DecisionPoint& x) {
    Matrix j(2, 2);
    j << -2.0 * x[0], 0.0,
         4.0 * x[0] * x[0] * x[0], -2.0 * (x[1] - 0.5);
    return j;
  };
  return {"nonconvex-2", 2, std::move(box), F, J};
}

Matrix triangle_anchors() {
  const double h = std::sqrt(3.0) / 2.0;
  Matrix a(3, 2);
  a << 1.0, 0.0,
       -0.5, h,
       -0.5, -h;
  return a;
}

SmoothProblem make_concave3() {
  Box box{Eigen::Vector2d(-2.0, -2.0), Eigen::Vector2d(2.0, 2.0)};
  const Matrix anchors = triangle_anchors();
  auto F = [anchors](const DecisionPoint& x) {
    UtilityVector f(3);
    for (int i = 0; i < 3; ++i) f[i] = -(x.transpose() - anchors.row(i)).squaredNorm();
    return f;
  };
  auto J = [anchors](const DecisionPoint& x) {
    Matrix j(3, 2);
    for (int i = 0; i < 3; ++i) j.row(i) = -2.0 * (x.transpose() - anchors.row(i));
    return j;
  };
  return {"concave-3", 3, std::move(box), F, J};
}

using Factory = std::function<SmoothProblem()>;

const std::map<std::string, Factory>& registry() {
  static const std::map<std::string, Factory> r = {
      {"concave-2", make_concave2},
      {"concave-3", make_concave3},
      {"nonconvex-2", make_nonconvex2},
  };
  return r;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw ProblemParseError(Kind::SchemaViolation, path, msg);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "/" + key, "missing required field");
  return *it;
}

int integer_field(const json& obj, const std::string& path, const char* key) {
  const json& v = field(obj, path, key);
  if (!v.is_number_integer()) schema_error(path + "/" + key, "expected an integer");
  return v.get<int>();
}

Eigen::VectorXd number_array(const json& v, const std::string& path,
                             std::optional<Eigen::Index> expected_length = std::nullopt) {
  if (!v.is_array()) schema_error(path, "expected an array of numbers");
  if (expected_length && static_cast<Eigen::Index>(v.size()) != *expected_length) {
    schema_error(path, "expected " + std::to_string(*expected_length) + " numbers, got " +
                           std::to_string(v.size()));
  }
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) schema_error(path + "/" + std::to_string(i), "expected a number");
    out[static_cast<Eigen::Index>(i)] = v[i].get<double>();
    if (!std::isfinite(out[static_cast<Eigen::Index>(i)])) {
      schema_error(path + "/" + std::to_string(i), "expected a finite number");
    }
  }
  return out;
}

json to_array(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

LoadedProblem parse_finite(const json& doc, int n) {
  const json& list = field(doc, "", "decisions");
  if (!list.is_array()) schema_error("/decisions", "expected an array");
  if (list.empty()) schema_error("/decisions", "at least one decision is required");
  std::vector<Decision> decisions;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "/decisions/" + std::to_string(i);
    const json& item = list[i];
    if (!item.is_object()) schema_error(path, "expected an object");
    const json& id = field(item, path, "id");
    if (!id.is_string() || id.get<std::string>().empty()) schema_error(path + "/id", "expected a non-empty string");
    Decision d;
    d.id = id.get<std::string>();
    if (!seen.insert(d.id).second) {
      throw ProblemParseError(Kind::DuplicateId, path + "/id", "duplicate decision id '" + d.id + "'");
    }
    d.x = item.contains("x") ? number_array(item["x"], path + "/x") : DecisionPoint();
    d.F = number_array(field(item, path, "F"), path + "/F", n);
    decisions.push_back(std::move(d));
  }
  std::string provenance = "file";
  if (auto it = doc.find("provenance"); it != doc.end()) {
    if (!it->is_string()) schema_error("/provenance", "expected a string");
    provenance = it->get<std::string>();
  }
  return make_loaded(FiniteProblem(n, std::move(decisions), std::move(provenance)));
}

LoadedProblem parse_smooth(const json& doc, int n) {
  const json& gen = field(doc, "", "generator");
  if (!gen.is_string()) schema_error("/generator", "expected a string");
  const std::string name = gen.get<std::string>();
  std::optional<SmoothProblem> base;
  try {
    base = builtin_smooth(name);
  } catch (const UnknownGeneratorError& e) {
    throw ProblemParseError(Kind::UnknownGenerator, "/generator", e.what());
  }
  if (base->n() != n) {
    schema_error("/n", "generator '" + name + "' has " + std::to_string(base->n()) +
                           " objectives, file declares " + std::to_string(n));
  }
  const int k = base->k();
  SmoothSpec spec;
  spec.generator = name;
  spec.box = base->box();
  if (auto it = doc.find("box"); it != doc.end()) {
    if (!it->is_object()) schema_error("/box", "expected an object");
    spec.box.lower = number_array(field(*it, "/box", "lower"), "/box/lower", k);
    spec.box.upper = number_array(field(*it, "/box", "upper"), "/box/upper", k);
    for (int j = 0; j < k; ++j) {
      if (!(spec.box.lower[j] < spec.box.upper[j])) {
        schema_error("/box/lower/" + std::to_string(j), "lower bound must be below the upper bound");
      }
    }
  }
  const json& grid = field(doc, "", "grid");
  if (!grid.is_array() || static_cast<int>(grid.size()) != k) {
    schema_error("/grid", "expected an array of " + std::to_string(k) + " integers");
  }
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (!grid[j].is_number_integer() || grid[j].get<int>() < 2) {
      schema_error("/grid/" + std::to_string(j), "grid resolution must be an integer >= 2");
    }
    spec.grid.push_back(grid[j].get<int>());
  }

  LoadedProblem out;
  out.n = n;
  out.smooth = base->with_box(spec.box);
  out.finite = discretize(*out.smooth, spec.grid);
  out.smooth_spec = std::move(spec);
  return out;
}

}  // namespace

UnknownGeneratorError::UnknownGeneratorError(const std::string& name)
    : std::invalid_argument("unknown generator '" + name + "'; registered: " + join(builtin_names())) {}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

SmoothProblem builtin_smooth(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownGeneratorError(name);
  return it->second();
}

FiniteProblem discretize(const SmoothProblem& problem, const std::vector<int>& resolution) {
  const int k = problem.k();
  if (static_cast<int>(resolution.size()) != k) {
    throw DimensionError("grid resolution must list one count per decision coordinate");
  }
  std::size_t total = 1;
  for (int m : resolution) {
    if (m < 2) throw DomainError("grid resolution must be at least 2 per axis");
    total *= static_cast<std::size_t>(m);
  }
  const Box& box = problem.box();
  std::vector<Decision> decisions;
  decisions.reserve(total);
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  for (std::size_t g = 0; g < total; ++g) {
    DecisionPoint x(k);
    for (int j = 0; j < k; ++j) {
      const double t = static_cast<double>(idx[static_cast<std::size_t>(j)]) / (resolution[static_cast<std::size_t>(j)] - 1);
      x[j] = box.lower[j] + (box.upper[j] - box.lower[j]) * t;
    }
    UtilityVector f = problem.evaluate(x);
    decisions.push_back({"g" + std::to_string(g), std::move(x), std::move(f)});
    for (int j = k - 1; j >= 0; --j) {
      if (++idx[static_cast<std::size_t>(j)] < resolution[static_cast<std::size_t>(j)]) break;
      idx[static_cast<std::size_t>(j)] = 0;
    }
  }
  std::ostringstream prov;
  prov << "grid:" << problem.name();
  for (int m : resolution) prov << ':' << m;
  return {problem.n(), std::move(decisions), prov.str()};
}

FiniteProblem generate_random(int n, std::size_t count, std::uint64_t seed, double lo, double hi) {
  if (n < 2) throw DomainError("generate_random: need n >= 2");
  if (count < 1) throw DomainError("generate_random: need at least one decision");
  if (!(lo < hi)) throw DomainError("generate_random: empty utility range");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<Decision> decisions;
  decisions.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    UtilityVector f(n);
    for (int j = 0; j < n; ++j) f[j] = u(rng);
    decisions.push_back({"p" + std::to_string(i), DecisionPoint(), std::move(f)});
  }
  std::ostringstream prov;
  prov << "random:n=" << n << ":count=" << count << ":seed=" << seed;
  return {n, std::move(decisions), prov.str()};
}

LoadedProblem make_loaded(FiniteProblem problem) {
  LoadedProblem out;
  out.n = problem.n();
  out.finite = std::move(problem);
  return out;
}

LoadedProblem parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProblemParseError(Kind::MalformedJson, "", e.what());
  }
  if (!doc.is_object()) schema_error("", "expected a JSON object");
  const int version = integer_field(doc, "", "schema_version");
  if (version != kProblemSchemaVersion) {
    schema_error("/schema_version", "unsupported schema version " + std::to_string(version));
  }
  const int n = integer_field(doc, "", "n");
  if (n < 2) schema_error("/n", "objective dimension must be at least 2");
  const json& kind = field(doc, "", "kind");
  if (!kind.is_string()) schema_error("/kind", "expected \"finite\" or \"smooth\"");
  const std::string k = kind.get<std::string>();
  if (k == "finite") return parse_finite(doc, n);
  if (k == "smooth") return parse_smooth(doc, n);
  schema_error("/kind", "expected \"finite\" or \"smooth\", got \"" + k + "\"");
}

LoadedProblem load_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open problem file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

json finite_to_json(const FiniteProblem& problem) {
  json doc;
  doc["schema_version"] = kProblemSchemaVersion;
  doc["kind"] = "finite";
  doc["n"] = problem.n();
  doc["provenance"] = problem.provenance();
  json list = json::array();
  for (const Decision& d : problem.decisions()) {
    list.push_back({{"id", d.id}, {"x", to_array(d.x)}, {"F", to_array(d.F)}});
  }
  doc["decisions"] = std::move(list);
  return doc;
}

json problem_to_json(const LoadedProblem& problem) {
  if (!problem.is_smooth()) return finite_to_json(problem.decisions());
  const SmoothSpec& spec = *problem.smooth_spec;
  json doc;
  doc["schema_version"] = kProblemSchemaVersion;
  doc["kind"] = "smooth";
  doc["n"] = problem.n;
  doc["generator"] = spec.generator;
  doc["box"] = {{"lower", to_array(spec.box.lower)}, {"upper", to_array(spec.box.upper)}};
  doc["grid"] = spec.grid;
  return doc;
}

std::string serialize_problem(const LoadedProblem& problem) {
  return problem_to_json(problem).dump(2) + "\n";
}

}  // namespace eucone
