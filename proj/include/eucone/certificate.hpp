#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eucone {

enum class Verdict {
  Optimal,       // the tested optimality notion holds
  NotOptimal,    // a witness violates it
  Marginal,      // a competitor falls inside the tolerance band of a strict inequality
  Unsupported,   // hypothesis of the sufficient condition not met
  Inapplicable,  // the condition does not apply (e.g. boundary maximizer)
};

std::string_view to_string(Verdict v);

/// Outcome of an optimality test.
struct Certificate {
  std::string test;  // e.g. "scalarization-weak", "cross-product-strong"
  Verdict verdict = Verdict::Inapplicable;
  std::vector<std::pair<std::string, double>> residuals;
  std::optional<std::string> witness_id;
  std::string reason;

  bool holds() const noexcept { return verdict == Verdict::Optimal; }

  void add(std::string name, double value) { residuals.emplace_back(std::move(name), value); }
  std::optional<double> residual(std::string_view name) const {
    for (const auto& [k, v] : residuals) {
      if (k == name) return v;
    }
    return std::nullopt;
  }
};

}  // namespace eucone
