#pragma once

// JSON forms of every result type. The CLI wraps them in the report envelope
// described by docs/report.schema.json.

#include "eucone/certificate.hpp"
#include "eucone/cone.hpp"
#include "eucone/first_order.hpp"
#include "eucone/oracle.hpp"
#include "eucone/scalarization.hpp"
#include "eucone/zero_order.hpp"

#include <nlohmann/json.hpp>

namespace eucone {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const Membership& m);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const ScalarizationResult& r);
nlohmann::json to_json(const OptimalSetReport& r, bool include_timing = true);
nlohmann::json to_json(const NestingReport& r);
nlohmann::json to_json(const DualCheckReport& r);
nlohmann::json to_json(const WeightedScalarization& w);
nlohmann::json to_json(const PairResidual& r);
nlohmann::json to_json(const MultiplierCertificate& m);
nlohmann::json to_json(const LocalCertificate& c);
nlohmann::json vector_json(const Eigen::VectorXd& v);

}  // namespace eucone
