#pragma once

#include <json.hpp>

#include "dsf/compliance.hpp"
#include "dsf/coverage.hpp"
#include "dsf/risk.hpp"
#include "dsf/validator.hpp"

// JSON bodies for the report types. Callers wrap these in whatever envelope
// their output channel needs.

namespace dsf {

nlohmann::ordered_json to_json(const Diagnostic& diagnostic);
nlohmann::ordered_json to_json(const ValidationReport& report);
nlohmann::ordered_json to_json(const RiskItem& item);
nlohmann::ordered_json to_json(const RiskAssessment& assessment);
nlohmann::ordered_json to_json(const ObligationResult& result);
nlohmann::ordered_json to_json(const ComplianceReport& report);
nlohmann::ordered_json to_json(const CoverageMatrix& matrix);

}  // namespace dsf
