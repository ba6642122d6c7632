#include "dsf/report_json.hpp"

namespace dsf {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Diagnostic& diagnostic) {
  return {{"path", diagnostic.path},
          {"code", diagnostic.code},
          {"severity", to_token(diagnostic.severity)},
          {"message", diagnostic.message}};
}

ordered_json to_json(const ValidationReport& report) {
  ordered_json findings = ordered_json::array();
  for (const Diagnostic& finding : report.findings) findings.push_back(to_json(finding));

  ordered_json sections = ordered_json::array();
  for (const SectionCompleteness& section : report.sections) {
    sections.push_back({{"section", to_token(section.section)},
                        {"populated", section.populated},
                        {"total", section.total}});
  }
  return {{"valid", report.valid},
          {"findings", std::move(findings)},
          {"completeness",
           {{"populated", report.populated_fields},
            {"total", report.total_fields},
            {"sections", std::move(sections)}}}};
}

ordered_json to_json(const RiskItem& item) {
  ordered_json out{{"rule", item.rule_id}};
  if (const auto* bias = std::get_if<BiasCategory>(&item.category)) {
    out["category_kind"] = "bias";
    out["category"] = to_token(*bias);
  } else {
    out["category_kind"] = "data";
    out["category"] = to_token(std::get<DataRiskKind>(item.category));
  }
  out["likelihood"] = to_token(item.likelihood);
  out["severity"] = to_token(item.severity);
  out["trigger"] = item.trigger;
  out["message"] = item.message;
  if (item.mitigation) out["mitigation"] = *item.mitigation;
  if (item.prohibition) out["prohibition"] = *item.prohibition;
  return out;
}

ordered_json to_json(const RiskAssessment& assessment) {
  ordered_json items = ordered_json::array();
  for (const RiskItem& item : assessment.items) items.push_back(to_json(item));
  ordered_json out{{"generic_level", to_token(assessment.generic_level)},
                   {"legal_tier", to_token(assessment.legal_tier)}};
  out["declared_generic"] =
      assessment.declared_generic ? ordered_json(to_token(*assessment.declared_generic))
                                  : ordered_json(nullptr);
  out["declared_legal"] =
      assessment.declared_legal ? ordered_json(to_token(*assessment.declared_legal))
                                : ordered_json(nullptr);
  out["items"] = std::move(items);
  return out;
}

ordered_json to_json(const ObligationResult& result) {
  return {{"id", result.id},
          {"law", to_token(result.law)},
          {"citation", result.citation},
          {"description", result.description},
          {"status", to_token(result.status)},
          {"missing_fields", result.missing_fields}};
}

ordered_json to_json(const ComplianceReport& report) {
  ordered_json obligations = ordered_json::array();
  for (const ObligationResult& result : report.obligations) {
    obligations.push_back(to_json(result));
  }
  return {{"gdpr_applicable", report.gdpr_applicable},
          {"ai_act_tier", to_token(report.ai_act_tier)},
          {"obligations", std::move(obligations)}};
}

ordered_json to_json(const CoverageMatrix& matrix) {
  ordered_json cells = ordered_json::array();
  for (const auto& row : matrix.cells) {
    ordered_json tokens = ordered_json::array();
    for (CoverageMark mark : row) tokens.push_back(to_token(mark));
    cells.push_back(std::move(tokens));
  }
  return {{"profiles", matrix.profiles},
          {"categories", matrix.categories},
          {"cells", std::move(cells)}};
}

}  // namespace dsf
