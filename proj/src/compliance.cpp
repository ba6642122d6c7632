#include "dsf/compliance.hpp"

#include <algorithm>
#include <cctype>

#include "dsf/field_registry.hpp"

namespace dsf {
namespace {

bool entry_contains(const std::string& entry, const std::string& token) {
  auto lower = [](const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
  };
  return lower(entry).find(lower(token)) != std::string::npos;
}

bool evidence_present(const Datasheet& ds, const std::string& path,
                      const std::optional<std::string>& required_token) {
  std::optional<FieldValue> value = get_field(ds, path);
  if (!value.has_value()) return false;
  if (const auto* list = std::get_if<TextList>(&*value)) {
    if (list->empty()) return false;
    if (required_token) {
      return std::any_of(list->begin(), list->end(), [&](const std::string& entry) {
        return entry_contains(entry, *required_token);
      });
    }
  }
  return true;
}

bool special_or_genomic(const Datasheet& ds) {
  const auto& special = ds.personal_data.special_categories;
  if (special.has_value() && !special->empty()) return true;
  return ds.characteristics.media_type == MediaType::Genomic;
}

std::vector<Obligation> build_catalog() {
  std::vector<Obligation> catalog;
  catalog.push_back({"G-ART9", Law::Gdpr, "GDPR Art. 9",
                     "processing of special categories of personal data",
                     {"personal_data.special_categories", "personal_data.sensitivity",
                      "personal_data.legal_basis"},
                     EvidenceMode::All, std::nullopt});
  catalog.push_back({"G-ART32", Law::Gdpr, "GDPR Art. 32", "security of processing",
                     {"personal_data.anonymization_techniques",
                      "risk_compliance.suggested_mitigations"},
                     EvidenceMode::Any, std::nullopt});
  catalog.push_back({"G-ART35", Law::Gdpr, "GDPR Art. 35", "data protection impact assessment",
                     {"risk_compliance.impact_assessments"},
                     EvidenceMode::All, "dpia"});
  catalog.push_back({"G-CONTROLLER", Law::Gdpr, "GDPR Art. 4(7), 24",
                     "identifiable controller and lawful basis",
                     {"metadata.publisher", "personal_data.legal_basis"},
                     EvidenceMode::All, std::nullopt});
  catalog.push_back({"G-RIGHTS", Law::Gdpr, "GDPR Art. 12-22",
                     "a route for data subjects to exercise their rights",
                     {"usage_restriction.obligations", "metadata.contact"},
                     EvidenceMode::Any, std::nullopt});
  catalog.push_back({"A-RISKTIER", Law::AiAct, "AI Act Art. 6, Annex III",
                     "declared risk tier for the intended AI system",
                     {"risk_compliance.legal_risk_level"},
                     EvidenceMode::All, std::nullopt});
  return catalog;
}

bool applies(const Obligation& obligation, const Datasheet& ds, bool gdpr_applicable) {
  if (obligation.law == Law::AiAct) return true;
  if (!gdpr_applicable) return false;
  if (obligation.id == "G-ART9") return special_or_genomic(ds);
  return true;
}

ObligationResult evaluate(const Obligation& obligation, const Datasheet& ds,
                          bool gdpr_applicable) {
  ObligationResult result{obligation.id, obligation.law, obligation.citation,
                          obligation.description, ComplianceStatus::NotApplicable, {}};
  if (!applies(obligation, ds, gdpr_applicable)) return result;

  std::vector<std::string> missing;
  std::size_t present = 0;
  for (const std::string& path : obligation.evidence_fields) {
    if (evidence_present(ds, path, obligation.required_token)) {
      ++present;
    } else {
      missing.push_back(path);
    }
  }
  bool satisfied = obligation.evidence_mode == EvidenceMode::All
                       ? missing.empty()
                       : present > 0;
  if (satisfied) {
    result.status = ComplianceStatus::Satisfied;
  } else {
    result.status = ComplianceStatus::MissingEvidence;
    result.missing_fields = std::move(missing);
  }
  return result;
}

}  // namespace

std::string_view to_token(Law law) {
  return law == Law::Gdpr ? "gdpr" : "ai-act";
}

std::string_view to_token(ComplianceStatus status) {
  switch (status) {
    case ComplianceStatus::Satisfied: return "satisfied";
    case ComplianceStatus::MissingEvidence: return "missing-evidence";
    case ComplianceStatus::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

const std::vector<Obligation>& obligation_catalog() {
  static const std::vector<Obligation> catalog = build_catalog();
  return catalog;
}

ComplianceReport check_compliance(const Datasheet& ds) {
  ComplianceReport report;
  report.gdpr_applicable = ds.personal_data.contains_personal_data != false;
  if (ds.risk_compliance.legal_risk_level.has_value()) {
    report.ai_act_tier = *ds.risk_compliance.legal_risk_level;
  } else {
    report.ai_act_tier = special_or_genomic(ds) ? LegalRiskTier::High : LegalRiskTier::Limited;
  }
  for (const Obligation& obligation : obligation_catalog()) {
    report.obligations.push_back(evaluate(obligation, ds, report.gdpr_applicable));
  }
  return report;
}

}  // namespace dsf
