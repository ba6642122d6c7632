#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsf/datasheet.hpp"
#include "dsf/vocab.hpp"

namespace dsf {

enum class Law { Gdpr, AiAct };
enum class ComplianceStatus { Satisfied, MissingEvidence, NotApplicable };
enum class EvidenceMode { All, Any };

std::string_view to_token(Law law);
std::string_view to_token(ComplianceStatus status);

struct Obligation {
  std::string id;
  Law law;
  std::string citation;
  std::string description;
  // Field paths whose populated values count as evidence. Mode All needs
  // every field, mode Any needs at least one. List fields only count when
  // non-empty. required_token, when set, demands a list entry containing the
  // token case-insensitively.
  std::vector<std::string> evidence_fields;
  EvidenceMode evidence_mode = EvidenceMode::All;
  std::optional<std::string> required_token;
};

struct ObligationResult {
  std::string id;
  Law law;
  std::string citation;
  std::string description;
  ComplianceStatus status = ComplianceStatus::NotApplicable;
  std::vector<std::string> missing_fields;
};

struct ComplianceReport {
  bool gdpr_applicable = false;
  LegalRiskTier ai_act_tier = LegalRiskTier::Limited;
  std::vector<ObligationResult> obligations;
};

// The checked obligations, in report order.
const std::vector<Obligation>& obligation_catalog();

// Maps the datasheet against the obligation catalog. GDPR obligations apply
// unless the datasheet explicitly declares contains_personal_data=false; an
// undeclared value is treated as personal data out of caution. The AI Act
// tier echoes a declared legal_risk_level, otherwise special-category or
// genomic data implies high and anything else limited.
ComplianceReport check_compliance(const Datasheet& ds);

}  // namespace dsf
