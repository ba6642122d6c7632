#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsf/date.hpp"
#include "dsf/fraction_map.hpp"
#include "dsf/vocab.hpp"

// In-memory Healthcare AI Datasheet: ten section containers housing 55 typed
// fields. Sections are always present; individual fields are optional. An
// absent field and an empty list are distinct: absence means "not documented",
// an empty list is an affirmative "none".

namespace dsf {

using TextList = std::vector<std::string>;
using BiasLikelihoodMap = std::map<BiasCategory, Likelihood>;

struct MetadataSection {
  std::optional<std::string> title;
  std::optional<std::string> version;
  std::optional<std::string> publisher;
  std::optional<std::string> license;
  std::optional<std::string> identifier;
  std::optional<std::string> contact;

  friend bool operator==(const MetadataSection&, const MetadataSection&) = default;
};

struct PurposeSection {
  std::optional<std::string> creation_purpose;
  std::optional<std::string> intended_benefit;
  std::optional<TextList> beneficiaries;
  std::optional<TextList> intended_uses;

  friend bool operator==(const PurposeSection&, const PurposeSection&) = default;
};

struct SourceSection {
  std::optional<std::string> source_description;
  std::optional<std::string> provenance;
  std::optional<bool> ethical_approval;
  std::optional<std::string> approving_body;
  std::optional<TextList> funding_sources;

  friend bool operator==(const SourceSection&, const SourceSection&) = default;
};

struct TemporalSection {
  std::optional<Date> coverage_start;
  std::optional<Date> coverage_end;
  std::optional<Date> last_updated;
  std::optional<std::string> update_frequency;

  friend bool operator==(const TemporalSection&, const TemporalSection&) = default;
};

struct DemographicSection {
  std::optional<std::int64_t> age_min;
  std::optional<std::int64_t> age_max;
  std::optional<FractionMap> age_distribution;
  std::optional<FractionMap> gender_distribution;
  std::optional<FractionMap> ethnicity_distribution;
  std::optional<TextList> geographic_origin;
  std::optional<std::string> socioeconomic_notes;
  std::optional<TextList> underrepresented_groups;
  std::optional<BiasLikelihoodMap> bias_likelihoods;
  std::optional<std::string> demographic_notes;

  friend bool operator==(const DemographicSection&, const DemographicSection&) = default;
};

struct CharacteristicsSection {
  std::optional<MediaType> media_type;
  std::optional<std::int64_t> record_count;
  std::optional<std::string> feature_description;
  std::optional<bool> incomplete;
  std::optional<TextList> missing_elements;
  std::optional<TextList> missing_reasons;

  friend bool operator==(const CharacteristicsSection&, const CharacteristicsSection&) = default;
};

struct BiasMitigationSection {
  std::optional<TextList> applied_methods;
  std::optional<TextList> suggested_methods;
  std::optional<std::string> residual_bias_notes;

  friend bool operator==(const BiasMitigationSection&, const BiasMitigationSection&) = default;
};

struct PersonalDataSection {
  std::optional<bool> contains_personal_data;
  std::optional<TextList> personal_categories;
  std::optional<TextList> special_categories;
  std::optional<Sensitivity> sensitivity;
  std::optional<TextList> anonymization_techniques;
  std::optional<Likelihood> reidentification_risk;
  std::optional<std::string> legal_basis;

  friend bool operator==(const PersonalDataSection&, const PersonalDataSection&) = default;
};

struct RiskComplianceSection {
  std::optional<RiskLevel> generic_risk_level;
  std::optional<LegalRiskTier> legal_risk_level;
  std::optional<TextList> jurisdiction;
  std::optional<TextList> applicable_laws;
  std::optional<TextList> impact_assessments;
  std::optional<TextList> suggested_mitigations;

  friend bool operator==(const RiskComplianceSection&, const RiskComplianceSection&) = default;
};

struct UsageRestrictionSection {
  std::optional<TextList> access_restrictions;
  std::optional<TextList> permissions;
  std::optional<TextList> prohibitions;
  std::optional<TextList> obligations;

  friend bool operator==(const UsageRestrictionSection&, const UsageRestrictionSection&) = default;
};

struct Datasheet {
  MetadataSection metadata;
  PurposeSection purpose;
  SourceSection source;
  TemporalSection temporal;
  DemographicSection demographics;
  CharacteristicsSection characteristics;
  BiasMitigationSection bias_mitigation;
  PersonalDataSection personal_data;
  RiskComplianceSection risk_compliance;
  UsageRestrictionSection usage_restriction;

  friend bool operator==(const Datasheet&, const Datasheet&) = default;
};

/// Datasheet with all ten sections present and every field unpopulated.
Datasheet new_template();

}  // namespace dsf
