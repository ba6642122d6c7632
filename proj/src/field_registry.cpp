#include "dsf/field_registry.hpp"

#include <stdexcept>
#include <type_traits>
#include <unordered_map>

namespace dsf {
namespace {

template <class T>
struct VocabTraits;

template <>
struct VocabTraits<Likelihood> {
  static constexpr VocabId id = VocabId::Likelihood;
  static std::optional<Likelihood> from(std::string_view t) { return likelihood_from_token(t); }
};

template <>
struct VocabTraits<RiskLevel> {
  static constexpr VocabId id = VocabId::RiskLevel;
  static std::optional<RiskLevel> from(std::string_view t) { return risk_level_from_token(t); }
};

template <>
struct VocabTraits<LegalRiskTier> {
  static constexpr VocabId id = VocabId::LegalRiskTier;
  static std::optional<LegalRiskTier> from(std::string_view t) {
    return legal_risk_tier_from_token(t);
  }
};

template <>
struct VocabTraits<Sensitivity> {
  static constexpr VocabId id = VocabId::Sensitivity;
  static std::optional<Sensitivity> from(std::string_view t) { return sensitivity_from_token(t); }
};

template <>
struct VocabTraits<MediaType> {
  static constexpr VocabId id = VocabId::MediaType;
  static std::optional<MediaType> from(std::string_view t) { return media_type_from_token(t); }
};

template <class T, class = void>
struct is_vocab_enum : std::false_type {};

template <class T>
struct is_vocab_enum<T, std::void_t<decltype(VocabTraits<T>::id)>> : std::true_type {};

template <class T>
FieldValue to_field_value(const T& value) {
  if constexpr (is_vocab_enum<T>::value) {
    return VocabToken{VocabTraits<T>::id, std::string(to_token(value))};
  } else {
    return FieldValue(value);
  }
}

template <class T>
T from_field_value(const FieldValue& value, const std::string& path) {
  if constexpr (is_vocab_enum<T>::value) {
    const VocabToken* token = std::get_if<VocabToken>(&value);
    if (token == nullptr || token->vocab != VocabTraits<T>::id) {
      throw std::invalid_argument("field value type mismatch at " + path);
    }
    auto parsed = VocabTraits<T>::from(token->token);
    if (!parsed) {
      throw std::invalid_argument("unknown vocabulary token '" + token->token + "' at " + path);
    }
    return *parsed;
  } else {
    const T* typed = std::get_if<T>(&value);
    if (typed == nullptr) {
      throw std::invalid_argument("field value type mismatch at " + path);
    }
    return *typed;
  }
}

template <class Section, class T>
FieldSpec make_field(std::string path, SectionId section_id, FieldType type, bool required,
                     Section Datasheet::*section_ptr, std::optional<T> Section::*member_ptr) {
  FieldSpec spec;
  spec.path = std::move(path);
  spec.section = section_id;
  spec.key = spec.path.substr(spec.path.find('.') + 1);
  spec.type = type;
  spec.required = required;
  if constexpr (is_vocab_enum<T>::value) {
    spec.vocabulary = VocabTraits<T>::id;
  }
  spec.get = [section_ptr, member_ptr](const Datasheet& ds) -> std::optional<FieldValue> {
    const std::optional<T>& slot = ds.*section_ptr.*member_ptr;
    if (!slot) return std::nullopt;
    return to_field_value(*slot);
  };
  spec.set = [section_ptr, member_ptr, path = spec.path](Datasheet& ds, const FieldValue& value) {
    ds.*section_ptr.*member_ptr = from_field_value<T>(value, path);
  };
  spec.clear = [section_ptr, member_ptr](Datasheet& ds) {
    ds.*section_ptr.*member_ptr = std::nullopt;
  };
  return spec;
}

std::vector<FieldSpec> build_registry() {
  using FT = FieldType;
  using SI = SectionId;
  std::vector<FieldSpec> fields;
  fields.reserve(55);

  fields.push_back(make_field("metadata.title", SI::Metadata, FT::Text, true, &Datasheet::metadata,
                              &MetadataSection::title));
  fields.push_back(make_field("metadata.version", SI::Metadata, FT::Text, false,
                              &Datasheet::metadata, &MetadataSection::version));
  fields.push_back(make_field("metadata.publisher", SI::Metadata, FT::Text, true,
                              &Datasheet::metadata, &MetadataSection::publisher));
  fields.push_back(make_field("metadata.license", SI::Metadata, FT::Text, false,
                              &Datasheet::metadata, &MetadataSection::license));
  fields.push_back(make_field("metadata.identifier", SI::Metadata, FT::Text, false,
                              &Datasheet::metadata, &MetadataSection::identifier));
  fields.push_back(make_field("metadata.contact", SI::Metadata, FT::Text, false,
                              &Datasheet::metadata, &MetadataSection::contact));

  fields.push_back(make_field("purpose.creation_purpose", SI::Purpose, FT::Text, true,
                              &Datasheet::purpose, &PurposeSection::creation_purpose));
  fields.push_back(make_field("purpose.intended_benefit", SI::Purpose, FT::Text, false,
                              &Datasheet::purpose, &PurposeSection::intended_benefit));
  fields.push_back(make_field("purpose.beneficiaries", SI::Purpose, FT::TextList, false,
                              &Datasheet::purpose, &PurposeSection::beneficiaries));
  fields.push_back(make_field("purpose.intended_uses", SI::Purpose, FT::TextList, false,
                              &Datasheet::purpose, &PurposeSection::intended_uses));

  fields.push_back(make_field("source.source_description", SI::Source, FT::Text, true,
                              &Datasheet::source, &SourceSection::source_description));
  fields.push_back(make_field("source.provenance", SI::Source, FT::Text, false, &Datasheet::source,
                              &SourceSection::provenance));
  fields.push_back(make_field("source.ethical_approval", SI::Source, FT::Boolean, false,
                              &Datasheet::source, &SourceSection::ethical_approval));
  fields.push_back(make_field("source.approving_body", SI::Source, FT::Text, false,
                              &Datasheet::source, &SourceSection::approving_body));
  fields.push_back(make_field("source.funding_sources", SI::Source, FT::TextList, false,
                              &Datasheet::source, &SourceSection::funding_sources));

  fields.push_back(make_field("temporal.coverage_start", SI::Temporal, FT::Date, false,
                              &Datasheet::temporal, &TemporalSection::coverage_start));
  fields.push_back(make_field("temporal.coverage_end", SI::Temporal, FT::Date, false,
                              &Datasheet::temporal, &TemporalSection::coverage_end));
  fields.push_back(make_field("temporal.last_updated", SI::Temporal, FT::Date, false,
                              &Datasheet::temporal, &TemporalSection::last_updated));
  fields.push_back(make_field("temporal.update_frequency", SI::Temporal, FT::Text, false,
                              &Datasheet::temporal, &TemporalSection::update_frequency));

  fields.push_back(make_field("demographics.age_min", SI::Demographics, FT::Integer, false,
                              &Datasheet::demographics, &DemographicSection::age_min));
  fields.push_back(make_field("demographics.age_max", SI::Demographics, FT::Integer, false,
                              &Datasheet::demographics, &DemographicSection::age_max));
  fields.push_back(make_field("demographics.age_distribution", SI::Demographics, FT::FractionMap,
                              false, &Datasheet::demographics,
                              &DemographicSection::age_distribution));
  fields.push_back(make_field("demographics.gender_distribution", SI::Demographics,
                              FT::FractionMap, false, &Datasheet::demographics,
                              &DemographicSection::gender_distribution));
  fields.push_back(make_field("demographics.ethnicity_distribution", SI::Demographics,
                              FT::FractionMap, false, &Datasheet::demographics,
                              &DemographicSection::ethnicity_distribution));
  fields.push_back(make_field("demographics.geographic_origin", SI::Demographics, FT::TextList,
                              false, &Datasheet::demographics,
                              &DemographicSection::geographic_origin));
  fields.push_back(make_field("demographics.socioeconomic_notes", SI::Demographics, FT::Text,
                              false, &Datasheet::demographics,
                              &DemographicSection::socioeconomic_notes));
  fields.push_back(make_field("demographics.underrepresented_groups", SI::Demographics,
                              FT::TextList, false, &Datasheet::demographics,
                              &DemographicSection::underrepresented_groups));
  fields.push_back(make_field("demographics.bias_likelihoods", SI::Demographics, FT::Structured,
                              false, &Datasheet::demographics,
                              &DemographicSection::bias_likelihoods));
  fields.push_back(make_field("demographics.demographic_notes", SI::Demographics, FT::Text, false,
                              &Datasheet::demographics, &DemographicSection::demographic_notes));

  fields.push_back(make_field("characteristics.media_type", SI::Characteristics, FT::Vocab, false,
                              &Datasheet::characteristics, &CharacteristicsSection::media_type));
  fields.push_back(make_field("characteristics.record_count", SI::Characteristics, FT::Integer,
                              false, &Datasheet::characteristics,
                              &CharacteristicsSection::record_count));
  fields.push_back(make_field("characteristics.feature_description", SI::Characteristics, FT::Text,
                              false, &Datasheet::characteristics,
                              &CharacteristicsSection::feature_description));
  fields.push_back(make_field("characteristics.incomplete", SI::Characteristics, FT::Boolean,
                              false, &Datasheet::characteristics,
                              &CharacteristicsSection::incomplete));
  fields.push_back(make_field("characteristics.missing_elements", SI::Characteristics,
                              FT::TextList, false, &Datasheet::characteristics,
                              &CharacteristicsSection::missing_elements));
  fields.push_back(make_field("characteristics.missing_reasons", SI::Characteristics, FT::TextList,
                              false, &Datasheet::characteristics,
                              &CharacteristicsSection::missing_reasons));

  fields.push_back(make_field("bias_mitigation.applied_methods", SI::BiasMitigation, FT::TextList,
                              false, &Datasheet::bias_mitigation,
                              &BiasMitigationSection::applied_methods));
  fields.push_back(make_field("bias_mitigation.suggested_methods", SI::BiasMitigation,
                              FT::TextList, false, &Datasheet::bias_mitigation,
                              &BiasMitigationSection::suggested_methods));
  fields.push_back(make_field("bias_mitigation.residual_bias_notes", SI::BiasMitigation, FT::Text,
                              false, &Datasheet::bias_mitigation,
                              &BiasMitigationSection::residual_bias_notes));

  fields.push_back(make_field("personal_data.contains_personal_data", SI::PersonalData,
                              FT::Boolean, true, &Datasheet::personal_data,
                              &PersonalDataSection::contains_personal_data));
  fields.push_back(make_field("personal_data.personal_categories", SI::PersonalData, FT::TextList,
                              false, &Datasheet::personal_data,
                              &PersonalDataSection::personal_categories));
  fields.push_back(make_field("personal_data.special_categories", SI::PersonalData, FT::TextList,
                              false, &Datasheet::personal_data,
                              &PersonalDataSection::special_categories));
  fields.push_back(make_field("personal_data.sensitivity", SI::PersonalData, FT::Vocab, false,
                              &Datasheet::personal_data, &PersonalDataSection::sensitivity));
  fields.push_back(make_field("personal_data.anonymization_techniques", SI::PersonalData,
                              FT::TextList, false, &Datasheet::personal_data,
                              &PersonalDataSection::anonymization_techniques));
  fields.push_back(make_field("personal_data.reidentification_risk", SI::PersonalData, FT::Vocab,
                              false, &Datasheet::personal_data,
                              &PersonalDataSection::reidentification_risk));
  fields.push_back(make_field("personal_data.legal_basis", SI::PersonalData, FT::Text, false,
                              &Datasheet::personal_data, &PersonalDataSection::legal_basis));

  fields.push_back(make_field("risk_compliance.generic_risk_level", SI::RiskCompliance, FT::Vocab,
                              false, &Datasheet::risk_compliance,
                              &RiskComplianceSection::generic_risk_level));
  fields.push_back(make_field("risk_compliance.legal_risk_level", SI::RiskCompliance, FT::Vocab,
                              false, &Datasheet::risk_compliance,
                              &RiskComplianceSection::legal_risk_level));
  fields.push_back(make_field("risk_compliance.jurisdiction", SI::RiskCompliance, FT::TextList,
                              false, &Datasheet::risk_compliance,
                              &RiskComplianceSection::jurisdiction));
  fields.push_back(make_field("risk_compliance.applicable_laws", SI::RiskCompliance, FT::TextList,
                              false, &Datasheet::risk_compliance,
                              &RiskComplianceSection::applicable_laws));
  fields.push_back(make_field("risk_compliance.impact_assessments", SI::RiskCompliance,
                              FT::TextList, false, &Datasheet::risk_compliance,
                              &RiskComplianceSection::impact_assessments));
  fields.push_back(make_field("risk_compliance.suggested_mitigations", SI::RiskCompliance,
                              FT::TextList, false, &Datasheet::risk_compliance,
                              &RiskComplianceSection::suggested_mitigations));

  fields.push_back(make_field("usage_restriction.access_restrictions", SI::UsageRestriction,
                              FT::TextList, false, &Datasheet::usage_restriction,
                              &UsageRestrictionSection::access_restrictions));
  fields.push_back(make_field("usage_restriction.permissions", SI::UsageRestriction, FT::TextList,
                              false, &Datasheet::usage_restriction,
                              &UsageRestrictionSection::permissions));
  fields.push_back(make_field("usage_restriction.prohibitions", SI::UsageRestriction, FT::TextList,
                              false, &Datasheet::usage_restriction,
                              &UsageRestrictionSection::prohibitions));
  fields.push_back(make_field("usage_restriction.obligations", SI::UsageRestriction, FT::TextList,
                              false, &Datasheet::usage_restriction,
                              &UsageRestrictionSection::obligations));

  return fields;
}

const std::unordered_map<std::string_view, std::size_t>& path_index() {
  static const std::unordered_map<std::string_view, std::size_t> index = [] {
    std::unordered_map<std::string_view, std::size_t> map;
    const auto& fields = field_registry();
    for (std::size_t i = 0; i < fields.size(); ++i) {
      map.emplace(fields[i].path, i);
    }
    return map;
  }();
  return index;
}

}  // namespace

std::string_view to_token(FieldType t) {
  switch (t) {
    case FieldType::Text: return "text";
    case FieldType::TextList: return "text-list";
    case FieldType::Date: return "date";
    case FieldType::DateRange: return "date-range";
    case FieldType::Integer: return "integer";
    case FieldType::FractionMap: return "fraction-map";
    case FieldType::Vocab: return "vocab";
    case FieldType::Boolean: return "boolean";
    case FieldType::Structured: return "structured";
  }
  return "";
}

std::string_view to_token(VocabId v) {
  switch (v) {
    case VocabId::Likelihood: return "likelihood";
    case VocabId::RiskLevel: return "risk-level";
    case VocabId::LegalRiskTier: return "legal-risk-tier";
    case VocabId::BiasCategory: return "bias-category";
    case VocabId::Sensitivity: return "sensitivity";
    case VocabId::MediaType: return "media-type";
  }
  return "";
}

const std::vector<FieldSpec>& field_registry() {
  static const std::vector<FieldSpec> registry = build_registry();
  return registry;
}

const FieldSpec* find_field(std::string_view path) {
  const auto& index = path_index();
  auto it = index.find(path);
  if (it == index.end()) return nullptr;
  return &field_registry()[it->second];
}

std::optional<FieldValue> get_field(const Datasheet& ds, std::string_view path) {
  const FieldSpec* spec = find_field(path);
  if (spec == nullptr) {
    throw std::out_of_range("unknown field path: " + std::string(path));
  }
  return spec->get(ds);
}

void set_field(Datasheet& ds, std::string_view path, const FieldValue& value) {
  const FieldSpec* spec = find_field(path);
  if (spec == nullptr) {
    throw std::out_of_range("unknown field path: " + std::string(path));
  }
  spec->set(ds, value);
}

std::size_t populated_field_count(const Datasheet& ds) {
  std::size_t count = 0;
  for (const FieldSpec& spec : field_registry()) {
    if (spec.get(ds).has_value()) ++count;
  }
  return count;
}

std::size_t populated_field_count(const Datasheet& ds, SectionId section) {
  std::size_t count = 0;
  for (const FieldSpec& spec : field_registry()) {
    if (spec.section == section && spec.get(ds).has_value()) ++count;
  }
  return count;
}

std::vector<const FieldSpec*> section_fields(SectionId section) {
  std::vector<const FieldSpec*> result;
  for (const FieldSpec& spec : field_registry()) {
    if (spec.section == section) result.push_back(&spec);
  }
  return result;
}

std::size_t section_field_count(SectionId section) {
  return section_fields(section).size();
}

Datasheet new_template() {
  return Datasheet{};
}

}  // namespace dsf
