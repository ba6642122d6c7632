#include "dsf/rdf.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "dsf/field_registry.hpp"

namespace dsf {
namespace {

constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr const char* kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";
constexpr const char* kDcatDataset = "http://www.w3.org/ns/dcat#Dataset";
constexpr const char* kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
constexpr const char* kXsdDate = "http://www.w3.org/2001/XMLSchema#date";
constexpr const char* kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
constexpr const char* kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";

std::string dct(const char* term) { return std::string("http://purl.org/dc/terms/") + term; }
std::string dcat(const char* term) { return std::string("http://www.w3.org/ns/dcat#") + term; }
std::string odrl(const char* term) { return std::string("http://www.w3.org/ns/odrl/2/") + term; }
std::string dpv(const char* term) { return std::string("https://w3id.org/dpv#") + term; }
std::string own(const char* term) { return std::string("{base}/ns#") + term; }

std::vector<FieldMapping> build_mapping() {
  std::vector<FieldMapping> rows;
  auto add = [&](const char* path, std::string predicate, TripleShape shape,
                 std::string datatype = "", std::string entity_class = "") {
    rows.push_back({path, std::move(predicate), shape, std::move(datatype),
                    std::move(entity_class)});
  };

  add("metadata.title", dct("title"), TripleShape::Literal);
  add("metadata.version", dcat("version"), TripleShape::Literal);
  add("metadata.publisher", dct("publisher"), TripleShape::Literal);
  add("metadata.license", dct("license"), TripleShape::Literal);
  add("metadata.identifier", dct("identifier"), TripleShape::Literal);
  add("metadata.contact", dcat("contactPoint"), TripleShape::Literal);

  add("purpose.creation_purpose", dpv("hasPurpose"), TripleShape::Entity, "", dpv("Purpose"));
  add("purpose.intended_benefit", own("intendedBenefit"), TripleShape::Literal);
  add("purpose.beneficiaries", own("beneficiary"), TripleShape::LiteralList);
  add("purpose.intended_uses", own("intendedUse"), TripleShape::LiteralList);

  add("source.source_description", own("sourceDescription"), TripleShape::Literal);
  add("source.provenance", dct("provenance"), TripleShape::Literal);
  add("source.ethical_approval", own("ethicalApproval"), TripleShape::TypedLiteral, kXsdBoolean);
  add("source.approving_body", own("approvingBody"), TripleShape::Literal);
  add("source.funding_sources", own("fundingSource"), TripleShape::LiteralList);

  add("temporal.coverage_start", own("coverageStart"), TripleShape::TypedLiteral, kXsdDate);
  add("temporal.coverage_end", own("coverageEnd"), TripleShape::TypedLiteral, kXsdDate);
  add("temporal.last_updated", dct("modified"), TripleShape::TypedLiteral, kXsdDate);
  add("temporal.update_frequency", dct("accrualPeriodicity"), TripleShape::Literal);

  add("demographics.age_min", own("ageMinimum"), TripleShape::TypedLiteral, kXsdInteger);
  add("demographics.age_max", own("ageMaximum"), TripleShape::TypedLiteral, kXsdInteger);
  add("demographics.age_distribution", own("ageDistribution"), TripleShape::FractionDistribution);
  add("demographics.gender_distribution", own("genderDistribution"),
      TripleShape::FractionDistribution);
  add("demographics.ethnicity_distribution", own("ethnicityDistribution"),
      TripleShape::FractionDistribution);
  add("demographics.geographic_origin", own("geographicOrigin"), TripleShape::LiteralList);
  add("demographics.socioeconomic_notes", own("socioeconomicNotes"), TripleShape::Literal);
  add("demographics.underrepresented_groups", own("underrepresentedGroup"),
      TripleShape::LiteralList);
  add("demographics.bias_likelihoods", own("biasLikelihood"), TripleShape::BiasLikelihoods);
  add("demographics.demographic_notes", own("demographicNotes"), TripleShape::Literal);

  add("characteristics.media_type", own("mediaType"), TripleShape::TokenLiteral);
  add("characteristics.record_count", own("recordCount"), TripleShape::TypedLiteral, kXsdInteger);
  add("characteristics.feature_description", dct("description"), TripleShape::Literal);
  add("characteristics.incomplete", own("incomplete"), TripleShape::TypedLiteral, kXsdBoolean);
  add("characteristics.missing_elements", own("missingElement"), TripleShape::LiteralList);
  add("characteristics.missing_reasons", own("missingReason"), TripleShape::LiteralList);

  add("bias_mitigation.applied_methods", own("appliedBiasMitigation"), TripleShape::LiteralList);
  add("bias_mitigation.suggested_methods", own("suggestedBiasMitigation"),
      TripleShape::LiteralList);
  add("bias_mitigation.residual_bias_notes", own("residualBiasNotes"), TripleShape::Literal);

  add("personal_data.contains_personal_data", own("containsPersonalData"),
      TripleShape::TypedLiteral, kXsdBoolean);
  add("personal_data.personal_categories", dpv("hasPersonalData"), TripleShape::EntityList, "",
      dpv("PersonalData"));
  add("personal_data.special_categories", dpv("hasPersonalData"), TripleShape::EntityList, "",
      dpv("SpecialCategoryPersonalData"));
  add("personal_data.sensitivity", own("sensitivity"), TripleShape::TokenLiteral);
  add("personal_data.anonymization_techniques", dpv("hasTechnicalMeasure"),
      TripleShape::EntityList, "", dpv("Anonymisation"));
  add("personal_data.reidentification_risk", own("reidentificationRisk"),
      TripleShape::TokenLiteral);
  add("personal_data.legal_basis", dpv("hasLegalBasis"), TripleShape::Entity, "",
      dpv("LegalBasis"));

  add("risk_compliance.generic_risk_level", own("genericRiskLevel"), TripleShape::TokenLiteral);
  add("risk_compliance.legal_risk_level", own("legalRiskLevel"), TripleShape::TokenLiteral);
  add("risk_compliance.jurisdiction", dpv("hasJurisdiction"), TripleShape::EntityList, "",
      dpv("Location"));
  add("risk_compliance.applicable_laws", own("applicableLaw"), TripleShape::LiteralList);
  add("risk_compliance.impact_assessments", dpv("hasOrganisationalMeasure"),
      TripleShape::EntityList, "", dpv("ImpactAssessment"));
  add("risk_compliance.suggested_mitigations", own("suggestedMitigation"),
      TripleShape::LiteralList);

  add("usage_restriction.access_restrictions", own("accessRestriction"),
      TripleShape::LiteralList);
  add("usage_restriction.permissions", odrl("permission"), TripleShape::EntityList, "",
      odrl("Permission"));
  add("usage_restriction.prohibitions", odrl("prohibition"), TripleShape::EntityList, "",
      odrl("Prohibition"));
  add("usage_restriction.obligations", odrl("obligation"), TripleShape::EntityList, "",
      odrl("Duty"));
  return rows;
}

void require_valid_base(const std::string& base_iri) {
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("invalid-base-iri: ") + why);
  };
  if (base_iri.find('#') != std::string::npos) fail("fragment not allowed");
  auto colon = base_iri.find(':');
  if (colon == std::string::npos || colon == 0) fail("missing URI scheme");
  char first = base_iri[0];
  if (!((first >= 'A' && first <= 'Z') || (first >= 'a' && first <= 'z'))) {
    fail("scheme must start with a letter");
  }
  for (std::size_t i = 1; i < colon; ++i) {
    char c = base_iri[i];
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
              c == '+' || c == '.' || c == '-';
    if (!ok) fail("scheme must be alphanumeric with + . -");
  }
  if (colon + 1 >= base_iri.size()) fail("nothing follows the scheme");
}

std::string resolve(const std::string& iri, const std::string& base_iri) {
  const std::string placeholder = "{base}";
  auto pos = iri.find(placeholder);
  if (pos == std::string::npos) return iri;
  std::string out = iri;
  out.replace(pos, placeholder.size(), base_iri);
  return out;
}

class TripleBuilder {
 public:
  TripleBuilder(const std::string& base_iri) : base_(base_iri) {}

  std::vector<Triple> build(const Datasheet& ds) {
    triples_.push_back({base_, kRdfType, iri(kDcatDataset)});
    for (const FieldMapping& row : rdf_mapping()) {
      std::optional<FieldValue> value = get_field(ds, row.path);
      if (!value.has_value()) continue;
      expand(row, *value);
    }
    return std::move(triples_);
  }

 private:
  void expand(const FieldMapping& row, const FieldValue& value) {
    switch (row.shape) {
      case TripleShape::Literal:
        emit(base_, row.predicate, literal(std::get<std::string>(value)));
        break;
      case TripleShape::TokenLiteral:
        emit(base_, row.predicate, literal(std::get<VocabToken>(value).token));
        break;
      case TripleShape::TypedLiteral:
        emit(base_, row.predicate, typed_literal(row, value));
        break;
      case TripleShape::LiteralList:
        expand_literal_list(row, std::get<TextList>(value));
        break;
      case TripleShape::Entity:
        expand_entity(row, std::get<std::string>(value), node_iri(row.path));
        break;
      case TripleShape::EntityList:
        expand_entity_list(row, std::get<TextList>(value));
        break;
      case TripleShape::FractionDistribution:
        expand_distribution(row, std::get<FractionMap>(value));
        break;
      case TripleShape::BiasLikelihoods:
        expand_bias_map(row, std::get<BiasLikelihoodMap>(value));
        break;
    }
  }

  void expand_literal_list(const FieldMapping& row, const TextList& list) {
    if (list.empty()) {
      emit_empty_marker(row.path);
      return;
    }
    for (const std::string& entry : list) emit(base_, row.predicate, literal(entry));
  }

  void expand_entity(const FieldMapping& row, const std::string& label, std::string node) {
    emit(base_, row.predicate, iri(node));
    emit(node, kRdfType, iri(row.entity_class));
    emit(node, kRdfsLabel, literal(label));
  }

  void expand_entity_list(const FieldMapping& row, const TextList& list) {
    if (list.empty()) {
      emit_empty_marker(row.path);
      return;
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      expand_entity(row, list[i], node_iri(row.path, i));
    }
  }

  void expand_distribution(const FieldMapping& row, const FractionMap& map) {
    if (map.empty()) {
      emit_empty_marker(row.path);
      return;
    }
    std::string dist = node_iri(row.path);
    emit(base_, row.predicate, iri(dist));
    emit(dist, kRdfType, iri(own("FractionDistribution")));
    std::size_t index = 0;
    for (const auto& [label, share] : map.shares()) {
      std::string bucket = node_iri(row.path, index++);
      emit(dist, own("bucket"), iri(bucket));
      emit(bucket, own("bucketLabel"), literal(label));
      emit(bucket, own("share"), RdfTerm{RdfTerm::Kind::Literal,
                                         nlohmann::json(share).dump(), kXsdDecimal});
    }
  }

  void expand_bias_map(const FieldMapping& row, const BiasLikelihoodMap& map) {
    if (map.empty()) {
      emit_empty_marker(row.path);
      return;
    }
    std::size_t index = 0;
    for (const auto& [category, likelihood] : map) {
      std::string node = node_iri(row.path, index++);
      emit(base_, row.predicate, iri(node));
      emit(node, kRdfType, iri(own("BiasLikelihoodAssertion")));
      emit(node, own("biasCategory"), literal(std::string(to_token(category))));
      emit(node, own("likelihood"), literal(std::string(to_token(likelihood))));
    }
  }

  RdfTerm typed_literal(const FieldMapping& row, const FieldValue& value) {
    RdfTerm term{RdfTerm::Kind::Literal, "", row.datatype};
    if (const auto* flag = std::get_if<bool>(&value)) {
      term.value = *flag ? "true" : "false";
    } else if (const auto* number = std::get_if<std::int64_t>(&value)) {
      term.value = std::to_string(*number);
    } else if (const auto* date = std::get_if<Date>(&value)) {
      term.value = date->to_string();
    }
    return term;
  }

  void emit_empty_marker(const std::string& path) {
    emit(base_, own("documentedEmpty"), literal(path));
  }

  void emit(const std::string& subject, const std::string& predicate, RdfTerm object) {
    if (object.kind == RdfTerm::Kind::Iri) object.value = resolve(object.value, base_);
    triples_.push_back({resolve(subject, base_), resolve(predicate, base_), std::move(object)});
  }

  std::string node_iri(const std::string& path) const {
    std::string fragment = path;
    std::replace(fragment.begin(), fragment.end(), '.', '-');
    return base_ + "#" + fragment;
  }

  std::string node_iri(const std::string& path, std::size_t index) const {
    return node_iri(path) + "-" + std::to_string(index);
  }

  static RdfTerm iri(std::string value) {
    return {RdfTerm::Kind::Iri, std::move(value), ""};
  }

  static RdfTerm literal(std::string value) {
    return {RdfTerm::Kind::Literal, std::move(value), ""};
  }

  const std::string& base_;
  std::vector<Triple> triples_;
};

std::string escaped(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

const std::vector<FieldMapping>& rdf_mapping() {
  static const std::vector<FieldMapping> rows = build_mapping();
  return rows;
}

std::vector<Triple> export_rdf(const Datasheet& ds, const std::string& base_iri) {
  require_valid_base(base_iri);
  return TripleBuilder(base_iri).build(ds);
}

std::string to_ntriples(const std::vector<Triple>& triples) {
  std::vector<std::string> lines;
  lines.reserve(triples.size());
  for (const Triple& triple : triples) {
    std::string line = "<" + triple.subject + "> <" + triple.predicate + "> ";
    if (triple.object.kind == RdfTerm::Kind::Iri) {
      line += "<" + triple.object.value + ">";
    } else {
      line += "\"" + escaped(triple.object.value) + "\"";
      if (!triple.object.datatype.empty()) line += "^^<" + triple.object.datatype + ">";
    }
    line += " .";
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += "\n";
  }
  return out;
}

std::string export_ntriples(const Datasheet& ds, const std::string& base_iri) {
  return to_ntriples(export_rdf(ds, base_iri));
}

}  // namespace dsf
