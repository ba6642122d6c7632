#include "dsf/vocab.hpp"

namespace dsf {
namespace {

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<E, N>& values, std::string_view token) {
  for (E v : values) {
    if (to_token(v) == token) return v;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_token(Likelihood v) {
  switch (v) {
    case Likelihood::VeryLow: return "very-low";
    case Likelihood::Low: return "low";
    case Likelihood::Medium: return "medium";
    case Likelihood::High: return "high";
    case Likelihood::VeryHigh: return "very-high";
    case Likelihood::Unknown: return "unknown";
  }
  return "";
}

std::string_view to_token(RiskLevel v) {
  switch (v) {
    case RiskLevel::Low: return "low";
    case RiskLevel::Medium: return "medium";
    case RiskLevel::High: return "high";
  }
  return "";
}

std::string_view to_token(LegalRiskTier v) {
  switch (v) {
    case LegalRiskTier::Minimal: return "minimal";
    case LegalRiskTier::Limited: return "limited";
    case LegalRiskTier::High: return "high";
    case LegalRiskTier::Unacceptable: return "unacceptable";
  }
  return "";
}

std::string_view to_token(BiasCategory v) {
  switch (v) {
    case BiasCategory::Sample: return "sample";
    case BiasCategory::Annotator: return "annotator";
    case BiasCategory::Temporal: return "temporal";
    case BiasCategory::Gender: return "gender";
    case BiasCategory::DataDriven: return "data-driven";
    case BiasCategory::Algorithmic: return "algorithmic";
    case BiasCategory::Human: return "human";
  }
  return "";
}

std::string_view to_token(Sensitivity v) {
  switch (v) {
    case Sensitivity::Low: return "low";
    case Sensitivity::Medium: return "medium";
    case Sensitivity::High: return "high";
  }
  return "";
}

std::string_view to_token(MediaType v) {
  switch (v) {
    case MediaType::Tabular: return "tabular";
    case MediaType::Images: return "images";
    case MediaType::Text: return "text";
    case MediaType::Signals: return "signals";
    case MediaType::Genomic: return "genomic";
    case MediaType::Audio: return "audio";
    case MediaType::Video: return "video";
    case MediaType::Mixed: return "mixed";
  }
  return "";
}

std::string_view to_token(SectionId v) {
  switch (v) {
    case SectionId::Metadata: return "metadata";
    case SectionId::Purpose: return "purpose";
    case SectionId::Source: return "source";
    case SectionId::Temporal: return "temporal";
    case SectionId::Demographics: return "demographics";
    case SectionId::Characteristics: return "characteristics";
    case SectionId::BiasMitigation: return "bias_mitigation";
    case SectionId::PersonalData: return "personal_data";
    case SectionId::RiskCompliance: return "risk_compliance";
    case SectionId::UsageRestriction: return "usage_restriction";
  }
  return "";
}

std::string_view to_token(DataRiskKind v) {
  switch (v) {
    case DataRiskKind::Missingness: return "missingness";
    case DataRiskKind::Staleness: return "staleness";
    case DataRiskKind::Reidentification: return "reidentification";
    case DataRiskKind::Incompleteness: return "incompleteness";
    case DataRiskKind::DeclarationMismatch: return "declaration-mismatch";
  }
  return "";
}

std::optional<Likelihood> likelihood_from_token(std::string_view token) {
  return lookup(kAllLikelihoods, token);
}

std::optional<RiskLevel> risk_level_from_token(std::string_view token) {
  return lookup(kAllRiskLevels, token);
}

std::optional<LegalRiskTier> legal_risk_tier_from_token(std::string_view token) {
  return lookup(kAllLegalRiskTiers, token);
}

std::optional<BiasCategory> bias_category_from_token(std::string_view token) {
  return lookup(kAllBiasCategories, token);
}

std::optional<Sensitivity> sensitivity_from_token(std::string_view token) {
  return lookup(kAllSensitivities, token);
}

std::optional<MediaType> media_type_from_token(std::string_view token) {
  return lookup(kAllMediaTypes, token);
}

std::optional<SectionId> section_from_token(std::string_view token) {
  return lookup(kAllSections, token);
}

}  // namespace dsf
