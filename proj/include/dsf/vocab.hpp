#pragma once

#include <array>
#include <optional>
#include <string_view>

// Controlled vocabularies. Every value has exactly one canonical token;
// decoding rejects anything outside the canonical set.

namespace dsf {

enum class Likelihood { VeryLow, Low, Medium, High, VeryHigh, Unknown };

enum class RiskLevel { Low, Medium, High };

enum class LegalRiskTier { Minimal, Limited, High, Unacceptable };

enum class BiasCategory { Sample, Annotator, Temporal, Gender, DataDriven, Algorithmic, Human };

enum class Sensitivity { Low, Medium, High };

enum class MediaType { Tabular, Images, Text, Signals, Genomic, Audio, Video, Mixed };

enum class SectionId {
  Metadata,
  Purpose,
  Source,
  Temporal,
  Demographics,
  Characteristics,
  BiasMitigation,
  PersonalData,
  RiskCompliance,
  UsageRestriction,
};

/// Kinds of automatically assessed data risks that are not bias categories.
enum class DataRiskKind { Missingness, Staleness, Reidentification, Incompleteness, DeclarationMismatch };

inline constexpr int kSectionCount = 10;

inline constexpr std::array<SectionId, kSectionCount> kAllSections = {
    SectionId::Metadata,        SectionId::Purpose,        SectionId::Source,
    SectionId::Temporal,        SectionId::Demographics,   SectionId::Characteristics,
    SectionId::BiasMitigation,  SectionId::PersonalData,   SectionId::RiskCompliance,
    SectionId::UsageRestriction,
};

inline constexpr std::array<Likelihood, 6> kAllLikelihoods = {
    Likelihood::VeryLow, Likelihood::Low,      Likelihood::Medium,
    Likelihood::High,    Likelihood::VeryHigh, Likelihood::Unknown,
};

inline constexpr std::array<RiskLevel, 3> kAllRiskLevels = {
    RiskLevel::Low, RiskLevel::Medium, RiskLevel::High};

inline constexpr std::array<LegalRiskTier, 4> kAllLegalRiskTiers = {
    LegalRiskTier::Minimal, LegalRiskTier::Limited, LegalRiskTier::High,
    LegalRiskTier::Unacceptable};

inline constexpr std::array<BiasCategory, 7> kAllBiasCategories = {
    BiasCategory::Sample, BiasCategory::Annotator,  BiasCategory::Temporal,  BiasCategory::Gender,
    BiasCategory::DataDriven, BiasCategory::Algorithmic, BiasCategory::Human};

inline constexpr std::array<Sensitivity, 3> kAllSensitivities = {
    Sensitivity::Low, Sensitivity::Medium, Sensitivity::High};

inline constexpr std::array<MediaType, 8> kAllMediaTypes = {
    MediaType::Tabular, MediaType::Images, MediaType::Text,  MediaType::Signals,
    MediaType::Genomic, MediaType::Audio,  MediaType::Video, MediaType::Mixed};

std::string_view to_token(Likelihood v);
std::string_view to_token(RiskLevel v);
std::string_view to_token(LegalRiskTier v);
std::string_view to_token(BiasCategory v);
std::string_view to_token(Sensitivity v);
std::string_view to_token(MediaType v);
std::string_view to_token(SectionId v);
std::string_view to_token(DataRiskKind v);

std::optional<Likelihood> likelihood_from_token(std::string_view token);
std::optional<RiskLevel> risk_level_from_token(std::string_view token);
std::optional<LegalRiskTier> legal_risk_tier_from_token(std::string_view token);
std::optional<BiasCategory> bias_category_from_token(std::string_view token);
std::optional<Sensitivity> sensitivity_from_token(std::string_view token);
std::optional<MediaType> media_type_from_token(std::string_view token);
std::optional<SectionId> section_from_token(std::string_view token);

}  // namespace dsf
