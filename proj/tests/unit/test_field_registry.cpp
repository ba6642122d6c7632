#include "dsf/field_registry.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

namespace {

using namespace dsf;

FieldValue representative_value(const FieldSpec& spec) {
  switch (spec.type) {
    case FieldType::Text: return std::string("sample text");
    case FieldType::TextList: return TextList{"one", "two"};
    case FieldType::Date: return *Date::make(2021, 7, 9);
    case FieldType::Integer: return std::int64_t{42};
    case FieldType::FractionMap: return *FractionMap::make({{"a", 0.6}, {"b", 0.4}});
    case FieldType::Boolean: return true;
    case FieldType::Vocab: {
      switch (*spec.vocabulary) {
        case VocabId::Likelihood: return VocabToken{VocabId::Likelihood, "medium"};
        case VocabId::RiskLevel: return VocabToken{VocabId::RiskLevel, "low"};
        case VocabId::LegalRiskTier: return VocabToken{VocabId::LegalRiskTier, "limited"};
        case VocabId::BiasCategory: return VocabToken{VocabId::BiasCategory, "sample"};
        case VocabId::Sensitivity: return VocabToken{VocabId::Sensitivity, "high"};
        case VocabId::MediaType: return VocabToken{VocabId::MediaType, "images"};
      }
      break;
    }
    case FieldType::Structured:
      return BiasLikelihoodMap{{BiasCategory::Sample, Likelihood::Medium}};
    case FieldType::DateRange: break;
  }
  return std::string("unreachable");
}

TEST(FieldRegistry, HasFiftyFiveFieldsAcrossTenSections) {
  EXPECT_EQ(field_registry().size(), 55u);
  std::set<SectionId> sections;
  for (const FieldSpec& spec : field_registry()) sections.insert(spec.section);
  EXPECT_EQ(sections.size(), 10u);
}

TEST(FieldRegistry, SectionFieldCountsMatchTheSchema) {
  const std::map<SectionId, std::size_t> expected = {
      {SectionId::Metadata, 6},        {SectionId::Purpose, 4},
      {SectionId::Source, 5},          {SectionId::Temporal, 4},
      {SectionId::Demographics, 10},   {SectionId::Characteristics, 6},
      {SectionId::BiasMitigation, 3},  {SectionId::PersonalData, 7},
      {SectionId::RiskCompliance, 6},  {SectionId::UsageRestriction, 4},
  };
  for (const auto& [section, count] : expected) {
    EXPECT_EQ(section_field_count(section), count) << to_token(section);
    EXPECT_EQ(section_fields(section).size(), count) << to_token(section);
  }
}

TEST(FieldRegistry, PathsAreUniqueAndWellFormed) {
  std::set<std::string> seen;
  for (const FieldSpec& spec : field_registry()) {
    EXPECT_TRUE(seen.insert(spec.path).second) << spec.path;
    EXPECT_EQ(spec.path, std::string(to_token(spec.section)) + "." + spec.key);
  }
}

TEST(FieldRegistry, ExactlyFiveRequiredFields) {
  std::set<std::string> required;
  for (const FieldSpec& spec : field_registry()) {
    if (spec.required) required.insert(spec.path);
  }
  const std::set<std::string> expected = {
      "metadata.title", "metadata.publisher", "purpose.creation_purpose",
      "source.source_description", "personal_data.contains_personal_data"};
  EXPECT_EQ(required, expected);
}

TEST(FieldRegistry, VocabularyOnlyOnVocabFields) {
  for (const FieldSpec& spec : field_registry()) {
    EXPECT_EQ(spec.vocabulary.has_value(), spec.type == FieldType::Vocab) << spec.path;
  }
}

TEST(FieldRegistry, EveryFieldRoundTripsThroughItsAccessors) {
  Datasheet ds;
  for (const FieldSpec& spec : field_registry()) {
    EXPECT_FALSE(spec.get(ds).has_value()) << spec.path;
    FieldValue value = representative_value(spec);
    spec.set(ds, value);
    auto read = spec.get(ds);
    ASSERT_TRUE(read.has_value()) << spec.path;
    EXPECT_TRUE(*read == value) << spec.path;
    spec.clear(ds);
    EXPECT_FALSE(spec.get(ds).has_value()) << spec.path;
  }
  EXPECT_EQ(ds, Datasheet{});
}

TEST(FieldRegistry, PopulatedCountsTrackSetsAndClears) {
  Datasheet ds;
  EXPECT_EQ(populated_field_count(ds), 0u);
  set_field(ds, "metadata.title", std::string("t"));
  set_field(ds, "demographics.age_min", std::int64_t{1});
  EXPECT_EQ(populated_field_count(ds), 2u);
  EXPECT_EQ(populated_field_count(ds, SectionId::Metadata), 1u);
  EXPECT_EQ(populated_field_count(ds, SectionId::Demographics), 1u);
  EXPECT_EQ(populated_field_count(ds, SectionId::Purpose), 0u);
}

TEST(FieldRegistry, UnknownPathThrows) {
  Datasheet ds;
  EXPECT_THROW((void)get_field(ds, "metadata.missing"), std::out_of_range);
  EXPECT_THROW(set_field(ds, "nowhere.title", std::string("x")), std::out_of_range);
  EXPECT_EQ(find_field("metadata.missing"), nullptr);
  ASSERT_NE(find_field("metadata.title"), nullptr);
}

TEST(FieldRegistry, TypeMismatchedSetThrows) {
  Datasheet ds;
  EXPECT_THROW(set_field(ds, "metadata.title", std::int64_t{3}), std::invalid_argument);
  EXPECT_THROW(set_field(ds, "demographics.age_min", std::string("young")),
               std::invalid_argument);
  EXPECT_FALSE(get_field(ds, "metadata.title").has_value());
}

TEST(FieldRegistry, TemplateStartsEmpty) {
  EXPECT_EQ(populated_field_count(new_template()), 0u);
}

}  // namespace
