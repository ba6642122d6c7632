#include "dsf/parser.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace {

using namespace dsf;

bool has_diag(const ParseResult& result, std::string_view path, std::string_view code,
              Severity severity) {
  return std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                     [&](const Diagnostic& d) {
                       return d.path == path && d.code == code && d.severity == severity;
                     });
}

TEST(Parser, AcceptsMinimalDocument) {
  auto result = parse(R"({"datasheet_format_version": "1.0"})", ParseMode::Strict);
  ASSERT_TRUE(result.datasheet.has_value());
  EXPECT_TRUE(result.diagnostics.empty());
  EXPECT_EQ(*result.datasheet, Datasheet{});
}

TEST(Parser, RejectsBrokenJson) {
  auto result = parse("{\"metadata\": {", ParseMode::Strict);
  EXPECT_FALSE(result.datasheet.has_value());
  EXPECT_TRUE(has_diag(result, "$", "malformed-document", Severity::Error));
}

TEST(Parser, RejectsNonObjectTopLevel) {
  for (const char* doc : {"[1,2]", "\"text\"", "42", "null"}) {
    auto result = parse(doc, ParseMode::Strict);
    EXPECT_FALSE(result.datasheet.has_value()) << doc;
    EXPECT_TRUE(has_diag(result, "$", "malformed-document", Severity::Error)) << doc;
  }
}

TEST(Parser, MissingVersionIsAWarningOnly) {
  auto result = parse(R"({"metadata": {"title": "t"}})", ParseMode::Strict);
  ASSERT_TRUE(result.datasheet.has_value());
  EXPECT_TRUE(has_diag(result, "datasheet_format_version", "version-missing",
                       Severity::Warning));
  EXPECT_EQ(result.datasheet->metadata.title, "t");
}

TEST(Parser, UnsupportedVersionFails) {
  auto result = parse(R"({"datasheet_format_version": "2.0"})", ParseMode::Strict);
  EXPECT_FALSE(result.datasheet.has_value());
  EXPECT_TRUE(has_diag(result, "datasheet_format_version", "unsupported-version",
                       Severity::Error));
}

TEST(Parser, NonStringVersionIsATypeMismatch) {
  auto result = parse(R"({"datasheet_format_version": 1})", ParseMode::Strict);
  EXPECT_FALSE(result.datasheet.has_value());
  EXPECT_TRUE(has_diag(result, "datasheet_format_version", "type-mismatch", Severity::Error));
}

TEST(Parser, UnknownFieldIsStrictErrorLenientWarning) {
  const char* doc = R"({"datasheet_format_version": "1.0",
                        "metadata": {"subtitle": "x", "title": "t"},
                        "extras": {"anything": 1}})";
  auto strict = parse(doc, ParseMode::Strict);
  EXPECT_FALSE(strict.datasheet.has_value());
  EXPECT_TRUE(has_diag(strict, "metadata.subtitle", "unknown-field", Severity::Error));
  EXPECT_TRUE(has_diag(strict, "extras", "unknown-field", Severity::Error));

  auto lenient = parse(doc, ParseMode::Lenient);
  ASSERT_TRUE(lenient.datasheet.has_value());
  EXPECT_TRUE(has_diag(lenient, "metadata.subtitle", "unknown-field", Severity::Warning));
  EXPECT_TRUE(has_diag(lenient, "extras", "unknown-field", Severity::Warning));
  EXPECT_EQ(lenient.datasheet->metadata.title, "t");
}

TEST(Parser, SectionContainerMustBeAnObject) {
  auto result = parse(R"({"datasheet_format_version": "1.0", "metadata": []})",
                      ParseMode::Strict);
  EXPECT_FALSE(result.datasheet.has_value());
  EXPECT_TRUE(has_diag(result, "metadata", "type-mismatch", Severity::Error));
}

TEST(Parser, WrongJsonTypesAreTypeMismatches) {
  const char* doc = R"({
    "datasheet_format_version": "1.0",
    "metadata": {"title": 7},
    "purpose": {"beneficiaries": "not a list"},
    "source": {"ethical_approval": "yes"},
    "temporal": {"coverage_start": 2019},
    "demographics": {"age_min": "young", "age_distribution": {"a": "high"}},
    "characteristics": {"record_count": 12.5}
  })";
  auto result = parse(doc, ParseMode::Strict);
  EXPECT_FALSE(result.datasheet.has_value());
  EXPECT_TRUE(has_diag(result, "metadata.title", "type-mismatch", Severity::Error));
  EXPECT_TRUE(has_diag(result, "purpose.beneficiaries", "type-mismatch", Severity::Error));
  EXPECT_TRUE(has_diag(result, "source.ethical_approval", "type-mismatch", Severity::Error));
  EXPECT_TRUE(has_diag(result, "temporal.coverage_start", "type-mismatch", Severity::Error));
  EXPECT_TRUE(has_diag(result, "demographics.age_min", "type-mismatch", Severity::Error));
  EXPECT_TRUE(has_diag(result, "demographics.age_distribution", "type-mismatch",
                       Severity::Error));
  EXPECT_TRUE(has_diag(result, "characteristics.record_count", "type-mismatch",
                       Severity::Error));
}

TEST(Parser, ListElementsMustAllBeStrings) {
  auto result = parse(
      R"({"datasheet_format_version": "1.0", "purpose": {"beneficiaries": ["a", 3]}})",
      ParseMode::Strict);
  EXPECT_FALSE(result.datasheet.has_value());
  EXPECT_TRUE(has_diag(result, "purpose.beneficiaries", "type-mismatch", Severity::Error));
}

TEST(Parser, BadVocabularyTokensAreVocabViolations) {
  const char* doc = R"({
    "datasheet_format_version": "1.0",
    "characteristics": {"media_type": "hologram"},
    "personal_data": {"sensitivity": "extreme", "reidentification_risk": "certain"},
    "risk_compliance": {"generic_risk_level": "severe", "legal_risk_level": "model"}
  })";
  auto result = parse(doc, ParseMode::Strict);
  EXPECT_FALSE(result.datasheet.has_value());
  for (const char* path :
       {"characteristics.media_type", "personal_data.sensitivity",
        "personal_data.reidentification_risk", "risk_compliance.generic_risk_level",
        "risk_compliance.legal_risk_level"}) {
    EXPECT_TRUE(has_diag(result, path, "vocab-violation", Severity::Error)) << path;
  }
}

TEST(Parser, BiasLikelihoodKeysAndValuesAreChecked) {
  auto bad_key = parse(R"({"datasheet_format_version": "1.0",
                           "demographics": {"bias_likelihoods": {"vibes": "low"}}})",
                       ParseMode::Strict);
  EXPECT_TRUE(has_diag(bad_key, "demographics.bias_likelihoods", "vocab-violation",
                       Severity::Error));

  auto bad_value = parse(R"({"datasheet_format_version": "1.0",
                             "demographics": {"bias_likelihoods": {"sample": "sky-high"}}})",
                         ParseMode::Strict);
  EXPECT_TRUE(has_diag(bad_value, "demographics.bias_likelihoods", "vocab-violation",
                       Severity::Error));

  auto good = parse(R"({"datasheet_format_version": "1.0",
                        "demographics": {"bias_likelihoods": {"sample": "low",
                                                              "data-driven": "very-high"}}})",
                    ParseMode::Strict);
  ASSERT_TRUE(good.datasheet.has_value());
  const auto& map = *good.datasheet->demographics.bias_likelihoods;
  EXPECT_EQ(map.at(BiasCategory::Sample), Likelihood::Low);
  EXPECT_EQ(map.at(BiasCategory::DataDriven), Likelihood::VeryHigh);
}

TEST(Parser, ValueLevelInvariantsAreEnforced) {
  const char* doc = R"({
    "datasheet_format_version": "1.0",
    "temporal": {"coverage_start": "2021-02-30"},
    "demographics": {"age_min": -1, "age_max": 151,
                     "age_distribution": {"a": 0.8, "b": 0.4}},
    "characteristics": {"record_count": -5}
  })";
  auto result = parse(doc, ParseMode::Strict);
  EXPECT_FALSE(result.datasheet.has_value());
  EXPECT_TRUE(has_diag(result, "temporal.coverage_start", "invariant-violation",
                       Severity::Error));
  EXPECT_TRUE(has_diag(result, "demographics.age_min", "invariant-violation", Severity::Error));
  EXPECT_TRUE(has_diag(result, "demographics.age_max", "invariant-violation", Severity::Error));
  EXPECT_TRUE(has_diag(result, "demographics.age_distribution", "invariant-violation",
                       Severity::Error));
  EXPECT_TRUE(has_diag(result, "characteristics.record_count", "invariant-violation",
                       Severity::Error));
}

TEST(Parser, ShareAboveOneIsAnInvariantViolation) {
  auto result = parse(R"({"datasheet_format_version": "1.0",
                          "demographics": {"gender_distribution": {"a": 1.2}}})",
                      ParseMode::Strict);
  EXPECT_TRUE(has_diag(result, "demographics.gender_distribution", "invariant-violation",
                       Severity::Error));
}

TEST(Parser, PartialDatesNormalize) {
  auto result = parse(R"({"datasheet_format_version": "1.0",
                          "temporal": {"coverage_start": "2019", "coverage_end": "2021-06"}})",
                      ParseMode::Strict);
  ASSERT_TRUE(result.datasheet.has_value());
  EXPECT_EQ(result.datasheet->temporal.coverage_start->to_string(), "2019-01-01");
  EXPECT_EQ(result.datasheet->temporal.coverage_end->to_string(), "2021-06-01");
}

TEST(Parser, IdentifierIsStoredTrimmed) {
  auto result = parse(R"({"datasheet_format_version": "1.0",
                          "metadata": {"identifier": "  doi:10.1/x  "}})",
                      ParseMode::Strict);
  ASSERT_TRUE(result.datasheet.has_value());
  EXPECT_EQ(result.datasheet->metadata.identifier, "doi:10.1/x");
}

TEST(Parser, EmptyListsSurviveAsAffirmativeNone) {
  auto result = parse(R"({"datasheet_format_version": "1.0",
                          "usage_restriction": {"access_restrictions": []}})",
                      ParseMode::Strict);
  ASSERT_TRUE(result.datasheet.has_value());
  ASSERT_TRUE(result.datasheet->usage_restriction.access_restrictions.has_value());
  EXPECT_TRUE(result.datasheet->usage_restriction.access_restrictions->empty());
}

TEST(Parser, DuplicateDiagnosticsCollapse) {
  auto result = parse(R"({"datasheet_format_version": "1.0",
                          "purpose": {"beneficiaries": [1, 2, 3]}})",
                      ParseMode::Strict);
  EXPECT_EQ(result.diagnostics.size(), 1u);
}

TEST(Parser, FormatVersionIsStable) {
  EXPECT_EQ(format_version(), "1.0");
}

}  // namespace
