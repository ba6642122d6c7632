#include "dsf/serializer.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include "dsf/field_registry.hpp"
#include "dsf/parser.hpp"
#include "generators.hpp"

namespace {

using namespace dsf;

TEST(Serializer, EmptyTemplateKeepsAllSectionContainers) {
  std::string text = serialize(new_template());
  auto doc = nlohmann::ordered_json::parse(text);
  ASSERT_EQ(doc.size(), 11u);
  auto it = doc.begin();
  EXPECT_EQ(it.key(), "datasheet_format_version");
  EXPECT_EQ(it.value(), "1.0");
  for (SectionId section : kAllSections) {
    ++it;
    EXPECT_EQ(it.key(), to_token(section));
    EXPECT_TRUE(it.value().is_object());
    EXPECT_TRUE(it.value().empty());
  }
  EXPECT_EQ(text.back(), '\n');
}

TEST(Serializer, FieldsAppearInRegistryOrder) {
  Datasheet ds;
  ds.metadata.contact = "c";
  ds.metadata.title = "t";
  ds.metadata.license = "l";
  std::string text = serialize(ds);
  auto doc = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [key, value] : doc["metadata"].items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"title", "license", "contact"}));
}

TEST(Serializer, UnpopulatedFieldsAreOmitted) {
  Datasheet ds;
  ds.metadata.title = "t";
  auto doc = nlohmann::ordered_json::parse(serialize(ds));
  EXPECT_EQ(doc["metadata"].size(), 1u);
  EXPECT_TRUE(doc["purpose"].empty());
}

TEST(Serializer, EmptyListsAndMapsAreKept) {
  Datasheet ds;
  ds.usage_restriction.access_restrictions = TextList{};
  ds.demographics.bias_likelihoods = BiasLikelihoodMap{};
  ds.demographics.age_distribution = *FractionMap::make({});
  auto doc = nlohmann::ordered_json::parse(serialize(ds));
  EXPECT_TRUE(doc["usage_restriction"]["access_restrictions"].is_array());
  EXPECT_TRUE(doc["usage_restriction"]["access_restrictions"].empty());
  EXPECT_TRUE(doc["demographics"]["bias_likelihoods"].is_object());
  EXPECT_TRUE(doc["demographics"]["age_distribution"].is_object());
}

TEST(Serializer, DatesSerializeNormalized) {
  Datasheet ds;
  ds.temporal.coverage_start = *Date::parse("2019");
  auto doc = nlohmann::ordered_json::parse(serialize(ds));
  EXPECT_EQ(doc["temporal"]["coverage_start"], "2019-01-01");
}

TEST(Serializer, RoundTripPreservesEveryGeneratedSheet) {
  testgen::Rng rng(0x5eed0001);
  for (int i = 0; i < 300; ++i) {
    Datasheet ds = testgen::random_datasheet(rng);
    std::string first = serialize(ds);
    ParseResult reparsed = parse(first, ParseMode::Strict);
    ASSERT_TRUE(reparsed.datasheet.has_value()) << "iteration " << i << "\n" << first;
    EXPECT_TRUE(reparsed.diagnostics.empty()) << "iteration " << i;
    EXPECT_TRUE(*reparsed.datasheet == ds) << "iteration " << i << "\n" << first;
    EXPECT_EQ(serialize(*reparsed.datasheet), first) << "iteration " << i;
  }
}

TEST(Serializer, OutputIsDeterministic) {
  testgen::Rng rng(0x5eed0002);
  Datasheet ds = testgen::random_datasheet(rng);
  EXPECT_EQ(serialize(ds), serialize(ds));
  Datasheet copy = ds;
  EXPECT_EQ(serialize(copy), serialize(ds));
}

}  // namespace
