#include "dsf/coverage.hpp"

#include <gtest/gtest.h>

#include <map>

#include "dsf/field_registry.hpp"

namespace {

using namespace dsf;

// Comparison grid the matrix has to reproduce, keyed by category row.
// Columns: this-approach, datasheets-for-datasets, dataset-nutrition-label,
// data-statements-nlp.
const std::map<std::string, std::vector<std::string>> kExpectedRows = {
    {"metadata", {"full", "full", "full", "full"}},
    {"purpose", {"full", "full", "full", "full"}},
    {"source", {"full", "full", "full", "partial"}},
    {"temporal", {"full", "partial", "partial", "absent"}},
    {"demographics", {"full", "absent", "partial", "full"}},
    {"characteristics", {"full", "partial", "partial", "partial"}},
    {"bias_mitigation", {"full", "absent", "absent", "absent"}},
    {"personal_data", {"full", "partial", "partial", "partial"}},
    {"risk_compliance", {"full", "partial", "partial", "absent"}},
    {"usage_restriction", {"full", "partial", "full", "absent"}},
    {"machine_readable", {"full", "absent", "full", "absent"}},
    {"interoperability", {"partial", "absent", "partial", "absent"}},
};

TEST(Coverage, BuiltinProfilesAreComplete) {
  const auto& profiles = builtin_profiles();
  ASSERT_EQ(profiles.size(), 4u);
  EXPECT_EQ(profiles[0].name, "this-approach");
  EXPECT_EQ(profiles[1].name, "datasheets-for-datasets");
  EXPECT_EQ(profiles[2].name, "dataset-nutrition-label");
  EXPECT_EQ(profiles[3].name, "data-statements-nlp");
  EXPECT_EQ(profiles[0].display_name, "Healthcare AI Datasheets");

  // The reference profile covers the whole registry.
  EXPECT_EQ(profiles[0].covered_paths.size(), field_registry().size());
  for (const FieldSpec& spec : field_registry()) {
    EXPECT_TRUE(profiles[0].covered_paths.count(spec.path)) << spec.path;
  }

  // Every covered path in every profile names a real field.
  for (const CoverageProfile& profile : profiles) {
    for (const std::string& path : profile.covered_paths) {
      EXPECT_NE(find_field(path), nullptr) << profile.name << " lists " << path;
    }
  }
}

TEST(Coverage, MatrixMatchesTheComparisonGrid) {
  CoverageMatrix matrix = coverage_matrix(builtin_profiles());
  ASSERT_EQ(matrix.profiles.size(), 4u);
  ASSERT_EQ(matrix.categories.size(), 12u);
  ASSERT_EQ(matrix.cells.size(), 12u);

  for (std::size_t row = 0; row < matrix.categories.size(); ++row) {
    const std::string& category = matrix.categories[row];
    auto it = kExpectedRows.find(category);
    ASSERT_NE(it, kExpectedRows.end()) << "unexpected row " << category;
    ASSERT_EQ(matrix.cells[row].size(), 4u);
    for (std::size_t col = 0; col < 4; ++col) {
      EXPECT_EQ(to_token(matrix.cells[row][col]), it->second[col])
          << category << " / " << matrix.profiles[col];
    }
  }

  // Rows are the ten sections in canonical order, then the two extra axes.
  for (std::size_t i = 0; i < kAllSections.size(); ++i) {
    EXPECT_EQ(matrix.categories[i], to_token(kAllSections[i]));
  }
  EXPECT_EQ(matrix.categories[10], "machine_readable");
  EXPECT_EQ(matrix.categories[11], "interoperability");
}

TEST(Coverage, SectionMarkBoundaries) {
  CoverageProfile profile;
  profile.name = "probe";
  EXPECT_EQ(section_mark(profile, SectionId::Metadata), CoverageMark::Absent);

  profile.covered_paths.insert("metadata.title");
  EXPECT_EQ(section_mark(profile, SectionId::Metadata), CoverageMark::Partial);

  for (const FieldSpec* spec : section_fields(SectionId::Metadata)) {
    profile.covered_paths.insert(spec->path);
  }
  EXPECT_EQ(section_mark(profile, SectionId::Metadata), CoverageMark::Full);
  EXPECT_EQ(section_mark(profile, SectionId::Purpose), CoverageMark::Absent);
}

TEST(Coverage, FindProfileByName) {
  ASSERT_NE(find_profile("dataset-nutrition-label"), nullptr);
  EXPECT_EQ(find_profile("dataset-nutrition-label")->display_name, "Dataset Nutrition Label");
  EXPECT_EQ(find_profile("card-catalog"), nullptr);
  EXPECT_EQ(find_profile(""), nullptr);
}

TEST(Coverage, MarkTokensAndSymbols) {
  EXPECT_EQ(to_token(CoverageMark::Absent), "absent");
  EXPECT_EQ(to_token(CoverageMark::Partial), "partial");
  EXPECT_EQ(to_token(CoverageMark::Full), "full");
  EXPECT_EQ(to_symbol(CoverageMark::Absent), "✗");
  EXPECT_EQ(to_symbol(CoverageMark::Partial), "○");
  EXPECT_EQ(to_symbol(CoverageMark::Full), "●");
}

TEST(Coverage, MatrixHonorsProfileOrder) {
  std::vector<CoverageProfile> reversed(builtin_profiles().rbegin(),
                                        builtin_profiles().rend());
  CoverageMatrix matrix = coverage_matrix(reversed);
  EXPECT_EQ(matrix.profiles.front(), "data-statements-nlp");
  EXPECT_EQ(matrix.profiles.back(), "this-approach");
  // demographics row reversed: full, partial, absent, full
  EXPECT_EQ(matrix.cells[4][0], CoverageMark::Full);
  EXPECT_EQ(matrix.cells[4][3], CoverageMark::Full);
  EXPECT_EQ(matrix.cells[4][1], CoverageMark::Partial);
  EXPECT_EQ(matrix.cells[4][2], CoverageMark::Absent);
}

}  // namespace
