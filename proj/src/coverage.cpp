#include "dsf/coverage.hpp"

#include "dsf/field_registry.hpp"

namespace dsf {
namespace {

std::set<std::string> all_field_paths() {
  std::set<std::string> paths;
  for (const FieldSpec& spec : field_registry()) paths.insert(spec.path);
  return paths;
}

std::set<std::string> section_paths(SectionId section, std::initializer_list<const char*> keys) {
  std::set<std::string> paths;
  for (const char* key : keys) {
    paths.insert(std::string(to_token(section)) + "." + key);
  }
  return paths;
}

void cover_whole_section(std::set<std::string>& paths, SectionId section) {
  for (const FieldSpec* spec : section_fields(section)) paths.insert(spec->path);
}

CoverageProfile make_datasheets_for_datasets() {
  CoverageProfile profile;
  profile.name = "datasheets-for-datasets";
  profile.display_name = "Datasheets for Datasets";
  cover_whole_section(profile.covered_paths, SectionId::Metadata);
  cover_whole_section(profile.covered_paths, SectionId::Purpose);
  cover_whole_section(profile.covered_paths, SectionId::Source);
  profile.covered_paths.merge(section_paths(
      SectionId::Temporal, {"coverage_start", "coverage_end", "update_frequency"}));
  profile.covered_paths.merge(section_paths(
      SectionId::Characteristics, {"record_count", "feature_description", "missing_elements"}));
  profile.covered_paths.merge(section_paths(
      SectionId::PersonalData, {"contains_personal_data", "personal_categories"}));
  profile.covered_paths.merge(section_paths(
      SectionId::RiskCompliance, {"jurisdiction", "applicable_laws"}));
  profile.covered_paths.merge(section_paths(
      SectionId::UsageRestriction, {"access_restrictions", "permissions"}));
  profile.machine_readable = false;
  profile.interoperability = CoverageMark::Absent;
  return profile;
}

CoverageProfile make_dataset_nutrition_label() {
  CoverageProfile profile;
  profile.name = "dataset-nutrition-label";
  profile.display_name = "Dataset Nutrition Label";
  cover_whole_section(profile.covered_paths, SectionId::Metadata);
  cover_whole_section(profile.covered_paths, SectionId::Purpose);
  cover_whole_section(profile.covered_paths, SectionId::Source);
  profile.covered_paths.merge(section_paths(SectionId::Temporal, {"last_updated"}));
  profile.covered_paths.merge(section_paths(
      SectionId::Demographics,
      {"age_distribution", "gender_distribution", "ethnicity_distribution",
       "geographic_origin"}));
  profile.covered_paths.merge(section_paths(
      SectionId::Characteristics, {"media_type", "record_count", "feature_description"}));
  profile.covered_paths.merge(section_paths(
      SectionId::PersonalData, {"contains_personal_data", "personal_categories", "sensitivity"}));
  profile.covered_paths.merge(section_paths(SectionId::RiskCompliance, {"generic_risk_level"}));
  cover_whole_section(profile.covered_paths, SectionId::UsageRestriction);
  profile.machine_readable = true;
  profile.interoperability = CoverageMark::Partial;
  return profile;
}

CoverageProfile make_data_statements_nlp() {
  CoverageProfile profile;
  profile.name = "data-statements-nlp";
  profile.display_name = "Data Statements for NLP";
  cover_whole_section(profile.covered_paths, SectionId::Metadata);
  cover_whole_section(profile.covered_paths, SectionId::Purpose);
  profile.covered_paths.merge(section_paths(
      SectionId::Source, {"source_description", "provenance", "funding_sources"}));
  cover_whole_section(profile.covered_paths, SectionId::Demographics);
  profile.covered_paths.merge(section_paths(
      SectionId::Characteristics, {"media_type", "feature_description"}));
  profile.covered_paths.merge(section_paths(
      SectionId::PersonalData, {"contains_personal_data", "personal_categories"}));
  profile.machine_readable = false;
  profile.interoperability = CoverageMark::Absent;
  return profile;
}

std::vector<CoverageProfile> build_profiles() {
  std::vector<CoverageProfile> profiles;
  CoverageProfile self;
  self.name = "this-approach";
  self.display_name = "Healthcare AI Datasheets";
  self.covered_paths = all_field_paths();
  self.machine_readable = true;
  self.interoperability = CoverageMark::Partial;
  profiles.push_back(std::move(self));
  profiles.push_back(make_datasheets_for_datasets());
  profiles.push_back(make_dataset_nutrition_label());
  profiles.push_back(make_data_statements_nlp());
  return profiles;
}

}  // namespace

std::string_view to_token(CoverageMark mark) {
  switch (mark) {
    case CoverageMark::Absent: return "absent";
    case CoverageMark::Partial: return "partial";
    case CoverageMark::Full: return "full";
  }
  return "absent";
}

std::string_view to_symbol(CoverageMark mark) {
  switch (mark) {
    case CoverageMark::Absent: return "✗";
    case CoverageMark::Partial: return "○";
    case CoverageMark::Full: return "●";
  }
  return "✗";
}

const std::vector<CoverageProfile>& builtin_profiles() {
  static const std::vector<CoverageProfile> profiles = build_profiles();
  return profiles;
}

const CoverageProfile* find_profile(const std::string& name) {
  for (const CoverageProfile& profile : builtin_profiles()) {
    if (profile.name == name) return &profile;
  }
  return nullptr;
}

CoverageMark section_mark(const CoverageProfile& profile, SectionId section) {
  std::size_t covered = 0;
  std::size_t total = 0;
  for (const FieldSpec* spec : section_fields(section)) {
    ++total;
    if (profile.covered_paths.count(spec->path) > 0) ++covered;
  }
  if (covered == 0) return CoverageMark::Absent;
  if (covered == total) return CoverageMark::Full;
  return CoverageMark::Partial;
}

CoverageMatrix coverage_matrix(const std::vector<CoverageProfile>& profiles) {
  CoverageMatrix matrix;
  for (SectionId section : kAllSections) {
    matrix.categories.emplace_back(to_token(section));
  }
  matrix.categories.emplace_back("machine_readable");
  matrix.categories.emplace_back("interoperability");
  for (const CoverageProfile& profile : profiles) {
    matrix.profiles.push_back(profile.name);
  }

  for (SectionId section : kAllSections) {
    std::vector<CoverageMark> row;
    for (const CoverageProfile& profile : profiles) {
      row.push_back(section_mark(profile, section));
    }
    matrix.cells.push_back(std::move(row));
  }
  std::vector<CoverageMark> machine_row;
  std::vector<CoverageMark> interop_row;
  for (const CoverageProfile& profile : profiles) {
    machine_row.push_back(profile.machine_readable ? CoverageMark::Full : CoverageMark::Absent);
    interop_row.push_back(profile.interoperability);
  }
  matrix.cells.push_back(std::move(machine_row));
  matrix.cells.push_back(std::move(interop_row));
  return matrix;
}

}  // namespace dsf
