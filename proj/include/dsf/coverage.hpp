#pragma once

#include <set>
#include <string>
#include <vector>

#include "dsf/vocab.hpp"

namespace dsf {

enum class CoverageMark { Absent = 0, Partial = 1, Full = 2 };

std::string_view to_token(CoverageMark mark);   // "absent" / "partial" / "full"
std::string_view to_symbol(CoverageMark mark);  // cross / half / full circle

// What one documentation approach covers, expressed against the field
// registry. Section marks derive from covered_paths: full when every field
// of the section is covered, absent when none is.
struct CoverageProfile {
  std::string name;
  std::string display_name;
  std::set<std::string> covered_paths;
  bool machine_readable = false;
  CoverageMark interoperability = CoverageMark::Absent;
};

// Rows are the ten sections plus machine_readable and interoperability;
// columns follow the profile order given to coverage_matrix.
struct CoverageMatrix {
  std::vector<std::string> categories;
  std::vector<std::string> profiles;
  std::vector<std::vector<CoverageMark>> cells;
};

const std::vector<CoverageProfile>& builtin_profiles();
const CoverageProfile* find_profile(const std::string& name);

CoverageMark section_mark(const CoverageProfile& profile, SectionId section);
CoverageMatrix coverage_matrix(const std::vector<CoverageProfile>& profiles);

}  // namespace dsf
