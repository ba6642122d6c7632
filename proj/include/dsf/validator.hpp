#pragma once

#include <cstddef>
#include <vector>

#include "dsf/datasheet.hpp"
#include "dsf/diagnostics.hpp"
#include "dsf/vocab.hpp"

namespace dsf {

struct SectionCompleteness {
  SectionId section;
  std::size_t populated = 0;
  std::size_t total = 0;
};

// Outcome of the consistency rules plus completeness accounting.
// A datasheet is valid when no finding carries error severity.
struct ValidationReport {
  std::vector<Diagnostic> findings;
  std::vector<SectionCompleteness> sections;
  std::size_t populated_fields = 0;
  std::size_t total_fields = 0;
  bool valid = false;
};

// Checks required fields and the cross-field rules R1..R13.
// Rules, each anchored to one field path:
//   R1  incomplete=true needs missing_elements        characteristics.missing_elements
//   R2  coverage_start must not exceed coverage_end   temporal.coverage_end
//   R3  no personal categories when contains=false    personal_data.personal_categories
//   R4  permissions and prohibitions must not overlap usage_restriction.prohibitions
//   R5  approving_body needs ethical_approval=true    source.ethical_approval
//   R6  special categories need contains=true         personal_data.contains_personal_data
//   R7  age_min must not exceed age_max               demographics.age_max
//   R8  last_updated must not precede coverage_start  temporal.last_updated
//   R9  missing_reasons need missing_elements         characteristics.missing_reasons
//   R10 reidentification_risk needs personal data     personal_data.reidentification_risk
//       or anonymization context
//   R11 list entries must be unique                   the offending list
//   R12 version is dotted numbers or an ISO date      metadata.version
//   R13 labels must not be blank                      the offending field
ValidationReport validate(const Datasheet& ds);

}  // namespace dsf
