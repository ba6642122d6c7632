#include "dsf/validator.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <utility>

#include "dsf/field_registry.hpp"

namespace dsf {
namespace {

std::string normalized_label(const std::string& text) {
  std::string out;
  bool in_space = true;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!in_space && !out.empty()) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

bool non_empty(const std::optional<TextList>& list) {
  return list.has_value() && !list->empty();
}

bool dotted_numeric(const std::string& text) {
  if (text.empty()) return false;
  bool digit_seen = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digit_seen = true;
    } else if (c == '.') {
      if (!digit_seen) return false;
      digit_seen = false;
    } else {
      return false;
    }
  }
  return digit_seen;
}

class RuleRunner {
 public:
  explicit RuleRunner(const Datasheet& ds) : ds_(ds) {}

  std::vector<Diagnostic> run() {
    check_required();
    check_r1();
    check_r2();
    check_r3();
    check_r4();
    check_r5();
    check_r6();
    check_r7();
    check_r8();
    check_r9();
    check_r10();
    check_r11();
    check_r12();
    check_r13();
    return std::move(findings_);
  }

 private:
  void check_required() {
    for (const FieldSpec& spec : field_registry()) {
      if (spec.required && !spec.get(ds_).has_value()) {
        add(spec.path, std::string(diag_code::kMissingRequired),
            "required field is not populated");
      }
    }
  }

  void check_r1() {
    if (ds_.characteristics.incomplete == true &&
        !non_empty(ds_.characteristics.missing_elements)) {
      add("characteristics.missing_elements", "R1",
          "incomplete is true but missing_elements does not list the gaps");
    }
  }

  void check_r2() {
    const auto& t = ds_.temporal;
    if (t.coverage_start && t.coverage_end && *t.coverage_end < *t.coverage_start) {
      add("temporal.coverage_end", "R2", "coverage_end precedes coverage_start");
    }
  }

  void check_r3() {
    if (ds_.personal_data.contains_personal_data == false &&
        non_empty(ds_.personal_data.personal_categories)) {
      add("personal_data.personal_categories", "R3",
          "personal data categories are listed although contains_personal_data is false");
    }
  }

  void check_r4() {
    const auto& u = ds_.usage_restriction;
    if (!non_empty(u.permissions) || !non_empty(u.prohibitions)) return;
    std::set<std::string> permitted;
    for (const std::string& entry : *u.permissions) permitted.insert(normalized_label(entry));
    for (const std::string& entry : *u.prohibitions) {
      if (permitted.count(normalized_label(entry)) > 0) {
        add("usage_restriction.prohibitions", "R4",
            "'" + entry + "' is both permitted and prohibited");
        return;
      }
    }
  }

  void check_r5() {
    if (ds_.source.approving_body.has_value() && ds_.source.ethical_approval != true) {
      add("source.ethical_approval", "R5",
          "an approving body is named but ethical_approval is not confirmed");
    }
  }

  void check_r6() {
    if (non_empty(ds_.personal_data.special_categories) &&
        ds_.personal_data.contains_personal_data != true) {
      add("personal_data.contains_personal_data", "R6",
          "special categories are listed but contains_personal_data is not true");
    }
  }

  void check_r7() {
    const auto& d = ds_.demographics;
    if (d.age_min && d.age_max && *d.age_max < *d.age_min) {
      add("demographics.age_max", "R7", "age_max is below age_min");
    }
  }

  void check_r8() {
    const auto& t = ds_.temporal;
    if (t.last_updated && t.coverage_start && *t.last_updated < *t.coverage_start) {
      add("temporal.last_updated", "R8", "last_updated precedes coverage_start");
    }
  }

  void check_r9() {
    if (non_empty(ds_.characteristics.missing_reasons) &&
        !non_empty(ds_.characteristics.missing_elements)) {
      add("characteristics.missing_reasons", "R9",
          "missing_reasons are given but missing_elements does not list the gaps");
    }
  }

  void check_r10() {
    const auto& p = ds_.personal_data;
    if (p.reidentification_risk.has_value() && p.contains_personal_data != true &&
        !non_empty(p.anonymization_techniques)) {
      add("personal_data.reidentification_risk", "R10",
          "reidentification_risk is stated although no personal data or anonymization "
          "context is declared");
    }
  }

  void check_r11() {
    check_unique("purpose.beneficiaries", ds_.purpose.beneficiaries);
    check_unique("purpose.intended_uses", ds_.purpose.intended_uses);
    check_unique("bias_mitigation.applied_methods", ds_.bias_mitigation.applied_methods);
    check_unique("bias_mitigation.suggested_methods", ds_.bias_mitigation.suggested_methods);
  }

  void check_unique(const std::string& path, const std::optional<TextList>& list) {
    if (!non_empty(list)) return;
    std::set<std::string> seen;
    for (const std::string& entry : *list) {
      if (!seen.insert(normalized_label(entry)).second) {
        add(path, "R11", "'" + entry + "' appears more than once");
        return;
      }
    }
  }

  void check_r12() {
    if (!ds_.metadata.version) return;
    const std::string& version = *ds_.metadata.version;
    if (!dotted_numeric(version) && !Date::parse(version)) {
      add("metadata.version", "R12", "version must be dotted numbers or an ISO date");
    }
  }

  void check_r13() {
    if (ds_.metadata.identifier && normalized_label(*ds_.metadata.identifier).empty()) {
      add("metadata.identifier", "R13", "identifier is blank");
    }
    if (non_empty(ds_.risk_compliance.impact_assessments)) {
      for (const std::string& entry : *ds_.risk_compliance.impact_assessments) {
        if (normalized_label(entry).empty()) {
          add("risk_compliance.impact_assessments", "R13",
              "impact assessment entries must not be blank");
          break;
        }
      }
    }
  }

  void add(std::string path, std::string code, std::string message) {
    for (const Diagnostic& existing : findings_) {
      if (existing.path == path && existing.code == code) return;
    }
    findings_.push_back({std::move(path), std::move(code), Severity::Error, std::move(message)});
  }

  const Datasheet& ds_;
  std::vector<Diagnostic> findings_;
};

}  // namespace

ValidationReport validate(const Datasheet& ds) {
  ValidationReport report;
  report.findings = RuleRunner(ds).run();
  report.total_fields = field_registry().size();
  report.populated_fields = populated_field_count(ds);
  for (SectionId section : kAllSections) {
    report.sections.push_back(
        {section, populated_field_count(ds, section), section_field_count(section)});
  }
  report.valid = !has_errors(report.findings);
  return report;
}

}  // namespace dsf
