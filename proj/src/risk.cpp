#include "dsf/risk.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace dsf {
namespace {

bool contains_lowered(const std::string& haystack, const std::string& needle) {
  std::string lowered;
  lowered.reserve(haystack.size());
  for (char c : haystack) {
    lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return lowered.find(needle) != std::string::npos;
}

std::string stripped_trigger(const RiskItem& item) {
  constexpr std::string_view prefix = "absent:";
  if (item.trigger.rfind(prefix, 0) == 0) return item.trigger.substr(prefix.size());
  return item.trigger;
}

class RuleSet {
 public:
  RuleSet(const Datasheet& ds, const Date& reference_date, const RiskThresholds& thresholds)
      : ds_(ds), reference_(reference_date), thresholds_(thresholds) {}

  std::vector<RiskItem> run() {
    sample_missing();
    imbalance();
    staleness();
    annotator_unknown();
    reidentification();
    incompleteness();
    distribution_gaps();
    return std::move(items_);
  }

 private:
  void sample_missing() {
    struct Entry {
      const std::optional<FractionMap>& map;
      const char* path;
      const char* label;
    };
    const Entry entries[] = {
        {ds_.demographics.age_distribution, "demographics.age_distribution", "age"},
        {ds_.demographics.gender_distribution, "demographics.gender_distribution", "gender"},
        {ds_.demographics.ethnicity_distribution, "demographics.ethnicity_distribution",
         "ethnicity"},
    };
    for (const Entry& entry : entries) {
      if (entry.map.has_value()) continue;
      items_.push_back({"B-SAMPLE-MISSING", BiasCategory::Sample, Likelihood::Unknown,
                        RiskLevel::High, std::string("absent:") + entry.path,
                        std::string("the ") + entry.label + " distribution is not documented",
                        "obtain or estimate the missing demographic distribution before "
                        "model training",
                        std::nullopt});
    }
  }

  void imbalance() {
    for_each_distribution([&](const FractionMap& map, const char* path) {
      if (map.empty() || map.max_share() <= thresholds_.imbalance_share_ceiling) return;
      items_.push_back({"B-DATADRIVEN-IMBALANCE", BiasCategory::DataDriven, Likelihood::High,
                        RiskLevel::Medium, path,
                        std::string("one group exceeds the share ceiling in ") + path,
                        "rebalance or stratify sampling across over-represented groups",
                        std::nullopt});
    });
  }

  void staleness() {
    const auto& t = ds_.temporal;
    const char* trigger = nullptr;
    if (t.last_updated && t.last_updated->plus_years(thresholds_.staleness_years) < reference_) {
      trigger = "temporal.last_updated";
    } else if (t.coverage_end &&
               t.coverage_end->plus_years(thresholds_.staleness_years) < reference_) {
      trigger = "temporal.coverage_end";
    }
    if (trigger == nullptr) return;
    items_.push_back({"B-TEMPORAL-STALE", BiasCategory::Temporal, Likelihood::Medium,
                      RiskLevel::Medium, trigger,
                      "the dataset is older than the staleness window",
                      "revalidate dataset currency against present-day clinical practice",
                      std::nullopt});
  }

  void annotator_unknown() {
    if (!ds_.characteristics.media_type.has_value()) return;
    const auto& provenance = ds_.source.provenance;
    std::string trigger;
    std::string message;
    if (!provenance.has_value()) {
      trigger = "absent:source.provenance";
      message = "no provenance is documented for the recorded media";
    } else if (!contains_lowered(*provenance, "label") &&
               !contains_lowered(*provenance, "annotat")) {
      trigger = "source.provenance";
      message = "the provenance does not describe who labeled the data";
    } else {
      return;
    }
    items_.push_back({"B-ANNOTATOR-UNKNOWN", BiasCategory::Annotator, Likelihood::Unknown,
                      RiskLevel::High, std::move(trigger), std::move(message),
                      "document the labeling process and annotator pool before reuse",
                      std::nullopt});
  }

  void reidentification() {
    const auto& p = ds_.personal_data;
    if (p.contains_personal_data != true) return;
    std::string trigger;
    std::string message;
    if (!p.anonymization_techniques.has_value()) {
      trigger = "absent:personal_data.anonymization_techniques";
      message = "personal data is present without documented anonymization";
    } else if (p.reidentification_risk == Likelihood::High ||
               p.reidentification_risk == Likelihood::VeryHigh ||
               p.reidentification_risk == Likelihood::Unknown) {
      trigger = "personal_data.reidentification_risk";
      message = "the residual re-identification risk is not controlled";
    } else {
      return;
    }
    items_.push_back({"D-REIDENT", DataRiskKind::Reidentification, Likelihood::High,
                      RiskLevel::High, std::move(trigger), std::move(message),
                      "apply and document anonymization appropriate to the data sensitivity",
                      "no public redistribution"});
  }

  void incompleteness() {
    if (ds_.characteristics.incomplete != true) return;
    items_.push_back({"D-INCOMPLETE", DataRiskKind::Incompleteness, Likelihood::Medium,
                      RiskLevel::Medium, "characteristics.incomplete",
                      "the datasheet declares incomplete records",
                      "assess impact of missing elements before reuse", std::nullopt});
  }

  void distribution_gaps() {
    for_each_distribution([&](const FractionMap& map, const char* path) {
      if (map.sum() >= thresholds_.distribution_coverage_floor) return;
      items_.push_back({"D-FRACTION-GAP", DataRiskKind::Missingness, Likelihood::Medium,
                        RiskLevel::Low, path,
                        std::string("the documented shares in ") + path +
                            " leave part of the population undescribed",
                        "document the undescribed population share in each distribution",
                        std::nullopt});
    });
  }

  template <typename Fn>
  void for_each_distribution(Fn&& fn) {
    struct Entry {
      const std::optional<FractionMap>& map;
      const char* path;
    };
    const Entry entries[] = {
        {ds_.demographics.age_distribution, "demographics.age_distribution"},
        {ds_.demographics.gender_distribution, "demographics.gender_distribution"},
        {ds_.demographics.ethnicity_distribution, "demographics.ethnicity_distribution"},
    };
    for (const Entry& entry : entries) {
      if (entry.map.has_value()) fn(*entry.map, entry.path);
    }
  }

  const Datasheet& ds_;
  const Date& reference_;
  const RiskThresholds& thresholds_;
  std::vector<RiskItem> items_;
};

}  // namespace

AggregateLevels aggregate(const std::vector<RiskItem>& items, bool personal_data_present) {
  AggregateLevels levels;
  bool personal_trigger = false;
  for (const RiskItem& item : items) {
    levels.generic = std::max(levels.generic, item.severity);
    if (stripped_trigger(item).rfind("personal_data.", 0) == 0) personal_trigger = true;
  }
  if (personal_trigger) {
    levels.legal = LegalRiskTier::High;
  } else if (personal_data_present) {
    levels.legal = LegalRiskTier::Limited;
  }
  return levels;
}

RiskAssessment assess(const Datasheet& ds, const Date& reference_date,
                      const RiskThresholds& thresholds) {
  RiskAssessment assessment;
  assessment.items = RuleSet(ds, reference_date, thresholds).run();

  bool personal = ds.personal_data.contains_personal_data == true;
  AggregateLevels levels = aggregate(assessment.items, personal);
  assessment.generic_level = levels.generic;
  assessment.legal_tier = levels.legal;
  assessment.declared_generic = ds.risk_compliance.generic_risk_level;
  assessment.declared_legal = ds.risk_compliance.legal_risk_level;

  if (assessment.declared_generic && *assessment.declared_generic != levels.generic) {
    assessment.items.push_back({"D-DECLARED-MISMATCH", DataRiskKind::DeclarationMismatch,
                                Likelihood::Medium, RiskLevel::Low,
                                "risk_compliance.generic_risk_level",
                                "the declared generic risk level differs from the computed level",
                                std::nullopt, std::nullopt});
  }
  if (assessment.declared_legal && *assessment.declared_legal != levels.legal) {
    assessment.items.push_back({"D-DECLARED-MISMATCH", DataRiskKind::DeclarationMismatch,
                                Likelihood::Medium, RiskLevel::Low,
                                "risk_compliance.legal_risk_level",
                                "the declared legal risk tier differs from the computed tier",
                                std::nullopt, std::nullopt});
  }
  return assessment;
}

}  // namespace dsf
