#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dsf/datasheet.hpp"
#include "dsf/date.hpp"
#include "dsf/vocab.hpp"

namespace dsf {

// A risk item is either a bias risk or a data-handling risk.
using RiskCategory = std::variant<BiasCategory, DataRiskKind>;

struct RiskItem {
  std::string rule_id;
  RiskCategory category;
  Likelihood likelihood;
  RiskLevel severity;
  // Field path that triggered the rule; "absent:" prefix marks rules that
  // fire because a field is not populated.
  std::string trigger;
  std::string message;
  std::optional<std::string> mitigation;
  std::optional<std::string> prohibition;
};

struct RiskThresholds {
  // Largest share one group may hold in a distribution.
  double imbalance_share_ceiling = 0.8;
  // Years after which an un-refreshed dataset counts as stale.
  int staleness_years = 5;
  // Minimum population share a distribution must describe.
  double distribution_coverage_floor = 0.9;
};

struct AggregateLevels {
  RiskLevel generic = RiskLevel::Low;
  LegalRiskTier legal = LegalRiskTier::Minimal;
};

struct RiskAssessment {
  std::vector<RiskItem> items;
  RiskLevel generic_level = RiskLevel::Low;
  LegalRiskTier legal_tier = LegalRiskTier::Minimal;
  std::optional<RiskLevel> declared_generic;
  std::optional<LegalRiskTier> declared_legal;
};

// Overall levels for a set of items. The generic level is the highest item
// severity. The legal tier is high when any item touches the personal_data
// section, limited when personal data is present without such items, and
// minimal otherwise.
AggregateLevels aggregate(const std::vector<RiskItem>& items, bool personal_data_present);

// Runs every risk rule against the datasheet. reference_date anchors the
// staleness check. Items appear in rule order. When the datasheet declares
// its own risk levels and they disagree with the computed ones, a
// declaration-mismatch item is appended; it never changes the computed levels.
RiskAssessment assess(const Datasheet& ds, const Date& reference_date,
                      const RiskThresholds& thresholds = {});

}  // namespace dsf
