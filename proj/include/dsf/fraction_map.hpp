#pragma once

#include <map>
#include <optional>
#include <string>

namespace dsf {

/// Population shares keyed by bucket label (e.g. {"female": 0.52, "male": 0.48}).
/// Every share lies in [0,1] and the total never exceeds 1 (plus a small
/// rounding allowance). The total may fall short of 1: the shortfall is the
/// undocumented remainder of the population.
class FractionMap {
 public:
  static constexpr double kSumTolerance = 1e-9;

  /// Rejects maps with a share outside [0,1] or a total above 1 + kSumTolerance.
  static std::optional<FractionMap> make(std::map<std::string, double> shares);

  const std::map<std::string, double>& shares() const { return shares_; }
  bool empty() const { return shares_.empty(); }
  std::size_t size() const { return shares_.size(); }

  double sum() const;
  /// Largest single share; 0 for an empty map.
  double max_share() const;

  friend bool operator==(const FractionMap&, const FractionMap&) = default;

 private:
  explicit FractionMap(std::map<std::string, double> shares) : shares_(std::move(shares)) {}

  std::map<std::string, double> shares_;
};

}  // namespace dsf
