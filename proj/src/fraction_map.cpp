#include "dsf/fraction_map.hpp"

#include <cmath>

namespace dsf {

std::optional<FractionMap> FractionMap::make(std::map<std::string, double> shares) {
  double total = 0.0;
  for (const auto& [label, value] : shares) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) return std::nullopt;
    total += value;
  }
  if (total > 1.0 + kSumTolerance) return std::nullopt;
  return FractionMap(std::move(shares));
}

double FractionMap::sum() const {
  double total = 0.0;
  for (const auto& [label, value] : shares_) total += value;
  return total;
}

double FractionMap::max_share() const {
  double best = 0.0;
  for (const auto& [label, value] : shares_) {
    if (value > best) best = value;
  }
  return best;
}

}  // namespace dsf
