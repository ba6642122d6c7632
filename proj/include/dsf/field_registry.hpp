#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dsf/datasheet.hpp"

namespace dsf {

enum class FieldType {
  Text,
  TextList,
  Date,
  DateRange,
  Integer,
  FractionMap,
  Vocab,
  Boolean,
  Structured,
};

enum class VocabId { Likelihood, RiskLevel, LegalRiskTier, BiasCategory, Sensitivity, MediaType };

std::string_view to_token(FieldType t);
std::string_view to_token(VocabId v);

/// A vocabulary value in transport form: which vocabulary plus its canonical token.
struct VocabToken {
  VocabId vocab;
  std::string token;

  friend bool operator==(const VocabToken&, const VocabToken&) = default;
};

/// Type-erased field value, used by the path-addressed accessors.
using FieldValue = std::variant<std::string,       // text
                                TextList,          // text-list
                                Date,              // date
                                std::int64_t,      // integer
                                FractionMap,       // fraction-map
                                bool,              // boolean
                                VocabToken,        // vocab(V)
                                BiasLikelihoodMap  // structured
                                >;

/// One entry of the canonical field enumeration.
struct FieldSpec {
  std::string path;  // dotted, e.g. "metadata.title"
  SectionId section;
  std::string key;  // leaf name within the section
  FieldType type;
  bool required;
  std::optional<VocabId> vocabulary;

  std::function<std::optional<FieldValue>(const Datasheet&)> get;
  /// Stores a type-checked value; throws std::invalid_argument when the
  /// variant alternative does not match the field type.
  std::function<void(Datasheet&, const FieldValue&)> set;
  std::function<void(Datasheet&)> clear;
};

/// The immutable canonical registry: exactly 55 entries across the 10
/// sections, in serialization order. Identical across calls.
const std::vector<FieldSpec>& field_registry();

/// Registry entry for a dotted path, or nullptr if the path is unknown.
const FieldSpec* find_field(std::string_view path);

/// Populated value at `path`. Throws std::out_of_range for paths outside the
/// registry; absent fields come back as nullopt, never a fabricated default.
std::optional<FieldValue> get_field(const Datasheet& ds, std::string_view path);

/// Writes a value through the registry accessor. Throws std::out_of_range for
/// unknown paths and std::invalid_argument on a type mismatch.
void set_field(Datasheet& ds, std::string_view path, const FieldValue& value);

/// Number of populated fields across the whole datasheet.
std::size_t populated_field_count(const Datasheet& ds);

/// Number of populated fields within one section.
std::size_t populated_field_count(const Datasheet& ds, SectionId section);

/// Registry entries belonging to one section, in registry order.
std::vector<const FieldSpec*> section_fields(SectionId section);

/// How many registry entries a section has.
std::size_t section_field_count(SectionId section);

}  // namespace dsf
