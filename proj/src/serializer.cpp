#include "dsf/serializer.hpp"

#include <json.hpp>

#include "dsf/field_registry.hpp"
#include "dsf/parser.hpp"

namespace dsf {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json value_to_json(const FieldSpec& spec, const FieldValue& value) {
  switch (spec.type) {
    case FieldType::Text:
      return std::get<std::string>(value);
    case FieldType::TextList:
      return std::get<TextList>(value);
    case FieldType::Date:
      return std::get<Date>(value).to_string();
    case FieldType::Integer:
      return std::get<std::int64_t>(value);
    case FieldType::FractionMap: {
      ordered_json shares = ordered_json::object();
      for (const auto& [label, fraction] : std::get<FractionMap>(value).shares()) {
        shares[label] = fraction;
      }
      return shares;
    }
    case FieldType::Vocab:
      return std::get<VocabToken>(value).token;
    case FieldType::Boolean:
      return std::get<bool>(value);
    case FieldType::Structured: {
      ordered_json entries = ordered_json::object();
      for (const auto& [category, likelihood] : std::get<BiasLikelihoodMap>(value)) {
        entries[std::string(to_token(category))] = std::string(to_token(likelihood));
      }
      return entries;
    }
    case FieldType::DateRange:
      break;  // no registry field uses this type
  }
  return nullptr;
}

}  // namespace

std::string serialize(const Datasheet& ds) {
  ordered_json doc = ordered_json::object();
  doc["datasheet_format_version"] = std::string(format_version());
  for (SectionId section : kAllSections) {
    ordered_json container = ordered_json::object();
    for (const FieldSpec* spec : section_fields(section)) {
      if (std::optional<FieldValue> value = spec->get(ds)) {
        container[spec->key] = value_to_json(*spec, *value);
      }
    }
    doc[std::string(to_token(section))] = std::move(container);
  }
  return doc.dump(2) + "\n";
}

}  // namespace dsf
