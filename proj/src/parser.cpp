#include "dsf/parser.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <utility>

#include "dsf/field_registry.hpp"

namespace dsf {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kVersionKey = "datasheet_format_version";

std::string trimmed(const std::string& text) {
  auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

class DocumentReader {
 public:
  DocumentReader(ParseMode mode, std::vector<Diagnostic>& diagnostics)
      : mode_(mode), diagnostics_(diagnostics) {}

  void read_into(Datasheet& ds, const ordered_json& doc) {
    read_version(doc);
    for (const auto& [key, value] : doc.items()) {
      if (key == kVersionKey) continue;
      std::optional<SectionId> section = section_from_token(key);
      if (!section) {
        report_unknown(key);
        continue;
      }
      if (!value.is_object()) {
        add(key, diag_code::kTypeMismatch, Severity::Error,
            "section container must be an object");
        continue;
      }
      for (const auto& [field_key, field_value] : value.items()) {
        read_field(ds, key + "." + field_key, field_value);
      }
    }
  }

 private:
  void read_version(const ordered_json& doc) {
    auto it = doc.find(kVersionKey);
    if (it == doc.end()) {
      add(std::string(kVersionKey), diag_code::kVersionMissing, Severity::Warning,
          "no format version header; assuming " + std::string(format_version()));
      return;
    }
    if (!it->is_string()) {
      add(std::string(kVersionKey), diag_code::kTypeMismatch, Severity::Error,
          "format version must be a string");
      return;
    }
    if (it->get<std::string>() != format_version()) {
      add(std::string(kVersionKey), diag_code::kUnsupportedVersion, Severity::Error,
          "unsupported format version '" + it->get<std::string>() + "'; expected " +
              std::string(format_version()));
    }
  }

  void read_field(Datasheet& ds, const std::string& path, const ordered_json& value) {
    const FieldSpec* spec = find_field(path);
    if (spec == nullptr) {
      report_unknown(path);
      return;
    }
    if (std::optional<FieldValue> converted = convert(*spec, path, value)) {
      spec->set(ds, *converted);
    }
  }

  std::optional<FieldValue> convert(const FieldSpec& spec, const std::string& path,
                                    const ordered_json& value) {
    switch (spec.type) {
      case FieldType::Text:
        return convert_text(path, value);
      case FieldType::TextList:
        return convert_text_list(path, value);
      case FieldType::Date:
        return convert_date(path, value);
      case FieldType::Integer:
        return convert_integer(path, value);
      case FieldType::FractionMap:
        return convert_fraction_map(path, value);
      case FieldType::Vocab:
        return convert_vocab(spec, path, value);
      case FieldType::Boolean:
        return convert_boolean(path, value);
      case FieldType::Structured:
        return convert_bias_likelihoods(path, value);
      case FieldType::DateRange:
        break;
    }
    return std::nullopt;
  }

  std::optional<FieldValue> convert_text(const std::string& path, const ordered_json& value) {
    if (!value.is_string()) {
      add(path, diag_code::kTypeMismatch, Severity::Error, "expected a string");
      return std::nullopt;
    }
    std::string text = value.get<std::string>();
    // Identifiers are stored whitespace-trimmed.
    if (path == "metadata.identifier") text = trimmed(text);
    return FieldValue(std::move(text));
  }

  std::optional<FieldValue> convert_text_list(const std::string& path, const ordered_json& value) {
    if (!value.is_array()) {
      add(path, diag_code::kTypeMismatch, Severity::Error, "expected an array of strings");
      return std::nullopt;
    }
    TextList list;
    for (const auto& element : value) {
      if (!element.is_string()) {
        add(path, diag_code::kTypeMismatch, Severity::Error,
            "expected every list element to be a string");
        return std::nullopt;
      }
      list.push_back(element.get<std::string>());
    }
    return FieldValue(std::move(list));
  }

  std::optional<FieldValue> convert_date(const std::string& path, const ordered_json& value) {
    if (!value.is_string()) {
      add(path, diag_code::kTypeMismatch, Severity::Error,
          "expected a date string (YYYY, YYYY-MM, or YYYY-MM-DD)");
      return std::nullopt;
    }
    std::optional<Date> date = Date::parse(value.get<std::string>());
    if (!date) {
      add(path, diag_code::kInvariantViolation, Severity::Error,
          "'" + value.get<std::string>() + "' is not a valid YYYY, YYYY-MM, or YYYY-MM-DD date");
      return std::nullopt;
    }
    return FieldValue(*date);
  }

  std::optional<FieldValue> convert_integer(const std::string& path, const ordered_json& value) {
    if (!value.is_number_integer()) {
      add(path, diag_code::kTypeMismatch, Severity::Error, "expected an integer");
      return std::nullopt;
    }
    std::int64_t number = value.get<std::int64_t>();
    if ((path == "demographics.age_min" || path == "demographics.age_max") &&
        (number < 0 || number > 150)) {
      add(path, diag_code::kInvariantViolation, Severity::Error,
          "age bounds must lie within 0..150 years");
      return std::nullopt;
    }
    if (path == "characteristics.record_count" && number < 0) {
      add(path, diag_code::kInvariantViolation, Severity::Error,
          "record count must be non-negative");
      return std::nullopt;
    }
    return FieldValue(number);
  }

  std::optional<FieldValue> convert_fraction_map(const std::string& path,
                                                 const ordered_json& value) {
    if (!value.is_object()) {
      add(path, diag_code::kTypeMismatch, Severity::Error,
          "expected an object of label -> fraction");
      return std::nullopt;
    }
    std::map<std::string, double> shares;
    for (const auto& [label, share] : value.items()) {
      if (!share.is_number()) {
        add(path, diag_code::kTypeMismatch, Severity::Error,
            "expected fraction values to be numbers");
        return std::nullopt;
      }
      shares[label] = share.get<double>();
    }
    std::optional<FractionMap> fractions = FractionMap::make(std::move(shares));
    if (!fractions) {
      add(path, diag_code::kInvariantViolation, Severity::Error,
          "fraction values must lie in [0,1] and sum to at most 1");
      return std::nullopt;
    }
    return FieldValue(std::move(*fractions));
  }

  std::optional<FieldValue> convert_vocab(const FieldSpec& spec, const std::string& path,
                                          const ordered_json& value) {
    if (!value.is_string()) {
      add(path, diag_code::kTypeMismatch, Severity::Error, "expected a vocabulary token string");
      return std::nullopt;
    }
    VocabToken token{*spec.vocabulary, value.get<std::string>()};
    if (!token_is_known(token)) {
      add(path, diag_code::kVocabViolation, Severity::Error,
          "'" + token.token + "' is not a " + std::string(to_token(*spec.vocabulary)) + " token");
      return std::nullopt;
    }
    return FieldValue(std::move(token));
  }

  std::optional<FieldValue> convert_boolean(const std::string& path, const ordered_json& value) {
    if (!value.is_boolean()) {
      add(path, diag_code::kTypeMismatch, Severity::Error, "expected true or false");
      return std::nullopt;
    }
    return FieldValue(value.get<bool>());
  }

  std::optional<FieldValue> convert_bias_likelihoods(const std::string& path,
                                                     const ordered_json& value) {
    if (!value.is_object()) {
      add(path, diag_code::kTypeMismatch, Severity::Error,
          "expected an object of bias-category -> likelihood");
      return std::nullopt;
    }
    BiasLikelihoodMap map;
    for (const auto& [key, entry] : value.items()) {
      std::optional<BiasCategory> category = bias_category_from_token(key);
      if (!category) {
        add(path, diag_code::kVocabViolation, Severity::Error,
            "'" + key + "' is not a bias-category token");
        return std::nullopt;
      }
      if (!entry.is_string()) {
        add(path, diag_code::kTypeMismatch, Severity::Error,
            "expected likelihood tokens as strings");
        return std::nullopt;
      }
      std::optional<Likelihood> likelihood = likelihood_from_token(entry.get<std::string>());
      if (!likelihood) {
        add(path, diag_code::kVocabViolation, Severity::Error,
            "'" + entry.get<std::string>() + "' is not a likelihood token");
        return std::nullopt;
      }
      map[*category] = *likelihood;
    }
    return FieldValue(std::move(map));
  }

  static bool token_is_known(const VocabToken& token) {
    switch (token.vocab) {
      case VocabId::Likelihood: return likelihood_from_token(token.token).has_value();
      case VocabId::RiskLevel: return risk_level_from_token(token.token).has_value();
      case VocabId::LegalRiskTier: return legal_risk_tier_from_token(token.token).has_value();
      case VocabId::BiasCategory: return bias_category_from_token(token.token).has_value();
      case VocabId::Sensitivity: return sensitivity_from_token(token.token).has_value();
      case VocabId::MediaType: return media_type_from_token(token.token).has_value();
    }
    return false;
  }

  void report_unknown(const std::string& path) {
    if (mode_ == ParseMode::Strict) {
      add(path, diag_code::kUnknownField, Severity::Error, "unknown field");
    } else {
      add(path, diag_code::kUnknownField, Severity::Warning, "unknown field dropped");
    }
  }

  // One diagnostic per (path, code).
  void add(std::string path, std::string_view code, Severity severity, std::string message) {
    for (const Diagnostic& existing : diagnostics_) {
      if (existing.path == path && existing.code == code) return;
    }
    diagnostics_.push_back({std::move(path), std::string(code), severity, std::move(message)});
  }

  ParseMode mode_;
  std::vector<Diagnostic>& diagnostics_;
};

}  // namespace

std::string_view format_version() {
  return "1.0";
}

ParseResult parse(std::string_view input, ParseMode mode) {
  ParseResult result;
  ordered_json doc;
  try {
    doc = ordered_json::parse(input);
  } catch (const nlohmann::json::parse_error& error) {
    result.diagnostics.push_back(
        {"$", std::string(diag_code::kMalformedDocument), Severity::Error, error.what()});
    return result;
  }
  if (!doc.is_object()) {
    result.diagnostics.push_back({"$", std::string(diag_code::kMalformedDocument), Severity::Error,
                                  "top level must be an object"});
    return result;
  }

  Datasheet ds;
  DocumentReader reader(mode, result.diagnostics);
  reader.read_into(ds, doc);
  if (!has_errors(result.diagnostics)) {
    result.datasheet = std::move(ds);
  }
  return result;
}

}  // namespace dsf
