#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dsf/compliance.hpp"
#include "dsf/coverage.hpp"
#include "dsf/field_registry.hpp"
#include "dsf/parser.hpp"
#include "dsf/rdf.hpp"
#include "dsf/report_json.hpp"
#include "dsf/risk.hpp"
#include "dsf/serializer.hpp"
#include "dsf/validator.hpp"

namespace {

using dsf::Datasheet;
using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kFailure = 2;

struct GlobalOptions {
  std::string format = "human";
  bool quiet = false;
  std::string output;
};

// Routes report text to stdout or --output, and drops stdout under --quiet.
class Sink {
 public:
  Sink(const GlobalOptions& options) : options_(options) {}

  bool write(const std::string& text) {
    if (!options_.output.empty()) {
      std::ofstream out(options_.output, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << options_.output << "\n";
        return false;
      }
      out << text;
      return bool(out);
    }
    if (!options_.quiet) std::cout << text;
    return true;
  }

 private:
  const GlobalOptions& options_;
};

std::string envelope(const char* kind, ordered_json body) {
  ordered_json doc{{"report", kind}, {"format_version", dsf::format_version()}};
  for (auto& [key, value] : body.items()) doc[key] = std::move(value);
  return doc.dump(2) + "\n";
}

bool read_file(const std::string& path, std::string& content) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  content = buffer.str();
  return true;
}

// Loads and strictly parses a datasheet; on failure reports to stderr and
// leaves the result empty. Parse warnings are handed back for merging.
std::optional<Datasheet> load(const std::string& path, std::vector<dsf::Diagnostic>& warnings) {
  std::string content;
  if (!read_file(path, content)) {
    std::cerr << "cannot read " << path << "\n";
    return std::nullopt;
  }
  dsf::ParseResult result = dsf::parse(content, dsf::ParseMode::Strict);
  if (!result.datasheet) {
    for (const auto& d : result.diagnostics) {
      std::cerr << path << ": " << to_token(d.severity) << " " << d.path << " [" << d.code
                << "] " << d.message << "\n";
    }
    return std::nullopt;
  }
  warnings = std::move(result.diagnostics);
  return result.datasheet;
}

std::string finding_lines(const std::vector<dsf::Diagnostic>& findings) {
  std::string out;
  for (const auto& f : findings) {
    out += "  " + std::string(to_token(f.severity)) + "  " + f.path + "  [" + f.code + "]  " +
           f.message + "\n";
  }
  return out;
}

int cmd_validate(const GlobalOptions& options, const std::string& file) {
  std::vector<dsf::Diagnostic> findings;
  std::optional<Datasheet> ds = load(file, findings);
  if (!ds) return kFailure;

  dsf::ValidationReport report = dsf::validate(*ds);
  findings.insert(findings.end(), report.findings.begin(), report.findings.end());
  report.findings = std::move(findings);
  report.valid = !dsf::has_errors(report.findings);

  std::string text;
  if (options.format == "machine") {
    ordered_json body = to_json(report);
    body["file"] = file;
    text = envelope("validation", std::move(body));
  } else {
    text = file + ": " +
           (report.valid ? "valid" : std::to_string(report.findings.size()) + " finding(s)") +
           "\n";
    text += finding_lines(report.findings);
    text += "completeness " + std::to_string(report.populated_fields) + "/" +
            std::to_string(report.total_fields) + "\n";
  }
  if (!Sink(options).write(text)) return kFailure;
  return report.valid ? kOk : kFindings;
}

int cmd_score(const GlobalOptions& options, const std::string& file) {
  std::vector<dsf::Diagnostic> warnings;
  std::optional<Datasheet> ds = load(file, warnings);
  if (!ds) return kFailure;

  dsf::ValidationReport report = dsf::validate(*ds);
  std::string text;
  if (options.format == "machine") {
    ordered_json sections = ordered_json::array();
    for (const auto& s : report.sections) {
      sections.push_back({{"section", to_token(s.section)},
                          {"populated", s.populated},
                          {"total", s.total}});
    }
    ordered_json body{{"file", file},
                      {"populated", report.populated_fields},
                      {"total", report.total_fields},
                      {"sections", std::move(sections)}};
    text = envelope("completeness", std::move(body));
  } else {
    text = "completeness " + std::to_string(report.populated_fields) + "/" +
           std::to_string(report.total_fields) + "\n";
    for (const auto& s : report.sections) {
      std::string name(to_token(s.section));
      name.resize(20, ' ');
      text += "  " + name + std::to_string(s.populated) + "/" + std::to_string(s.total) + "\n";
    }
  }
  if (!Sink(options).write(text)) return kFailure;
  return kOk;
}

int cmd_assess(const GlobalOptions& options, const std::string& file,
               const std::string& reference, bool fail_on_high) {
  std::optional<dsf::Date> reference_date = dsf::Date::parse(reference);
  if (!reference_date) {
    std::cerr << "invalid --reference-date '" << reference << "'\n";
    return kFailure;
  }
  std::vector<dsf::Diagnostic> warnings;
  std::optional<Datasheet> ds = load(file, warnings);
  if (!ds) return kFailure;

  dsf::RiskAssessment assessment = dsf::assess(*ds, *reference_date);
  std::string text;
  if (options.format == "machine") {
    ordered_json body = to_json(assessment);
    body["file"] = file;
    body["reference_date"] = reference_date->to_string();
    text = envelope("risk", std::move(body));
  } else {
    text = "generic risk: " + std::string(to_token(assessment.generic_level)) +
           "  legal tier: " + std::string(to_token(assessment.legal_tier)) + "\n";
    for (const auto& item : assessment.items) {
      text += "  " + item.rule_id + "  severity=" + std::string(to_token(item.severity)) +
              " likelihood=" + std::string(to_token(item.likelihood)) + "  " + item.trigger +
              "\n      " + item.message + "\n";
      if (item.mitigation) text += "      mitigation: " + *item.mitigation + "\n";
      if (item.prohibition) text += "      prohibition: " + *item.prohibition + "\n";
    }
  }
  if (!Sink(options).write(text)) return kFailure;
  bool high = assessment.generic_level == dsf::RiskLevel::High ||
              assessment.legal_tier == dsf::LegalRiskTier::High ||
              assessment.legal_tier == dsf::LegalRiskTier::Unacceptable;
  return fail_on_high && high ? kFindings : kOk;
}

int cmd_comply(const GlobalOptions& options, const std::string& file, bool strict) {
  std::vector<dsf::Diagnostic> warnings;
  std::optional<Datasheet> ds = load(file, warnings);
  if (!ds) return kFailure;

  dsf::ComplianceReport report = dsf::check_compliance(*ds);
  std::string text;
  if (options.format == "machine") {
    ordered_json body = to_json(report);
    body["file"] = file;
    text = envelope("compliance", std::move(body));
  } else {
    text = std::string("GDPR applicable: ") + (report.gdpr_applicable ? "yes" : "no") +
           "  AI Act tier: " + std::string(to_token(report.ai_act_tier)) + "\n";
    for (const auto& result : report.obligations) {
      std::string id = result.id;
      id.resize(14, ' ');
      std::string status(to_token(result.status));
      status.resize(18, ' ');
      text += "  " + id + status + result.citation;
      if (!result.missing_fields.empty()) {
        text += "  missing:";
        for (const auto& field : result.missing_fields) text += " " + field;
      }
      text += "\n";
    }
  }
  if (!Sink(options).write(text)) return kFailure;
  bool missing = false;
  for (const auto& result : report.obligations) {
    missing = missing || result.status == dsf::ComplianceStatus::MissingEvidence;
  }
  return strict && missing ? kFindings : kOk;
}

int cmd_compare(const GlobalOptions& options, const std::string& profile_arg) {
  std::vector<dsf::CoverageProfile> selected;
  if (profile_arg == "all") {
    selected = dsf::builtin_profiles();
  } else {
    std::stringstream stream(profile_arg);
    std::string name;
    while (std::getline(stream, name, ',')) {
      const dsf::CoverageProfile* profile = dsf::find_profile(name);
      if (profile == nullptr) {
        std::cerr << "unknown profile '" << name << "'\n";
        return kFailure;
      }
      selected.push_back(*profile);
    }
    if (selected.empty()) {
      std::cerr << "no profiles selected\n";
      return kFailure;
    }
  }

  dsf::CoverageMatrix matrix = dsf::coverage_matrix(selected);
  std::string text;
  if (options.format == "machine") {
    text = envelope("coverage", to_json(matrix));
  } else {
    std::size_t label_width = 0;
    for (const auto& category : matrix.categories) {
      label_width = std::max(label_width, category.size());
    }
    text = std::string(label_width + 2, ' ');
    for (const auto& profile : selected) {
      text += profile.name + "  ";
    }
    text += "\n";
    for (std::size_t row = 0; row < matrix.categories.size(); ++row) {
      std::string label = matrix.categories[row];
      label.resize(label_width + 2, ' ');
      text += label;
      for (std::size_t col = 0; col < selected.size(); ++col) {
        std::string cell(to_symbol(matrix.cells[row][col]));
        cell.resize(cell.size() + selected[col].name.size() + 2 - 1, ' ');
        text += cell;
      }
      text += "\n";
    }
  }
  if (!Sink(options).write(text)) return kFailure;
  return kOk;
}

int cmd_export(const GlobalOptions& options, const std::string& file,
               const std::string& base_iri) {
  std::vector<dsf::Diagnostic> warnings;
  std::optional<Datasheet> ds = load(file, warnings);
  if (!ds) return kFailure;

  std::string text;
  try {
    text = dsf::export_ntriples(*ds, base_iri);
  } catch (const std::invalid_argument& error) {
    std::cerr << error.what() << "\n";
    return kFailure;
  }
  if (!Sink(options).write(text)) return kFailure;
  return kOk;
}

std::string display_value(const dsf::FieldValue& value) {
  if (const auto* text = std::get_if<std::string>(&value)) return *text;
  if (const auto* list = std::get_if<dsf::TextList>(&value)) {
    std::string out;
    for (const auto& entry : *list) {
      if (!out.empty()) out += ", ";
      out += entry;
    }
    return out.empty() ? "(none)" : out;
  }
  if (const auto* date = std::get_if<dsf::Date>(&value)) return date->to_string();
  if (const auto* number = std::get_if<std::int64_t>(&value)) return std::to_string(*number);
  if (const auto* flag = std::get_if<bool>(&value)) return *flag ? "yes" : "no";
  if (const auto* token = std::get_if<dsf::VocabToken>(&value)) return token->token;
  if (const auto* map = std::get_if<dsf::FractionMap>(&value)) {
    std::string out;
    for (const auto& [label, share] : map->shares()) {
      if (!out.empty()) out += ", ";
      out += label + "=" + nlohmann::json(share).dump();
    }
    return out.empty() ? "(none)" : out;
  }
  if (const auto* map = std::get_if<dsf::BiasLikelihoodMap>(&value)) {
    std::string out;
    for (const auto& [category, likelihood] : *map) {
      if (!out.empty()) out += ", ";
      out += std::string(to_token(category)) + "=" + std::string(to_token(likelihood));
    }
    return out.empty() ? "(none)" : out;
  }
  return "";
}

int cmd_render(const GlobalOptions& options, const std::string& file) {
  std::vector<dsf::Diagnostic> warnings;
  std::optional<Datasheet> ds = load(file, warnings);
  if (!ds) return kFailure;

  std::string title = ds->metadata.title.value_or("(untitled)");
  std::string text = "Healthcare AI Datasheet: " + title + "\n";
  text += std::string(text.size() - 1, '=') + "\n";
  for (dsf::SectionId section : dsf::kAllSections) {
    std::string body;
    for (const dsf::FieldSpec* spec : dsf::section_fields(section)) {
      std::optional<dsf::FieldValue> value = spec->get(*ds);
      if (!value) continue;
      std::string key = spec->key;
      key.resize(26, ' ');
      body += "  " + key + display_value(*value) + "\n";
    }
    if (body.empty()) continue;
    text += "\n" + std::string(to_token(section)) + "\n" + body;
  }
  if (!Sink(options).write(text)) return kFailure;
  return kOk;
}

template <typename Enum, std::size_t N>
std::string token_line(const char* label, const std::array<Enum, N>& values) {
  std::string out = std::string("  ") + label + ":";
  for (Enum value : values) out += " " + std::string(to_token(value));
  return out + "\n";
}

int cmd_init(const GlobalOptions& options, const std::string& output) {
  if (output.empty()) {
    std::cerr << "init needs --output\n";
    return kFailure;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << output << "\n";
    return kFailure;
  }
  out << dsf::serialize(dsf::new_template());
  if (!out) return kFailure;

  std::string sidecar_path = output + ".fields.txt";
  std::ofstream sidecar(sidecar_path, std::ios::binary);
  if (!sidecar) {
    std::cerr << "cannot write " << sidecar_path << "\n";
    return kFailure;
  }
  std::string text = "fields\n";
  for (const dsf::FieldSpec& spec : dsf::field_registry()) {
    std::string path = spec.path;
    path.resize(42, ' ');
    std::string type(to_token(spec.type));
    if (spec.vocabulary) type += "(" + std::string(to_token(*spec.vocabulary)) + ")";
    if (spec.required) {
      type.resize(24, ' ');
      type += "required";
    }
    text += "  " + path + type + "\n";
  }
  text += "vocabularies\n";
  text += token_line("likelihood", dsf::kAllLikelihoods);
  text += token_line("risk-level", dsf::kAllRiskLevels);
  text += token_line("legal-risk-tier", dsf::kAllLegalRiskTiers);
  text += token_line("bias-category", dsf::kAllBiasCategories);
  text += token_line("sensitivity", dsf::kAllSensitivities);
  text += token_line("media-type", dsf::kAllMediaTypes);
  sidecar << text;
  if (!sidecar) return kFailure;

  if (!options.quiet) std::cout << "wrote " << output << " and " << sidecar_path << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions options;
  CLI::App app{"datasheet toolchain for healthcare AI datasets"};
  app.require_subcommand(1);
  app.add_option("--format", options.format, "output format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.add_flag("--quiet", options.quiet, "suppress stdout");
  app.add_option("--output", options.output, "write the report to a file");

  std::string file;
  std::string reference_date;
  std::string base_iri;
  std::string profiles = "all";
  bool fail_on_high = false;
  bool strict = false;

  app.fallthrough();

  CLI::App* validate = app.add_subcommand("validate", "check consistency rules");
  validate->add_option("file", file, "datasheet JSON")->required();

  CLI::App* score = app.add_subcommand("score", "report completeness");
  score->add_option("file", file, "datasheet JSON")->required();

  CLI::App* assess = app.add_subcommand("assess", "run the risk rules");
  assess->add_option("file", file, "datasheet JSON")->required();
  assess->add_option("--reference-date", reference_date, "anchor for staleness")->required();
  assess->add_flag("--fail-on-high", fail_on_high, "exit 1 on high risk");

  CLI::App* comply = app.add_subcommand("comply", "map against legal obligations");
  comply->add_option("file", file, "datasheet JSON")->required();
  comply->add_flag("--strict", strict, "exit 1 when evidence is missing");

  CLI::App* compare = app.add_subcommand("compare", "coverage across approaches");
  compare->add_option("--profiles", profiles, "all or comma-separated names")
      ->capture_default_str();

  CLI::App* exporter = app.add_subcommand("export", "emit N-Triples");
  exporter->add_option("file", file, "datasheet JSON")->required();
  exporter->add_option("--base-iri", base_iri, "IRI naming the dataset")->required();

  CLI::App* render = app.add_subcommand("render", "print a readable document");
  render->add_option("file", file, "datasheet JSON")->required();

  app.add_subcommand("init", "write an empty datasheet and its field list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kFailure;
  }

  try {
    if (validate->parsed()) return cmd_validate(options, file);
    if (score->parsed()) return cmd_score(options, file);
    if (assess->parsed()) return cmd_assess(options, file, reference_date, fail_on_high);
    if (comply->parsed()) return cmd_comply(options, file, strict);
    if (compare->parsed()) return cmd_compare(options, profiles);
    if (exporter->parsed()) return cmd_export(options, file, base_iri);
    if (render->parsed()) return cmd_render(options, file);
    return cmd_init(options, options.output);
  } catch (const std::exception& error) {
    std::cerr << error.what() << "\n";
    return kFailure;
  }
}
