#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dsf {

enum class Severity { Warning, Error };

inline std::string_view to_token(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

/// Path-addressed finding emitted by the parser or the validator.
/// `path` is a registry path ("metadata.title"), a document location ("$"),
/// or an absence marker ("absent:metadata.title").
struct Diagnostic {
  std::string path;
  std::string code;
  Severity severity = Severity::Error;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const Diagnostic& d : diagnostics) {
    if (d.severity == Severity::Error) return true;
  }
  return false;
}

// Diagnostic codes shared between the parser and its callers.
namespace diag_code {
inline constexpr std::string_view kMalformedDocument = "malformed-document";
inline constexpr std::string_view kUnknownField = "unknown-field";
inline constexpr std::string_view kTypeMismatch = "type-mismatch";
inline constexpr std::string_view kVocabViolation = "vocab-violation";
inline constexpr std::string_view kInvariantViolation = "invariant-violation";
inline constexpr std::string_view kVersionMissing = "version-missing";
inline constexpr std::string_view kUnsupportedVersion = "unsupported-version";
inline constexpr std::string_view kMissingRequired = "missing-required";
}  // namespace diag_code

}  // namespace dsf
