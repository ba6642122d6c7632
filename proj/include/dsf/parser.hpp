#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsf/datasheet.hpp"
#include "dsf/diagnostics.hpp"

namespace dsf {

/// Unknown-field handling: strict treats unknown keys as errors, lenient
/// downgrades them to warnings and drops the field.
enum class ParseMode { Strict, Lenient };

struct ParseResult {
  std::optional<Datasheet> datasheet;  // present iff no error-severity diagnostics
  std::vector<Diagnostic> diagnostics;
};

/// Interchange format version token embedded in every serialized document.
std::string_view format_version();

/// Parses a UTF-8 interchange document. Returns a Datasheet exactly when no
/// error-severity diagnostic was produced; diagnostics carry field paths.
///
/// Parse-level errors cover representation problems: document syntax, unknown
/// fields (strict mode), JSON type mismatches, vocabulary violations, and
/// values the typed model cannot hold (invalid dates, fraction maps out of
/// bounds, negative counts, ages outside 0..150). Cross-field consistency is
/// the validator's job, so that one run can report every violation at once.
ParseResult parse(std::string_view input, ParseMode mode);

}  // namespace dsf
