#pragma once

#include <string>

#include "dsf/datasheet.hpp"

namespace dsf {

/// Canonical serialization: format-version header first, all ten section
/// containers in registry order, populated fields only, vocabulary values as
/// canonical tokens, dates in normalized ISO form. Byte-deterministic for
/// equal inputs; 2-space indented, newline-terminated UTF-8 JSON.
std::string serialize(const Datasheet& ds);

}  // namespace dsf
