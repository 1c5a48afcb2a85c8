#pragma once

// Tabular serialization of block verdicts as CSV and JSON.

#include <string>
#include <vector>

#include "atkin/conjectures.hpp"

namespace atkin {

/// Column names shared by the CSV header and the JSON object keys.
const std::vector<std::string>& verdict_columns();

/// Header plus one line per verdict, LF line endings. Unchecked fields are
/// written as NA.
std::string to_csv(const std::vector<BlockVerdict>& rows);
/// Array of objects; unchecked fields are null.
std::string to_json(const std::vector<BlockVerdict>& rows);

/// Inverses of the emitters. Throw std::invalid_argument on malformed input.
std::vector<BlockVerdict> parse_csv(const std::string& text);
std::vector<BlockVerdict> parse_json(const std::string& text);

}  // namespace atkin
