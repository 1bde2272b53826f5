#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vigil {

std::string trim(std::string_view input);
std::string to_lower(std::string_view input);

std::vector<std::string> split(std::string_view input, char sep);
std::vector<std::string> split_lines(std::string_view input);

// Lowercase alnum/underscore runs of length >= 2; the unit used by memory
// keyword scoring and retrieval queries.
std::vector<std::string> tokenize_keywords(std::string_view input);

// Collapses every whitespace run to a single space and trims the ends.
std::string normalize_ws(std::string_view input);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

// "CWE-22" -> "CWE-022"; numeric part zero-padded to 3 digits, longer ids and
// non-matching strings returned unchanged apart from uppercasing the prefix.
std::string normalize_cwe(std::string_view cwe);

bool is_valid_cwe(std::string_view cwe);

}  // namespace vigil
