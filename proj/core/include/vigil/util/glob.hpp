#pragma once

#include <string>
#include <string_view>

namespace vigil {

// Path glob matcher: `*` matches within one segment, `**` matches any number
// of segments (including zero), `?` a single character. Paths use `/`.
bool glob_match(std::string_view pattern, std::string_view path);

// Throws ConfigError on malformed patterns (currently only `**` glued to
// non-separator characters, e.g. "a**b").
void validate_glob(std::string_view pattern);

}  // namespace vigil
