#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vigil {

using json = nlohmann::json;

// Reads a JSON Lines file; blank lines are skipped. Throws IoError if the
// file cannot be opened and ParseError (with byte offset) on bad JSON.
std::vector<json> read_jsonl(const std::filesystem::path& path);

// Writes one compact JSON document per line, replacing the file.
void write_jsonl(const std::filesystem::path& path, const std::vector<json>& docs);

void append_jsonl(const std::filesystem::path& path, const json& doc);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace vigil
