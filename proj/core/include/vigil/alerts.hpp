#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vigil {

using json = nlohmann::json;

// A location in the audited project. `file` is project-root-relative with
// `/` separators and no `..` segments; `line` is 1-based.
struct ProgramPoint {
    std::string file;
    int line = 1;
    std::optional<int> column;
    std::optional<std::string> symbol;

    bool same_file_line(const ProgramPoint& o) const {
        return file == o.file && line == o.line;
    }
    bool operator==(const ProgramPoint& o) const {
        return file == o.file && line == o.line && column == o.column && symbol == o.symbol;
    }

    json to_json() const;
    static ProgramPoint from_json(const json& j);
};

// Normalizes separators, strips `.` segments, resolves `..` against earlier
// segments and drops any that would escape the root.
std::string normalize_rel_path(std::string_view raw);

bool point_invariants_hold(const ProgramPoint& p);

// A detected source-to-sink path. points[0] is the source, points.back() the
// sink; single-point paths are legal (alert with no code flow).
struct TaintPath {
    std::vector<ProgramPoint> points;
    std::string cwe;

    const ProgramPoint& source() const { return points.front(); }
    const ProgramPoint& sink() const { return points.back(); }

    json to_json() const;
    static TaintPath from_json(const json& j);
};

enum class Severity { info, low, medium, high, critical };

std::string to_string(Severity s);
Severity severity_from_string(std::string_view s);

enum class AlertOrigin { initial, evp };

std::string to_string(AlertOrigin o);
AlertOrigin origin_from_string(std::string_view s);

// A normalized finding from any scanner (SARIF tools or the scan agent);
// the unit that flows through triage and verification.
struct CandidateAlert {
    std::string id;
    std::string tool;
    std::string rule_id;
    std::string cwe;
    TaintPath path;
    std::string message;
    Severity severity = Severity::medium;
    AlertOrigin origin = AlertOrigin::initial;
    std::vector<std::string> guidance_refs;

    json to_json() const;
    static CandidateAlert from_json(const json& j);
};

// Content hash over (tool, rule_id, cwe, point list); `occurrence`
// disambiguates byte-identical results emitted more than once in one
// document so the parse stays deterministic while ids stay unique.
std::string alert_content_id(const std::string& tool, const std::string& rule_id,
                             const std::string& cwe, const std::vector<ProgramPoint>& points,
                             std::size_t occurrence = 0);

bool alert_invariants_hold(const CandidateAlert& a, std::string* why = nullptr);

}  // namespace vigil
