#include "vigil/alerts.hpp"

#include <algorithm>
#include <sstream>

#include "vigil/errors.hpp"
#include "vigil/util/hash.hpp"
#include "vigil/util/strings.hpp"

namespace vigil {

std::string normalize_rel_path(std::string_view raw) {
    std::string s(raw);
    std::replace(s.begin(), s.end(), '\\', '/');
    std::vector<std::string> kept;
    for (const auto& seg : split(s, '/')) {
        if (seg.empty() || seg == ".") continue;
        if (seg == "..") {
            if (!kept.empty()) kept.pop_back();
            continue;  // would escape the root; drop it
        }
        kept.push_back(seg);
    }
    std::string out;
    for (size_t i = 0; i < kept.size(); ++i) {
        if (i) out += '/';
        out += kept[i];
    }
    return out;
}

bool point_invariants_hold(const ProgramPoint& p) {
    if (p.file.empty() || p.line < 1) return false;
    if (p.column && *p.column < 1) return false;
    if (p.file.front() == '/') return false;
    for (const auto& seg : split(p.file, '/')) {
        if (seg == "..") return false;
    }
    return true;
}

json ProgramPoint::to_json() const {
    json j;
    j["file"] = file;
    j["line"] = line;
    if (column) j["column"] = *column;
    if (symbol) j["symbol"] = *symbol;
    return j;
}

ProgramPoint ProgramPoint::from_json(const json& j) {
    ProgramPoint p;
    if (!j.contains("file") || !j["file"].is_string()) throw ParseError("program point: missing field 'file'");
    if (!j.contains("line") || !j["line"].is_number_integer()) throw ParseError("program point: missing field 'line'");
    p.file = j["file"].get<std::string>();
    p.line = j["line"].get<int>();
    if (j.contains("column")) p.column = j["column"].get<int>();
    if (j.contains("symbol")) p.symbol = j["symbol"].get<std::string>();
    return p;
}

json TaintPath::to_json() const {
    json j;
    j["cwe"] = cwe;
    j["points"] = json::array();
    for (const auto& p : points) j["points"].push_back(p.to_json());
    return j;
}

TaintPath TaintPath::from_json(const json& j) {
    TaintPath t;
    if (!j.contains("cwe") || !j["cwe"].is_string()) throw ParseError("taint path: missing field 'cwe'");
    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
        throw ParseError("taint path: missing field 'points' (non-empty array required)");
    t.cwe = j["cwe"].get<std::string>();
    for (const auto& pj : j["points"]) t.points.push_back(ProgramPoint::from_json(pj));
    return t;
}

std::string to_string(Severity s) {
    switch (s) {
        case Severity::info: return "info";
        case Severity::low: return "low";
        case Severity::medium: return "medium";
        case Severity::high: return "high";
        case Severity::critical: return "critical";
    }
    return "medium";
}

Severity severity_from_string(std::string_view s) {
    if (s == "info") return Severity::info;
    if (s == "low") return Severity::low;
    if (s == "medium") return Severity::medium;
    if (s == "high") return Severity::high;
    if (s == "critical") return Severity::critical;
    throw ParseError("unknown severity '" + std::string(s) + "'");
}

std::string to_string(AlertOrigin o) {
    return o == AlertOrigin::initial ? "initial" : "evp";
}

AlertOrigin origin_from_string(std::string_view s) {
    if (s == "initial") return AlertOrigin::initial;
    if (s == "evp") return AlertOrigin::evp;
    throw ParseError("unknown origin '" + std::string(s) + "'");
}

json CandidateAlert::to_json() const {
    json j;
    j["id"] = id;
    j["tool"] = tool;
    j["rule_id"] = rule_id;
    j["cwe"] = cwe;
    j["path"] = path.to_json();
    j["message"] = message;
    j["severity"] = to_string(severity);
    j["origin"] = to_string(origin);
    j["guidance_refs"] = guidance_refs;
    return j;
}

CandidateAlert CandidateAlert::from_json(const json& j) {
    CandidateAlert a;
    auto need = [&](const char* field) -> const json& {
        if (!j.contains(field)) throw ParseError(std::string("alert: missing field '") + field + "'");
        return j[field];
    };
    a.id = need("id").get<std::string>();
    a.tool = need("tool").get<std::string>();
    a.rule_id = need("rule_id").get<std::string>();
    a.cwe = normalize_cwe(need("cwe").get<std::string>());
    a.path = TaintPath::from_json(need("path"));
    a.path.cwe = normalize_cwe(a.path.cwe);
    a.message = need("message").get<std::string>();
    a.severity = severity_from_string(need("severity").get<std::string>());
    a.origin = origin_from_string(need("origin").get<std::string>());
    if (!j.contains("guidance_refs") || !j["guidance_refs"].is_array())
        throw ParseError("alert: missing field 'guidance_refs'");
    for (const auto& g : j["guidance_refs"]) a.guidance_refs.push_back(g.get<std::string>());
    std::string why;
    if (!alert_invariants_hold(a, &why)) throw ParseError("alert: " + why);
    return a;
}

std::string alert_content_id(const std::string& tool, const std::string& rule_id,
                             const std::string& cwe, const std::vector<ProgramPoint>& points,
                             std::size_t occurrence) {
    std::ostringstream key;
    key << tool << '\x1f' << rule_id << '\x1f' << cwe << '\x1f';
    for (const auto& p : points) {
        key << p.file << ':' << p.line;
        if (p.column) key << ':' << *p.column;
        key << '\x1e';
    }
    if (occurrence > 0) key << "#dup" << occurrence;
    return stable_digest(key.str());
}

bool alert_invariants_hold(const CandidateAlert& a, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!is_valid_cwe(a.cwe)) return fail("cwe '" + a.cwe + "' does not match CWE-<digits>");
    if (a.path.points.empty()) return fail("empty path");
    for (const auto& p : a.path.points) {
        if (!point_invariants_hold(p)) return fail("invalid program point " + p.file);
    }
    for (size_t i = 1; i < a.path.points.size(); ++i) {
        if (a.path.points[i] == a.path.points[i - 1])
            return fail("consecutive identical points at index " + std::to_string(i));
    }
    if (a.origin == AlertOrigin::initial && !a.guidance_refs.empty())
        return fail("origin=initial alert carries guidance_refs");
    return true;
}

}  // namespace vigil
