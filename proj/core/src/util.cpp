#include "vigil/util/hash.hpp"
#include "vigil/util/strings.hpp"
#include "vigil/util/glob.hpp"
#include "vigil/util/rational.hpp"
#include "vigil/util/jsonl.hpp"
#include "vigil/util/thread_pool.hpp"
#include "vigil/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace vigil {

std::string to_hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return std::string(buf);
}

std::string stable_digest(std::string_view data) { return to_hex(fnv1a(data)); }

std::string trim(std::string_view input) {
    size_t start = input.find_first_not_of(" \t\r\n");
    if (start == std::string_view::npos) return "";
    size_t end = input.find_last_not_of(" \t\r\n");
    return std::string(input.substr(start, end - start + 1));
}

std::string to_lower(std::string_view input) {
    std::string out(input);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string> split(std::string_view input, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= input.size()) {
        size_t next = input.find(sep, pos);
        if (next == std::string_view::npos) {
            out.emplace_back(input.substr(pos));
            break;
        }
        out.emplace_back(input.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::vector<std::string> split_lines(std::string_view input) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= input.size()) {
        size_t next = input.find('\n', pos);
        if (next == std::string_view::npos) {
            out.emplace_back(input.substr(pos));
            break;
        }
        std::string line(input.substr(pos, next - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(std::move(line));
        pos = next + 1;
    }
    // A trailing newline does not start a new line.
    if (!out.empty() && out.back().empty() && !input.empty() && input.back() == '\n') out.pop_back();
    return out;
}

std::vector<std::string> tokenize_keywords(std::string_view input) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : input) {
        if (std::isalnum(c) || c == '_') {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            if (cur.size() >= 2) out.push_back(cur);
            cur.clear();
        }
    }
    if (cur.size() >= 2) out.push_back(cur);
    return out;
}

std::string normalize_ws(std::string_view input) {
    std::string out;
    bool in_ws = true;  // leading whitespace dropped
    for (unsigned char c : input) {
        if (std::isspace(c)) {
            if (!in_ws) out.push_back(' ');
            in_ws = true;
        } else {
            out.push_back(static_cast<char>(c));
            in_ws = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string normalize_cwe(std::string_view cwe) {
    std::string s(cwe);
    if (s.size() < 4) return s;
    std::string prefix = to_lower(s.substr(0, 4));
    if (prefix != "cwe-") return s;
    std::string digits = s.substr(4);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); }))
        return s;
    // Strip leading zeros, then pad back to exactly three digits.
    size_t nz = digits.find_first_not_of('0');
    digits = (nz == std::string::npos) ? "0" : digits.substr(nz);
    while (digits.size() < 3) digits.insert(digits.begin(), '0');
    return "CWE-" + digits;
}

bool is_valid_cwe(std::string_view cwe) {
    if (cwe.size() < 5 || cwe.substr(0, 4) != "CWE-") return false;
    return std::all_of(cwe.begin() + 4, cwe.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

// ---------------------------------------------------------------------------
// glob

namespace {

bool segment_match(std::string_view pat, std::string_view seg) {
    // Classic backtracking matcher over one path segment; `*` and `?` only.
    size_t p = 0, s = 0, star = std::string_view::npos, mark = 0;
    while (s < seg.size()) {
        if (p < pat.size() && (pat[p] == '?' || pat[p] == seg[s])) {
            ++p;
            ++s;
        } else if (p < pat.size() && pat[p] == '*') {
            star = p++;
            mark = s;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            s = ++mark;
        } else {
            return false;
        }
    }
    while (p < pat.size() && pat[p] == '*') ++p;
    return p == pat.size();
}

bool match_segments(const std::vector<std::string>& pat, size_t pi,
                    const std::vector<std::string>& segs, size_t si) {
    if (pi == pat.size()) return si == segs.size();
    if (pat[pi] == "**") {
        for (size_t skip = si; skip <= segs.size(); ++skip) {
            if (match_segments(pat, pi + 1, segs, skip)) return true;
        }
        return false;
    }
    if (si == segs.size()) return false;
    if (!segment_match(pat[pi], segs[si])) return false;
    return match_segments(pat, pi + 1, segs, si + 1);
}

}  // namespace

void validate_glob(std::string_view pattern) {
    for (const auto& seg : split(pattern, '/')) {
        size_t pos = seg.find("**");
        if (pos != std::string::npos && seg != "**") {
            throw ConfigError("invalid glob pattern '" + std::string(pattern) +
                              "': '**' must be a whole path segment");
        }
        (void)pos;
    }
}

bool glob_match(std::string_view pattern, std::string_view path) {
    return match_segments(split(pattern, '/'), 0, split(path, '/'), 0);
}

// ---------------------------------------------------------------------------
// rational

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::invalid_argument("rational division by zero");
    return Rational(num * o.den, den * o.num);
}
bool Rational::operator<(const Rational& o) const { return num * o.den < o.num * den; }

std::string Rational::format(int decimals) const {
    std::int64_t scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    // Round half away from zero on the scaled value.
    std::int64_t scaled_num = num * scale;
    std::int64_t q = scaled_num / den;
    std::int64_t r = scaled_num % den;
    if (r < 0) r = -r;
    if (2 * r >= den) q += (scaled_num < 0) ? -1 : 1;
    bool neg = q < 0;
    if (neg) q = -q;
    std::int64_t whole = q / scale;
    std::int64_t frac = q % scale;
    std::ostringstream os;
    if (neg) os << '-';
    os << whole;
    if (decimals > 0) {
        std::string f = std::to_string(frac);
        while (static_cast<int>(f.size()) < decimals) f.insert(f.begin(), '0');
        os << '.' << f;
    }
    return os.str();
}

std::string Rational::format_percent(int decimals) const {
    return (*this * Rational(100)).format(decimals);
}

// ---------------------------------------------------------------------------
// jsonl + file io

std::vector<json> read_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<json> docs;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (!t.empty()) {
            try {
                docs.push_back(json::parse(t));
            } catch (const json::parse_error& e) {
                throw ParseError(path.string() + ": " + e.what(), offset);
            }
        }
        offset += line.size() + 1;
    }
    return docs;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<json>& docs) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& d : docs) out << d.dump() << '\n';
}

void append_jsonl(const std::filesystem::path& path, const json& doc) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw IoError("cannot append to " + path.string());
    out << doc.dump() << '\n';
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

// ---------------------------------------------------------------------------
// thread pool

void run_parallel(std::size_t workers, std::vector<std::function<void()>> jobs) {
    if (jobs.empty()) return;
    if (workers <= 1 || jobs.size() == 1) {
        for (auto& j : jobs) j();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::size_t n = std::min(workers, jobs.size());
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        threads.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                jobs[i]();
            }
        });
    }
    for (auto& th : threads) th.join();
}

}  // namespace vigil
