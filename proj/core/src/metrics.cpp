#include "vigil/metrics.hpp"

#include <algorithm>
#include <sstream>

#include "vigil/errors.hpp"
#include "vigil/util/strings.hpp"

namespace vigil::metrics {

std::string to_string(MatchMode m) { return m == MatchMode::line ? "line" : "method"; }

MatchMode match_mode_from_string(std::string_view s) {
    if (s == "line") return MatchMode::line;
    if (s == "method") return MatchMode::method;
    throw ConfigError("unknown match_mode '" + std::string(s) + "'");
}

GroundTruth ground_truth_from_json(const json& j) {
    GroundTruth t;
    if (!j.contains("project_id")) throw ParseError("ground truth: missing field 'project_id'");
    if (!j.contains("vul_points") || !j["vul_points"].is_array() || j["vul_points"].empty())
        throw ParseError("ground truth: 'vul_points' must be a non-empty array");
    t.project_id = j["project_id"].get<std::string>();
    if (j.contains("match_mode")) t.match_mode = match_mode_from_string(j["match_mode"].get<std::string>());
    for (const auto& pj : j["vul_points"]) {
        auto p = ProgramPoint::from_json(pj);
        if (!point_invariants_hold(p)) throw ParseError("ground truth: invalid point " + p.file);
        t.vul_points.push_back(std::move(p));
    }
    return t;
}

json ground_truth_to_json(const GroundTruth& t) {
    json j;
    j["project_id"] = t.project_id;
    j["match_mode"] = to_string(t.match_mode);
    j["vul_points"] = json::array();
    for (const auto& p : t.vul_points) j["vul_points"].push_back(p.to_json());
    return j;
}

bool point_match(const TaintPath& path, const GroundTruth& truth) {
    for (const auto& pp : path.points) {
        for (const auto& vp : truth.vul_points) {
            if (truth.match_mode == MatchMode::line) {
                if (pp.file == vp.file && pp.line == vp.line) return true;
            } else {
                if (pp.symbol && vp.symbol && pp.file == vp.file && *pp.symbol == *vp.symbol)
                    return true;
            }
        }
    }
    return false;
}

ProjectResult project_result(const std::string& project_id,
                             const std::vector<TaintPath>& paths, const GroundTruth& truth) {
    ProjectResult r;
    r.project_id = project_id;
    r.paths = paths;
    r.matched.reserve(paths.size());
    for (const auto& p : paths) {
        bool hit = point_match(p, truth);
        r.matched.push_back(hit);
        if (hit) ++r.vul_path;
    }
    r.rec = r.vul_path > 0 ? 1 : 0;
    r.prec = paths.empty() ? Rational::zero()
                           : Rational(r.vul_path, static_cast<std::int64_t>(paths.size()));
    Rational rec_r(r.rec);
    Rational denom = r.prec + rec_r;
    r.f1 = (denom.num == 0) ? Rational::zero()
                            : Rational(2) * r.prec * rec_r / denom;
    return r;
}

DatasetMetrics dataset_metrics(const std::vector<ProjectResult>& results) {
    if (results.empty()) throw EmptyDataset("dataset_metrics over zero projects");
    DatasetMetrics m;
    m.n_projects = static_cast<int>(results.size());
    Rational fdr_sum = Rational::zero();
    Rational f1_sum = Rational::zero();
    for (const auto& r : results) {
        m.detected += r.rec;
        f1_sum = f1_sum + r.f1;
        if (!r.paths.empty()) {
            ++m.n_with_findings;
            fdr_sum = fdr_sum + (Rational(1) - r.prec);
        }
    }
    m.detection_rate = Rational(m.detected, m.n_projects);
    m.avg_f1 = f1_sum / Rational(m.n_projects);
    if (m.n_with_findings > 0) m.avg_fdr = fdr_sum / Rational(m.n_with_findings);
    return m;
}

std::map<std::string, int> detected_by_cwe(const std::vector<ProjectResult>& results) {
    std::map<std::string, int> tally;
    for (const auto& r : results) {
        if (r.rec == 0) continue;
        for (size_t i = 0; i < r.paths.size(); ++i) {
            if (r.matched[i]) {
                ++tally[normalize_cwe(r.paths[i].cwe)];
                break;
            }
        }
    }
    return tally;
}

BeyondBenchmarkResult beyond_benchmark_accounting(const std::vector<ProjectFindings>& projects,
                                                  const std::set<std::string>& extra_confirmed) {
    BeyondBenchmarkResult out;
    std::set<std::string> seen_extras;
    std::vector<std::pair<std::string, std::string>> extras;  // (id, cwe)

    for (const auto& pf : projects) {
        std::vector<TaintPath> paths;
        paths.reserve(pf.findings.size());
        for (const auto& f : pf.findings) paths.push_back(f.path);
        ProjectResult r = project_result(pf.project_id, paths, pf.truth);
        for (size_t i = 0; i < pf.findings.size(); ++i) {
            const auto& id = pf.findings[i].alert_id;
            if (extra_confirmed.count(id)) {
                if (r.matched[i])
                    throw ConsistencyError("extra-confirmed finding " + id +
                                           " matches ground truth of " + pf.project_id);
                seen_extras.insert(id);
                extras.emplace_back(id, normalize_cwe(pf.findings[i].path.cwe));
            }
        }
        out.per_project.push_back(std::move(r));
    }

    for (const auto& id : extra_confirmed) {
        if (!seen_extras.count(id))
            throw ConsistencyError("extra-confirmed id " + id + " is not a TP finding id");
    }

    out.adjusted = dataset_metrics(out.per_project);
    for (const auto& [id, cwe] : extras) ++out.extras_by_cwe[cwe];
    out.extras_total = static_cast<int>(extras.size());
    return out;
}

std::string format_rate_percent(const Rational& r) { return r.format_percent(2); }
std::string format_f1(const Rational& r) { return r.format(3); }

std::string format_avg_fdr(const std::optional<Rational>& r) {
    return r ? r->format_percent(2) : "n/a";
}

std::string dataset_csv(const DatasetMetrics& m) {
    std::ostringstream os;
    os << "Detected,Detection Rate,Avg FDR,Avg F1\n";
    os << m.detected << ',' << format_rate_percent(m.detection_rate) << ','
       << format_avg_fdr(m.avg_fdr) << ',' << format_f1(m.avg_f1) << '\n';
    return os.str();
}

std::string projects_csv(const std::vector<ProjectResult>& results) {
    std::ostringstream os;
    os << "Project,Paths,VulPath,Rec,Prec,F1\n";
    for (const auto& r : results) {
        os << r.project_id << ',' << r.paths.size() << ',' << r.vul_path << ',' << r.rec << ','
           << r.prec.format(4) << ',' << format_f1(r.f1) << '\n';
    }
    return os.str();
}

std::string dataset_markdown(const std::string& label, const DatasetMetrics& m) {
    std::ostringstream os;
    os << "| Method | #Detected (/" << m.n_projects << ") | Detection Rate (%) | Avg FDR (%) | Avg F1 |\n";
    os << "|---|---|---|---|---|\n";
    os << "| " << label << " | " << m.detected << " | " << format_rate_percent(m.detection_rate)
       << " | " << format_avg_fdr(m.avg_fdr) << " | " << format_f1(m.avg_f1) << " |\n";
    return os.str();
}

}  // namespace vigil::metrics
