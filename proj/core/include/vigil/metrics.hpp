#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vigil/alerts.hpp"
#include "vigil/util/rational.hpp"

namespace vigil::metrics {

enum class MatchMode { line, method };

std::string to_string(MatchMode m);
MatchMode match_mode_from_string(std::string_view s);

// Ground truth for one project: the crucial program points a detected path
// must intersect to count as a hit.
struct GroundTruth {
    std::string project_id;
    std::vector<ProgramPoint> vul_points;
    MatchMode match_mode = MatchMode::line;
};

GroundTruth ground_truth_from_json(const json& j);
json ground_truth_to_json(const GroundTruth& t);

struct ProjectResult {
    std::string project_id;
    std::vector<TaintPath> paths;
    std::vector<bool> matched;  // parallel to paths
    int vul_path = 0;
    int rec = 0;  // 1 iff vul_path > 0
    Rational prec;
    Rational f1;
};

struct DatasetMetrics {
    int detected = 0;
    Rational detection_rate;
    std::optional<Rational> avg_fdr;  // empty when no project produced findings
    Rational avg_f1;
    int n_projects = 0;
    int n_with_findings = 0;
};

// True iff some path point coincides with some ground-truth point: in line
// mode on (file, line), in method mode on (file, symbol); pairs with a
// missing symbol contribute false in method mode.
bool point_match(const TaintPath& path, const GroundTruth& truth);

ProjectResult project_result(const std::string& project_id,
                             const std::vector<TaintPath>& paths, const GroundTruth& truth);

// Throws EmptyDataset on an empty result list.
DatasetMetrics dataset_metrics(const std::vector<ProjectResult>& results);

// Count of detected projects keyed by the CWE of the first truth-matching
// path, for the per-category breakdown in reports.
std::map<std::string, int> detected_by_cwe(const std::vector<ProjectResult>& results);

// A TP-labelled finding as fed into benchmark scoring.
struct TpFinding {
    std::string alert_id;
    TaintPath path;
};

struct ProjectFindings {
    std::string project_id;
    std::vector<TpFinding> findings;
    GroundTruth truth;
};

struct BeyondBenchmarkResult {
    DatasetMetrics adjusted;
    std::vector<ProjectResult> per_project;
    std::map<std::string, int> extras_by_cwe;
    int extras_total = 0;
};

// Benchmark accounting with confirmed out-of-benchmark findings: the extras
// stay in Paths^P as non-matching paths (penalizing precision) and are
// reported separately by CWE. An extra id that matches ground truth, or that
// is not a finding id at all, is a ConsistencyError.
BeyondBenchmarkResult beyond_benchmark_accounting(const std::vector<ProjectFindings>& projects,
                                                  const std::set<std::string>& extra_confirmed);

// Presentation helpers: percentages at 2 decimals, F1 at 3, AvgFDR "n/a"
// when undefined.
std::string format_rate_percent(const Rational& r);
std::string format_f1(const Rational& r);
std::string format_avg_fdr(const std::optional<Rational>& r);

std::string dataset_csv(const DatasetMetrics& m);
std::string projects_csv(const std::vector<ProjectResult>& results);
std::string dataset_markdown(const std::string& label, const DatasetMetrics& m);

}  // namespace vigil::metrics
