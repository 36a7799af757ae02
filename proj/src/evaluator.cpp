#include "aslgram/evaluator.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>
#include <vector>

namespace aslgram {

EvaluationReport match_errors(std::span<const ReportEntry> detected,
                              std::span<const ReportEntry> truth, const VideoMeta& meta,
                              const MatchConfig& config) {
    std::vector<ReportEntry> det(detected.begin(), detected.end());
    std::vector<ReportEntry> gt(truth.begin(), truth.end());
    auto by_time = [](const ReportEntry& a, const ReportEntry& b) {
        return std::tie(a.interval.start, a.interval.end, a.type) <
               std::tie(b.interval.start, b.interval.end, b.type);
    };
    std::sort(det.begin(), det.end(), by_time);
    std::sort(gt.begin(), gt.end(), by_time);

    EvaluationReport report;
    for (const ReportEntry& e : gt) ++report.per_type[static_cast<int>(e.type)].ground_truth;

    // Greedy earliest-first: each detection claims the first unmatched truth
    // span it is compatible with.
    std::vector<bool> taken(gt.size(), false);
    int matched_total = 0;
    for (const ReportEntry& d : det) {
        bool matched = false;
        for (std::size_t i = 0; i < gt.size() && !matched; ++i) {
            if (taken[i]) continue;
            if (config.require_type_match && gt[i].type != d.type) continue;
            if (frames_to_ms(interval_gap(d.interval, gt[i].interval), meta) >
                config.match_tolerance_ms)
                continue;
            taken[i] = true;
            matched = true;
            ++report.per_type[static_cast<int>(gt[i].type)].recognized;
            ++matched_total;
        }
        if (!matched) ++report.false_positive_count;
    }

    for (TypeStats& stats : report.per_type)
        stats.tp_rate = stats.ground_truth > 0
                            ? static_cast<double>(stats.recognized) / stats.ground_truth
                            : 0.0;
    report.total.ground_truth = static_cast<int>(gt.size());
    report.total.recognized = matched_total;
    report.total.tp_rate = report.total.ground_truth > 0
                               ? static_cast<double>(matched_total) / report.total.ground_truth
                               : 0.0;
    return report;
}

EvaluationReport match_errors(std::span<const DetectedError> detected,
                              std::span<const AnnotationSpan> truth_tier, const VideoMeta& meta,
                              const MatchConfig& config) {
    std::vector<ReportEntry> det;
    det.reserve(detected.size());
    for (const DetectedError& e : detected) det.push_back({e.type, e.interval});

    std::vector<ReportEntry> truth;
    truth.reserve(truth_tier.size());
    for (const AnnotationSpan& s : truth_tier)
        if (const auto type = parse_error_type(s.label)) truth.push_back({*type, s.interval});
    return match_errors(det, truth, meta, config);
}

std::string format_evaluation(const EvaluationReport& report) {
    std::ostringstream out;
    char line[128];
    std::snprintf(line, sizeof line, "%-16s %12s %12s %9s\n", "error type", "ground truth",
                  "recognized", "tp rate");
    out << line;
    for (int i = 0; i < kErrorTypeCount; ++i) {
        const TypeStats& s = report.per_type[i];
        std::snprintf(line, sizeof line, "%-16s %12d %12d %8.1f%%\n",
                      std::string(to_string(static_cast<ErrorType>(i))).c_str(), s.ground_truth,
                      s.recognized, s.tp_rate * 100.0);
        out << line;
    }
    std::snprintf(line, sizeof line, "%-16s %12d %12d %8.1f%%\n", "total",
                  report.total.ground_truth, report.total.recognized,
                  report.total.tp_rate * 100.0);
    out << line;
    out << "false positives: " << report.false_positive_count << '\n';
    return out.str();
}

} // namespace aslgram
