#pragma once

#include "aslgram/grammar.hpp"
#include "aslgram/io.hpp"
#include "aslgram/timeline.hpp"

#include <array>
#include <span>
#include <string>

namespace aslgram {

struct MatchConfig {
    double match_tolerance_ms = 1000.0; // max gap between a detection and the truth span it claims
    bool require_type_match = true;
};

struct TypeStats {
    int ground_truth = 0;
    int recognized = 0; // true-positive matches, never exceeds ground_truth
    double tp_rate = 0.0;
};

struct EvaluationReport {
    std::array<TypeStats, kErrorTypeCount> per_type{};
    TypeStats total{};
    int false_positive_count = 0;
};

// Greedy one-to-one matching in temporal order: each detection claims the
// first unmatched truth span of its type within tolerance.
EvaluationReport match_errors(std::span<const ReportEntry> detected,
                              std::span<const ReportEntry> truth, const VideoMeta& meta,
                              const MatchConfig& config = {});

// Overloads for engine output and a raw errors tier.
EvaluationReport match_errors(std::span<const DetectedError> detected,
                              std::span<const AnnotationSpan> truth_tier, const VideoMeta& meta,
                              const MatchConfig& config = {});

// Fixed-width text table: per-type rows plus a total row and the false
// positive count.
std::string format_evaluation(const EvaluationReport& report);

} // namespace aslgram
