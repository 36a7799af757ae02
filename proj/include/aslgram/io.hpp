#pragma once

#include "aslgram/grammar.hpp"
#include "aslgram/timeline.hpp"
#include "aslgram/windows.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aslgram {

// One labeled span on an annotation tier. Labels are kept as their canonical
// spellings; known tiers are validated against the module taxonomies.
struct AnnotationSpan {
    std::string label;
    Interval interval{};

    bool operator==(const AnnotationSpan&) const = default;
};

struct AnnotationTier {
    std::string name;
    std::vector<AnnotationSpan> spans; // sorted by start, non-overlapping

    bool operator==(const AnnotationTier&) const = default;
};

// ELAN-style parallel tiers. Known tier names: clause, wanted_words,
// facial_expressions, fingerspelling, lexical_pointing, head_movements,
// errors. Unknown tiers are preserved but ignored by the engine.
struct AnnotationTimeline {
    VideoMeta meta{};
    std::vector<AnnotationTier> tiers;

    const AnnotationTier* find_tier(std::string_view name) const;
    std::vector<AnnotationSpan>& tier_spans(std::string_view name); // creates the tier if missing

    bool operator==(const AnnotationTimeline&) const = default;
};

// Window predictions for all three modalities plus the geometry they were
// produced with.
struct PredictionFile {
    VideoMeta meta{};
    std::array<WindowSpec, kModalityCount> specs{kDefaultHandsWindow, kDefaultFaceWindow,
                                                 kDefaultHeadWindow};
    std::vector<WindowPrediction> records;

    bool operator==(const PredictionFile&) const = default;
};

// Text formats (whitespace separated, '#' comments):
//   annotations:  video <frame_count> <fps>
//                 <tier> <label> <start_frame> <end_frame>
//   predictions:  video <frame_count> <fps>
//                 window <modality> <size> <stride>
//                 <modality> <window_start> <label> <confidence>
AnnotationTimeline parse_annotations(std::string_view text);
std::string serialize_annotations(const AnnotationTimeline& timeline);

PredictionFile load_predictions(std::string_view text);
std::string serialize_predictions(const PredictionFile& file);

// Canonical JSON report: one entry per error plus per-type summary counts.
// Identical inputs serialize byte for byte.
std::string write_report(std::span<const DetectedError> errors, const VideoMeta& meta);

// Detections read back from a report document (type and frame interval).
struct ReportEntry {
    ErrorType type = ErrorType::WhqLexical;
    Interval interval{};

    bool operator==(const ReportEntry&) const = default;
};
std::vector<ReportEntry> parse_report(std::string_view json_text);

// Plain-text student feedback: one paragraph per error with a mm:ss.t
// timestamp and the expected nonmanual signal.
std::string write_feedback_text(std::span<const DetectedError> errors, const VideoMeta& meta);

// Known tier names, in canonical order.
std::span<const std::string_view> known_tier_names();

} // namespace aslgram
