#pragma once

#include "aslgram/segmenter.hpp"
#include "aslgram/timeline.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aslgram {

// Proximity and confidence thresholds of the rule engine.
struct RuleThresholds {
    double lexical_ms = 200.0;          // max distance between a sign and its nonmanual evidence
    double timing_ms = 1000.0;          // max distance between a nonmanual onset/offset and a clause boundary
    double evidence_confidence = 0.8;   // trigger segments at or below this never raise errors
    bool implicit_boundaries = true;    // treat frame 0 and frame n-1 as clause boundaries
    bool require_face_and_head = false; // strict mode: lexical evidence must come from both channels
};

enum class ErrorType : std::uint8_t {
    WhqLexical = 0,
    YnqLexical,
    NegLexical,
    CondLexical,
    YnqBeginning,
    YnqEnd,
    CondBeginning,
    TopicBeginning,
};
inline constexpr int kErrorTypeCount = 8;

std::string_view to_string(ErrorType type);
std::optional<ErrorType> parse_error_type(std::string_view text);

// One lexical rule: a manual trigger and the nonmanual labels that count as
// evidence for it.
struct EvidenceRule {
    GestureLabel trigger;
    ErrorType error_type;
    std::vector<FaceLabel> acceptable_face;
    std::vector<HeadLabel> acceptable_head;
};

// The four lexical rules (WHQ, YNQ, Negative, Conditional words).
std::span<const EvidenceRule> default_evidence_rules();

struct DetectedError {
    ErrorType type = ErrorType::WhqLexical;
    Interval interval{};       // interval of the triggering segment
    Segment trigger_segment{};
    std::optional<Segment> nearest_counterevidence; // closest acceptable evidence, when any exists
    std::string message;

    bool operator==(const DetectedError&) const = default;
};

// Readings of the merged Conditional/Topic/RHQ face class.
enum class CtrReading { Conditional, Topic, Rhq };

// Clause anchor intervals: every ClauseBoundary hand segment, plus the
// degenerate intervals [0,0] and [n-1,n-1] when implicit boundaries are on.
std::vector<Interval> clause_boundary_points(std::span<const Segment> hand_segments,
                                             const VideoMeta& meta, const RuleThresholds& t);

// Lexical check for one rule: every confident trigger segment must have
// acceptable face or head evidence within lexical_ms.
std::vector<DetectedError> check_lexical(const EvidenceRule& rule, std::span<const Segment> hands,
                                         std::span<const Segment> face,
                                         std::span<const Segment> head, const VideoMeta& meta,
                                         const RuleThresholds& t);

// Split the merged face class using nearby manual signs: Conditional when a
// Conditional sign is within lexical_ms, Rhq when a WHQ/YNQ sign is contained
// in the span, Topic otherwise.
CtrReading disambiguate_ctr(const Segment& face_segment, std::span<const Segment> hands,
                            const VideoMeta& meta, const RuleThresholds& t);

// Timing checks: YNQ onsets/offsets, Conditional onsets, and Topic onsets
// (from face, or from a head tilt with no accompanying face segment) must sit
// within timing_ms of a clause boundary.
std::vector<DetectedError> check_timing(std::span<const Segment> face,
                                        std::span<const Segment> head,
                                        std::span<const Segment> hands, const VideoMeta& meta,
                                        const RuleThresholds& t);

// All four lexical rules plus the timing checks, sorted by interval and
// deduplicated on (type, interval).
std::vector<DetectedError> detect_errors(std::span<const Segment> hands,
                                         std::span<const Segment> face,
                                         std::span<const Segment> head, const VideoMeta& meta,
                                         const RuleThresholds& t);

} // namespace aslgram
