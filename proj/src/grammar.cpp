#include "aslgram/grammar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

namespace aslgram {

namespace {

constexpr std::array<std::string_view, kErrorTypeCount> kErrorNames = {
    "whq_lexical",   "ynq_lexical", "neg_lexical",    "cond_lexical",
    "ynq_beginning", "ynq_end",     "cond_beginning", "topic_beginning",
};

long ms_rounded(int frames, const VideoMeta& meta) {
    return std::lround(frames_to_ms(frames, meta));
}

std::string describe_span(const Interval& iv, const VideoMeta& meta) {
    return std::to_string(ms_rounded(iv.start, meta)) + "-" + std::to_string(ms_rounded(iv.end, meta)) + " ms";
}

// Human-readable names for the lexical rule messages.
std::string_view trigger_name(GestureLabel l) {
    switch (l) {
    case GestureLabel::Whq: return "WH-question sign";
    case GestureLabel::Ynq: return "yes-no question sign";
    case GestureLabel::Negative: return "negative sign";
    case GestureLabel::Conditional: return "conditional sign";
    default: return "sign";
    }
}

std::string lexical_message(const EvidenceRule& rule, const Segment& trigger,
                            const std::optional<Segment>& nearest, const VideoMeta& meta,
                            const RuleThresholds& t) {
    std::string msg = std::string(trigger_name(rule.trigger)) + " at " +
                      describe_span(trigger.interval, meta) +
                      " has no matching facial expression or head movement within " +
                      std::to_string(std::lround(t.lexical_ms)) + " ms";
    if (nearest) {
        const int gap = interval_gap(trigger.interval, nearest->interval);
        msg += " (nearest acceptable one is " + std::to_string(ms_rounded(gap, meta)) + " ms away)";
    }
    return msg;
}

std::string timing_message(ErrorType type, const Segment& trigger, long nearest_ms,
                           const VideoMeta& meta, const RuleThresholds& t) {
    std::string what;
    switch (type) {
    case ErrorType::YnqBeginning: what = "yes-no question nonmanual signal begins"; break;
    case ErrorType::YnqEnd: what = "yes-no question nonmanual signal ends"; break;
    case ErrorType::CondBeginning: what = "conditional nonmanual signal begins"; break;
    default: what = "topic nonmanual signal begins"; break;
    }
    return what + " " + std::to_string(nearest_ms) + " ms from the closest clause boundary (at " +
           describe_span(trigger.interval, meta) + ", limit " +
           std::to_string(std::lround(t.timing_ms)) + " ms)";
}

bool face_label_in(const Segment& s, std::span<const FaceLabel> set) {
    return std::any_of(set.begin(), set.end(),
                       [&](FaceLabel l) { return s.label == class_id(l); });
}

bool head_label_in(const Segment& s, std::span<const HeadLabel> set) {
    return std::any_of(set.begin(), set.end(),
                       [&](HeadLabel l) { return s.label == class_id(l); });
}

} // namespace

std::string_view to_string(ErrorType type) {
    return kErrorNames[static_cast<int>(type)];
}

std::optional<ErrorType> parse_error_type(std::string_view text) {
    for (int i = 0; i < kErrorTypeCount; ++i)
        if (kErrorNames[i] == text) return static_cast<ErrorType>(i);
    return std::nullopt;
}

std::span<const EvidenceRule> default_evidence_rules() {
    static const std::vector<EvidenceRule> rules = {
        {GestureLabel::Whq,
         ErrorType::WhqLexical,
         {FaceLabel::Whq, FaceLabel::CondTopicRhq}, // RHQ evidence arrives via the merged class
         {HeadLabel::TiltForward, HeadLabel::TiltSlightSide}},
        {GestureLabel::Ynq, ErrorType::YnqLexical, {FaceLabel::Ynq}, {HeadLabel::TiltForward}},
        {GestureLabel::Negative,
         ErrorType::NegLexical,
         {FaceLabel::Negative},
         {HeadLabel::ShakeSideToSide}},
        {GestureLabel::Conditional,
         ErrorType::CondLexical,
         {FaceLabel::CondTopicRhq},
         {HeadLabel::TiltSlightSide}},
    };
    return rules;
}

std::vector<Interval> clause_boundary_points(std::span<const Segment> hand_segments,
                                             const VideoMeta& meta, const RuleThresholds& t) {
    std::vector<Interval> boundaries;
    for (const Segment& s : hand_segments)
        if (s.label == class_id(GestureLabel::ClauseBoundary)) boundaries.push_back(s.interval);
    if (t.implicit_boundaries && meta.frame_count >= 1) {
        boundaries.push_back({0, 0});
        boundaries.push_back({meta.frame_count - 1, meta.frame_count - 1});
    }
    std::sort(boundaries.begin(), boundaries.end(),
              [](const Interval& a, const Interval& b) {
                  return std::tie(a.start, a.end) < std::tie(b.start, b.end);
              });
    boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());
    return boundaries;
}

std::vector<DetectedError> check_lexical(const EvidenceRule& rule, std::span<const Segment> hands,
                                         std::span<const Segment> face,
                                         std::span<const Segment> head, const VideoMeta& meta,
                                         const RuleThresholds& t) {
    std::vector<DetectedError> errors;
    for (const Segment& trigger : hands) {
        if (trigger.label != class_id(rule.trigger)) continue;
        if (!(trigger.peak_confidence > t.evidence_confidence)) continue;

        bool face_ok = false;
        bool head_ok = false;
        std::optional<Segment> nearest;
        int nearest_gap = std::numeric_limits<int>::max();

        for (const Segment& s : face) {
            if (!face_label_in(s, rule.acceptable_face)) continue;
            const int gap = interval_gap(trigger.interval, s.interval);
            if (frames_to_ms(gap, meta) <= t.lexical_ms) face_ok = true;
            if (gap < nearest_gap) {
                nearest_gap = gap;
                nearest = s;
            }
        }
        for (const Segment& s : head) {
            if (!head_label_in(s, rule.acceptable_head)) continue;
            const int gap = interval_gap(trigger.interval, s.interval);
            if (frames_to_ms(gap, meta) <= t.lexical_ms) head_ok = true;
            if (gap < nearest_gap) {
                nearest_gap = gap;
                nearest = s;
            }
        }

        const bool satisfied = t.require_face_and_head ? (face_ok && head_ok)
                                                       : (face_ok || head_ok);
        if (!satisfied)
            errors.push_back({rule.error_type, trigger.interval, trigger, nearest,
                              lexical_message(rule, trigger, nearest, meta, t)});
    }
    return errors;
}

CtrReading disambiguate_ctr(const Segment& face_segment, std::span<const Segment> hands,
                            const VideoMeta& meta, const RuleThresholds& t) {
    for (const Segment& h : hands) {
        if (h.label != class_id(GestureLabel::Conditional)) continue;
        if (frames_to_ms(interval_gap(face_segment.interval, h.interval), meta) <= t.lexical_ms)
            return CtrReading::Conditional;
    }
    for (const Segment& h : hands) {
        if (h.label != class_id(GestureLabel::Whq) && h.label != class_id(GestureLabel::Ynq))
            continue;
        if (face_segment.interval.contains(h.interval)) return CtrReading::Rhq;
    }
    return CtrReading::Topic;
}

namespace {

// Distance in ms from a single frame to the closest boundary interval.
double nearest_boundary_ms(int frame, std::span<const Interval> boundaries,
                           const VideoMeta& meta) {
    double best = std::numeric_limits<double>::infinity();
    const Interval point{frame, frame};
    for (const Interval& b : boundaries)
        best = std::min(best, frames_to_ms(interval_gap(point, b), meta));
    return best;
}

void check_anchor(ErrorType type, const Segment& trigger, int frame,
                  std::span<const Interval> boundaries, const VideoMeta& meta,
                  const RuleThresholds& t, std::vector<DetectedError>& out) {
    const double nearest = nearest_boundary_ms(frame, boundaries, meta);
    if (nearest > t.timing_ms)
        out.push_back({type, trigger.interval, trigger, std::nullopt,
                       timing_message(type, trigger,
                                      std::isfinite(nearest) ? std::lround(nearest) : -1, meta,
                                      t)});
}

} // namespace

std::vector<DetectedError> check_timing(std::span<const Segment> face,
                                        std::span<const Segment> head,
                                        std::span<const Segment> hands, const VideoMeta& meta,
                                        const RuleThresholds& t) {
    const std::vector<Interval> boundaries = clause_boundary_points(hands, meta, t);
    std::vector<DetectedError> errors;

    for (const Segment& s : face) {
        if (!(s.peak_confidence > t.evidence_confidence)) continue;
        if (s.label == class_id(FaceLabel::Ynq)) {
            check_anchor(ErrorType::YnqBeginning, s, s.interval.start, boundaries, meta, t,
                         errors);
            check_anchor(ErrorType::YnqEnd, s, s.interval.end, boundaries, meta, t, errors);
        } else if (s.label == class_id(FaceLabel::CondTopicRhq)) {
            switch (disambiguate_ctr(s, hands, meta, t)) {
            case CtrReading::Conditional:
                check_anchor(ErrorType::CondBeginning, s, s.interval.start, boundaries, meta, t,
                             errors);
                break;
            case CtrReading::Topic:
                check_anchor(ErrorType::TopicBeginning, s, s.interval.start, boundaries, meta, t,
                             errors);
                break;
            case CtrReading::Rhq:
                break; // rhetorical questions carry no timing rule
            }
        }
    }

    // Topic can also be read off the head stream alone, when no face segment
    // accompanies the tilt.
    const ClassId face_others = others_class(Modality::Face);
    for (const Segment& s : head) {
        if (s.label != class_id(HeadLabel::TiltSlightSide)) continue;
        if (!(s.peak_confidence > t.evidence_confidence)) continue;
        const bool accompanied =
            std::any_of(face.begin(), face.end(), [&](const Segment& f) {
                return f.label != face_others && interval_gap(f.interval, s.interval) == 0;
            });
        if (!accompanied)
            check_anchor(ErrorType::TopicBeginning, s, s.interval.start, boundaries, meta, t,
                         errors);
    }
    return errors;
}

std::vector<DetectedError> detect_errors(std::span<const Segment> hands,
                                         std::span<const Segment> face,
                                         std::span<const Segment> head, const VideoMeta& meta,
                                         const RuleThresholds& t) {
    std::vector<DetectedError> errors;
    for (const EvidenceRule& rule : default_evidence_rules()) {
        auto found = check_lexical(rule, hands, face, head, meta, t);
        errors.insert(errors.end(), std::make_move_iterator(found.begin()),
                      std::make_move_iterator(found.end()));
    }
    auto timing = check_timing(face, head, hands, meta, t);
    errors.insert(errors.end(), std::make_move_iterator(timing.begin()),
                  std::make_move_iterator(timing.end()));

    std::sort(errors.begin(), errors.end(), [](const DetectedError& a, const DetectedError& b) {
        return std::tie(a.interval.start, a.interval.end, a.type) <
               std::tie(b.interval.start, b.interval.end, b.type);
    });
    std::set<std::tuple<ErrorType, int, int>> seen;
    std::vector<DetectedError> unique;
    unique.reserve(errors.size());
    for (DetectedError& e : errors)
        if (seen.emplace(e.type, e.interval.start, e.interval.end).second)
            unique.push_back(std::move(e));
    return unique;
}

} // namespace aslgram
