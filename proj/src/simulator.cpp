#include "aslgram/simulator.hpp"

#include "aslgram/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <tuple>

namespace aslgram {

namespace {

// Merged face class for an annotation spelling (pre-merge subclasses map to
// the combined Conditional/Topic/RHQ class).
FaceLabel merged_face_label(std::string_view annotation) {
    if (annotation == "conditional" || annotation == "topic" || annotation == "rhq" ||
        annotation == "cond_topic_rhq")
        return FaceLabel::CondTopicRhq;
    if (annotation == "negative") return FaceLabel::Negative;
    if (annotation == "ynq") return FaceLabel::Ynq;
    if (annotation == "whq") return FaceLabel::Whq;
    return FaceLabel::Others;
}

// Head pose paired with each face class.
HeadLabel head_for_face(FaceLabel face) {
    switch (face) {
    case FaceLabel::Ynq:
    case FaceLabel::Whq: return HeadLabel::TiltForward;
    case FaceLabel::Negative: return HeadLabel::ShakeSideToSide;
    case FaceLabel::CondTopicRhq: return HeadLabel::TiltSlightSide;
    case FaceLabel::Others: break;
    }
    return HeadLabel::Others;
}

void paint(std::vector<ClassId>& frames, const Interval& iv, ClassId label) {
    for (int f = iv.start; f <= iv.end; ++f) frames[static_cast<std::size_t>(f)] = label;
}

std::uint64_t modality_seed(std::uint64_t seed, Modality m) {
    return seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(m) + 1));
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

FrameTruth derive_frame_truth(const AnnotationTimeline& timeline) {
    const int n = timeline.meta.frame_count;
    FrameTruth truth;
    for (int m = 0; m < kModalityCount; ++m)
        truth.labels[m].assign(static_cast<std::size_t>(n),
                               others_class(static_cast<Modality>(m)));

    auto& hands = truth.labels[static_cast<int>(Modality::Hands)];
    // wanted_words painted last so trigger words win any cross-tier overlap.
    if (const auto* tier = timeline.find_tier("fingerspelling"))
        for (const AnnotationSpan& s : tier->spans)
            paint(hands, s.interval, class_id(GestureLabel::Fingerspelling));
    if (const auto* tier = timeline.find_tier("lexical_pointing"))
        for (const AnnotationSpan& s : tier->spans)
            paint(hands, s.interval, class_id(GestureLabel::Pointing));
    if (const auto* tier = timeline.find_tier("clause"))
        for (const AnnotationSpan& s : tier->spans)
            paint(hands, s.interval, class_id(GestureLabel::ClauseBoundary));
    if (const auto* tier = timeline.find_tier("wanted_words"))
        for (const AnnotationSpan& s : tier->spans)
            if (const auto label = parse_label(Modality::Hands, s.label))
                paint(hands, s.interval, *label);

    auto& face = truth.labels[static_cast<int>(Modality::Face)];
    if (const auto* tier = timeline.find_tier("facial_expressions"))
        for (const AnnotationSpan& s : tier->spans)
            paint(face, s.interval, class_id(merged_face_label(s.label)));

    auto& head = truth.labels[static_cast<int>(Modality::Head)];
    if (const auto* tier = timeline.find_tier("head_movements")) {
        for (const AnnotationSpan& s : tier->spans)
            if (const auto label = parse_label(Modality::Head, s.label))
                paint(head, s.interval, *label);
    } else {
        for (int f = 0; f < n; ++f)
            head[static_cast<std::size_t>(f)] = class_id(
                head_for_face(static_cast<FaceLabel>(face[static_cast<std::size_t>(f)])));
    }
    return truth;
}

std::vector<WindowPrediction> synthesize_predictions(std::span<const ClassId> truth,
                                                     Modality modality, const WindowSpec& spec,
                                                     const VideoMeta& meta,
                                                     const NoiseModel& noise) {
    const std::vector<int> starts = enumerate_windows(meta, spec);
    const int classes = label_count(modality);
    const double flip = noise.flip_probability[static_cast<int>(modality)];
    const auto& confusion = noise.confusion[static_cast<int>(modality)];

    std::mt19937_64 rng(modality_seed(noise.seed, modality));
    std::vector<WindowPrediction> predictions;
    predictions.reserve(starts.size());

    for (int start : starts) {
        const ClassId truth_label =
            truth[static_cast<std::size_t>(start + (spec.size - 1) / 2)];
        ClassId label = truth_label;
        if (confusion) {
            const auto& row = (*confusion)[truth_label];
            double u = uniform01(rng);
            for (int c = 0; c < classes; ++c) {
                u -= row[static_cast<std::size_t>(c)];
                if (u < 0.0) {
                    label = static_cast<ClassId>(c);
                    break;
                }
            }
        } else if (flip > 0.0 && uniform01(rng) < flip) {
            // uniform over the other labels
            const auto draw = static_cast<ClassId>(rng() % static_cast<std::uint64_t>(classes - 1));
            label = draw >= truth_label ? static_cast<ClassId>(draw + 1) : draw;
        }
        const double lo = label == truth_label ? noise.correct_conf_lo : noise.incorrect_conf_lo;
        const double hi = label == truth_label ? noise.correct_conf_hi : noise.incorrect_conf_hi;
        predictions.push_back({modality, start, label, lo + uniform01(rng) * (hi - lo)});
    }
    return predictions;
}

PredictionFile synthesize_prediction_file(const AnnotationTimeline& timeline,
                                          const std::array<WindowSpec, kModalityCount>& specs,
                                          const NoiseModel& noise) {
    const FrameTruth truth = derive_frame_truth(timeline);
    PredictionFile file;
    file.meta = timeline.meta;
    file.specs = specs;
    for (int m = 0; m < kModalityCount; ++m) {
        auto predictions = synthesize_predictions(truth.labels[m], static_cast<Modality>(m),
                                                  specs[m], timeline.meta, noise);
        file.records.insert(file.records.end(), predictions.begin(), predictions.end());
    }
    return file;
}

namespace {

// Annotation-level reading of one face span, shared by injection and oracle.
enum class FaceReading { Conditional, Topic, Rhq, Ynq, Whq, Negative };

struct FaceSpanView {
    FaceLabel merged;
    Interval interval;
    std::size_t tier_index; // position within the facial_expressions tier
    FaceReading reading;
};

struct WordView {
    GestureLabel label;
    Interval interval;
};

std::vector<WordView> collect_words(const AnnotationTimeline& timeline) {
    std::vector<WordView> words;
    if (const auto* tier = timeline.find_tier("wanted_words"))
        for (const AnnotationSpan& s : tier->spans)
            if (const auto label = parse_label(Modality::Hands, s.label))
                words.push_back({static_cast<GestureLabel>(*label), s.interval});
    return words;
}

FaceReading read_ctr(const Interval& span, std::span<const WordView> words,
                     const VideoMeta& meta, const RuleThresholds& t) {
    for (const WordView& w : words)
        if (w.label == GestureLabel::Conditional &&
            frames_to_ms(interval_gap(span, w.interval), meta) <= t.lexical_ms)
            return FaceReading::Conditional;
    for (const WordView& w : words)
        if ((w.label == GestureLabel::Whq || w.label == GestureLabel::Ynq) &&
            span.contains(w.interval))
            return FaceReading::Rhq;
    return FaceReading::Topic;
}

std::vector<FaceSpanView> collect_face_spans(const AnnotationTimeline& timeline,
                                             std::span<const WordView> words,
                                             const RuleThresholds& t) {
    std::vector<FaceSpanView> views;
    const auto* tier = timeline.find_tier("facial_expressions");
    if (!tier) return views;
    for (std::size_t i = 0; i < tier->spans.size(); ++i) {
        const AnnotationSpan& s = tier->spans[i];
        const FaceLabel merged = merged_face_label(s.label);
        FaceReading reading;
        if (s.label == "conditional") reading = FaceReading::Conditional;
        else if (s.label == "topic") reading = FaceReading::Topic;
        else if (s.label == "rhq") reading = FaceReading::Rhq;
        else if (s.label == "ynq") reading = FaceReading::Ynq;
        else if (s.label == "whq") reading = FaceReading::Whq;
        else if (s.label == "negative") reading = FaceReading::Negative;
        else reading = read_ctr(s.interval, words, timeline.meta, t);
        views.push_back({merged, s.interval, i, reading});
    }
    return views;
}

struct HeadSpanView {
    HeadLabel label;
    Interval interval;
};

std::vector<HeadSpanView> collect_head_spans(const AnnotationTimeline& timeline,
                                             std::span<const FaceSpanView> faces) {
    std::vector<HeadSpanView> views;
    if (const auto* tier = timeline.find_tier("head_movements")) {
        for (const AnnotationSpan& s : tier->spans)
            if (const auto label = parse_label(Modality::Head, s.label))
                views.push_back({static_cast<HeadLabel>(*label), s.interval});
    } else {
        for (const FaceSpanView& f : faces) views.push_back({head_for_face(f.merged), f.interval});
    }
    return views;
}

struct LexicalRuleView {
    GestureLabel trigger;
    ErrorType error_type;
    std::vector<FaceLabel> face;
    std::vector<HeadLabel> head;
};

LexicalRuleView lexical_rule_for(ErrorType type) {
    for (const EvidenceRule& rule : default_evidence_rules())
        if (rule.error_type == type)
            return {rule.trigger, rule.error_type, rule.acceptable_face, rule.acceptable_head};
    raise(ErrorKind::NoEligibleInstance,
          std::string(to_string(type)) + " is not a lexical error type");
}

bool is_lexical(ErrorType type) {
    return type == ErrorType::WhqLexical || type == ErrorType::YnqLexical ||
           type == ErrorType::NegLexical || type == ErrorType::CondLexical;
}

std::vector<Interval> annotation_boundaries(const AnnotationTimeline& timeline,
                                            const RuleThresholds& t) {
    std::vector<Interval> boundaries;
    if (const auto* tier = timeline.find_tier("clause"))
        for (const AnnotationSpan& s : tier->spans) boundaries.push_back(s.interval);
    if (t.implicit_boundaries && timeline.meta.frame_count >= 1) {
        boundaries.push_back({0, 0});
        boundaries.push_back({timeline.meta.frame_count - 1, timeline.meta.frame_count - 1});
    }
    return boundaries;
}

double nearest_boundary_ms(int frame, std::span<const Interval> boundaries,
                           const VideoMeta& meta) {
    double best = std::numeric_limits<double>::infinity();
    for (const Interval& b : boundaries)
        best = std::min(best, frames_to_ms(interval_gap({frame, frame}, b), meta));
    return best;
}

// Trigger words whose lexical evidence relies on this face span.
std::vector<WordView> dependent_words(const FaceSpanView& span, std::span<const WordView> words,
                                      const VideoMeta& meta, const RuleThresholds& t) {
    std::vector<WordView> dependents;
    for (const WordView& w : words) {
        if (!(w.label == GestureLabel::Whq || w.label == GestureLabel::Ynq ||
              w.label == GestureLabel::Negative || w.label == GestureLabel::Conditional))
            continue;
        const LexicalRuleView rule = lexical_rule_for(
            w.label == GestureLabel::Whq  ? ErrorType::WhqLexical
            : w.label == GestureLabel::Ynq ? ErrorType::YnqLexical
            : w.label == GestureLabel::Negative ? ErrorType::NegLexical
                                                : ErrorType::CondLexical);
        if (std::find(rule.face.begin(), rule.face.end(), span.merged) == rule.face.end())
            continue;
        if (frames_to_ms(interval_gap(w.interval, span.interval), meta) <= t.lexical_ms)
            dependents.push_back(w);
    }
    return dependents;
}

} // namespace

AnnotationTimeline inject_error(const AnnotationTimeline& timeline, ErrorType target,
                                std::uint64_t seed, const RuleThresholds& t) {
    std::mt19937_64 rng(seed);
    AnnotationTimeline result = timeline;
    const VideoMeta meta = timeline.meta;
    const std::vector<WordView> words = collect_words(timeline);

    if (is_lexical(target)) {
        const LexicalRuleView rule = lexical_rule_for(target);
        std::vector<WordView> eligible;
        for (const WordView& w : words)
            if (w.label == rule.trigger) eligible.push_back(w);
        if (eligible.empty())
            raise(ErrorKind::NoEligibleInstance,
                  "no " + std::string(label_name(Modality::Hands, class_id(rule.trigger))) +
                      " sign to strip evidence from for " + std::string(to_string(target)));
        const WordView pick = eligible[rng() % eligible.size()];

        // Drop every acceptable face span near the sign; the paired head
        // evidence disappears with it (or is dropped from an explicit tier).
        auto near_sign = [&](const Interval& iv) {
            return frames_to_ms(interval_gap(pick.interval, iv), meta) <= t.lexical_ms;
        };
        for (AnnotationTier& tier : result.tiers) {
            if (tier.name == "facial_expressions") {
                std::erase_if(tier.spans, [&](const AnnotationSpan& s) {
                    return std::find(rule.face.begin(), rule.face.end(),
                                     merged_face_label(s.label)) != rule.face.end() &&
                           near_sign(s.interval);
                });
            } else if (tier.name == "head_movements") {
                std::erase_if(tier.spans, [&](const AnnotationSpan& s) {
                    const auto label = parse_label(Modality::Head, s.label);
                    return label &&
                           std::find(rule.head.begin(), rule.head.end(),
                                     static_cast<HeadLabel>(*label)) != rule.head.end() &&
                           near_sign(s.interval);
                });
            }
        }
        result.tier_spans("errors").push_back({std::string(to_string(target)), pick.interval});
    } else {
        const bool shift_start = target != ErrorType::YnqEnd;
        const FaceReading wanted = target == ErrorType::CondBeginning ? FaceReading::Conditional
                                   : target == ErrorType::TopicBeginning ? FaceReading::Topic
                                                                         : FaceReading::Ynq;
        const std::vector<Interval> boundaries = annotation_boundaries(timeline, t);
        const std::vector<FaceSpanView> faces = collect_face_spans(timeline, words, t);

        // A candidate is a span plus the shifted interval that realises the
        // error while keeping every dependent sign lexically covered.
        struct Candidate {
            std::size_t tier_index;
            Interval shifted;
            int anchor;
        };
        std::vector<Candidate> candidates;
        for (const FaceSpanView& span : faces) {
            if (span.reading != wanted) continue;
            if (wanted == FaceReading::Ynq && span.merged != FaceLabel::Ynq) continue;

            const auto dependents = dependent_words(span, words, meta, t);
            auto far_enough = [&](int frame) {
                return nearest_boundary_ms(frame, boundaries, meta) >= t.timing_ms + 500.0;
            };
            auto covers_dependents = [&](const Interval& iv) {
                return std::all_of(dependents.begin(), dependents.end(), [&](const WordView& w) {
                    return iv.start <= w.interval.start && w.interval.end <= iv.end;
                });
            };

            if (shift_start) {
                for (int s = span.interval.start + 1; s <= span.interval.end; ++s) {
                    const Interval shifted{s, span.interval.end};
                    if (!far_enough(s) || !covers_dependents(shifted)) continue;
                    // A merged-class span must still read as the target class
                    // after the move.
                    if (span.merged == FaceLabel::CondTopicRhq &&
                        read_ctr(shifted, words, meta, t) != wanted)
                        continue;
                    candidates.push_back({span.tier_index, shifted, s});
                    break;
                }
            } else {
                for (int e = span.interval.end - 1; e >= span.interval.start; --e) {
                    const Interval shifted{span.interval.start, e};
                    if (!far_enough(e) || !covers_dependents(shifted)) continue;
                    candidates.push_back({span.tier_index, shifted, e});
                    break;
                }
            }
        }
        if (candidates.empty())
            raise(ErrorKind::NoEligibleInstance,
                  "no face span can be shifted to realise " + std::string(to_string(target)));
        const Candidate pick = candidates[rng() % candidates.size()];

        auto& spans = result.tier_spans("facial_expressions");
        spans[pick.tier_index].interval = pick.shifted;
        std::sort(spans.begin(), spans.end(), [](const AnnotationSpan& a, const AnnotationSpan& b) {
            return std::tie(a.interval.start, a.interval.end) <
                   std::tie(b.interval.start, b.interval.end);
        });
        // Ground truth marks the anchor frame, so several timing injections
        // on one span stay non-overlapping.
        result.tier_spans("errors").push_back(
            {std::string(to_string(target)), {pick.anchor, pick.anchor}});
    }

    auto& errors = result.tier_spans("errors");
    std::sort(errors.begin(), errors.end(), [](const AnnotationSpan& a, const AnnotationSpan& b) {
        return std::tie(a.interval.start, a.interval.end) <
               std::tie(b.interval.start, b.interval.end);
    });
    return result;
}

std::vector<DetectedError> oracle_detect(const AnnotationTimeline& timeline,
                                         const RuleThresholds& t) {
    const VideoMeta meta = timeline.meta;
    const std::vector<WordView> words = collect_words(timeline);
    const std::vector<FaceSpanView> faces = collect_face_spans(timeline, words, t);
    const std::vector<HeadSpanView> heads = collect_head_spans(timeline, faces);
    const std::vector<Interval> boundaries = annotation_boundaries(timeline, t);

    std::vector<DetectedError> errors;
    auto add = [&](ErrorType type, const Interval& iv, Modality modality, ClassId label) {
        errors.push_back({type, iv, Segment{modality, label, iv, 1.0}, std::nullopt,
                          std::string(to_string(type)) + " (oracle)"});
    };

    // Lexical rules, pairwise over (sign, evidence span).
    for (const WordView& w : words) {
        ErrorType type;
        switch (w.label) {
        case GestureLabel::Whq: type = ErrorType::WhqLexical; break;
        case GestureLabel::Ynq: type = ErrorType::YnqLexical; break;
        case GestureLabel::Negative: type = ErrorType::NegLexical; break;
        case GestureLabel::Conditional: type = ErrorType::CondLexical; break;
        default: continue;
        }
        const LexicalRuleView rule = lexical_rule_for(type);
        bool face_ok = false;
        for (const FaceSpanView& f : faces)
            if (std::find(rule.face.begin(), rule.face.end(), f.merged) != rule.face.end() &&
                frames_to_ms(interval_gap(w.interval, f.interval), meta) <= t.lexical_ms)
                face_ok = true;
        bool head_ok = false;
        for (const HeadSpanView& h : heads)
            if (std::find(rule.head.begin(), rule.head.end(), h.label) != rule.head.end() &&
                frames_to_ms(interval_gap(w.interval, h.interval), meta) <= t.lexical_ms)
                head_ok = true;
        const bool satisfied = t.require_face_and_head ? (face_ok && head_ok)
                                                       : (face_ok || head_ok);
        if (!satisfied)
            add(type, w.interval, Modality::Hands, class_id(w.label));
    }

    // Timing rules on annotation spans.
    auto too_far = [&](int frame) { return nearest_boundary_ms(frame, boundaries, meta) > t.timing_ms; };
    for (const FaceSpanView& f : faces) {
        if (f.merged == FaceLabel::Ynq) {
            if (too_far(f.interval.start))
                add(ErrorType::YnqBeginning, f.interval, Modality::Face, class_id(FaceLabel::Ynq));
            if (too_far(f.interval.end))
                add(ErrorType::YnqEnd, f.interval, Modality::Face, class_id(FaceLabel::Ynq));
        } else if (f.merged == FaceLabel::CondTopicRhq) {
            if (f.reading == FaceReading::Conditional && too_far(f.interval.start))
                add(ErrorType::CondBeginning, f.interval, Modality::Face,
                    class_id(FaceLabel::CondTopicRhq));
            if (f.reading == FaceReading::Topic && too_far(f.interval.start))
                add(ErrorType::TopicBeginning, f.interval, Modality::Face,
                    class_id(FaceLabel::CondTopicRhq));
        }
    }
    for (const HeadSpanView& h : heads) {
        if (h.label != HeadLabel::TiltSlightSide) continue;
        const bool accompanied = std::any_of(faces.begin(), faces.end(), [&](const FaceSpanView& f) {
            return interval_gap(f.interval, h.interval) == 0;
        });
        if (!accompanied && too_far(h.interval.start))
            add(ErrorType::TopicBeginning, h.interval, Modality::Head,
                class_id(HeadLabel::TiltSlightSide));
    }

    std::sort(errors.begin(), errors.end(), [](const DetectedError& a, const DetectedError& b) {
        return std::tie(a.interval.start, a.interval.end, a.type) <
               std::tie(b.interval.start, b.interval.end, b.type);
    });
    std::set<std::tuple<ErrorType, int, int>> seen;
    std::vector<DetectedError> unique;
    for (DetectedError& e : errors)
        if (seen.emplace(e.type, e.interval.start, e.interval.end).second)
            unique.push_back(std::move(e));
    return unique;
}

namespace {

// Sentence bodies for the sample passage; offsets are relative to the body
// start, lengths leave the nonmanual spans comfortably wider than the face
// window.
struct SentencePlan {
    int length;
    // tier, label, rel_start, rel_end
    std::vector<std::tuple<const char*, const char*, int, int>> spans;
};

const std::vector<SentencePlan>& sentence_plans() {
    static const std::vector<SentencePlan> plans = {
        // WH question, nonmanual over the question sign only
        {150,
         {{"wanted_words", "pointing", 20, 32},
          {"fingerspelling", "fingerspelling", 50, 70},
          {"wanted_words", "whq", 120, 134},
          {"facial_expressions", "whq", 110, 145}}},
        // yes-no question, QMWG at the very end, nonmanual over the whole clause
        {150,
         {{"wanted_words", "pointing", 10, 22},
          {"wanted_words", "time", 30, 42},
          {"wanted_words", "ynq", 138, 149},
          {"facial_expressions", "ynq", 0, 149}}},
        // yes-no question with the sign mid-clause
        {200, {{"wanted_words", "ynq", 95, 107}, {"facial_expressions", "ynq", 0, 199}}},
        {200, {{"wanted_words", "ynq", 95, 107}, {"facial_expressions", "ynq", 0, 199}}},
        // negation mid-clause
        {150,
         {{"wanted_words", "negative", 60, 72},
          {"facial_expressions", "negative", 50, 85},
          {"wanted_words", "time", 100, 112}}},
        // conditional opening the clause
        {150,
         {{"wanted_words", "conditional", 2, 14},
          {"facial_expressions", "conditional", 0, 40},
          {"wanted_words", "pointing", 60, 72}}},
        // conditionals with the sign deeper in the clause
        {220,
         {{"facial_expressions", "conditional", 0, 120},
          {"wanted_words", "conditional", 80, 92},
          {"wanted_words", "pointing", 140, 152}}},
        {220,
         {{"facial_expressions", "conditional", 0, 120},
          {"wanted_words", "conditional", 80, 92},
          {"wanted_words", "pointing", 140, 152}}},
        // topicalised clause, marked from the face only
        {150,
         {{"facial_expressions", "topic", 0, 100},
          {"lexical_pointing", "pointing", 10, 20},
          {"wanted_words", "time", 110, 122}}},
        // rhetorical question wrapped around a WH sign
        {180,
         {{"wanted_words", "pointing", 10, 22},
          {"facial_expressions", "rhq", 40, 130},
          {"wanted_words", "whq", 80, 92}}},
    };
    return plans;
}

constexpr int kLeadFrames = 90;
constexpr int kBoundaryFrames = 10;
constexpr int kTailFrames = 60;

} // namespace

AnnotationTimeline sample_timeline(int target_frames) {
    const auto& plans = sentence_plans();
    AnnotationTimeline timeline;
    timeline.meta.fps = 30.0;

    int cursor = kLeadFrames;
    auto add_boundary = [&] {
        timeline.tier_spans("clause").push_back(
            {"clause_boundary", {cursor, cursor + kBoundaryFrames - 1}});
        cursor += kBoundaryFrames;
    };
    auto add_sentence = [&](const SentencePlan& plan) {
        for (const auto& [tier, label, rel_start, rel_end] : plan.spans)
            timeline.tier_spans(tier).push_back(
                {label, {cursor + rel_start, cursor + rel_end}});
        cursor += plan.length;
    };

    if (target_frames <= 0) {
        for (const SentencePlan& plan : plans) {
            add_boundary();
            add_sentence(plan);
        }
        add_boundary();
        cursor += kTailFrames;
    } else {
        std::size_t next = 0;
        while (cursor + kBoundaryFrames + plans[next % plans.size()].length + kBoundaryFrames +
                   kTailFrames <=
               target_frames) {
            add_boundary();
            add_sentence(plans[next++ % plans.size()]);
        }
        if (next > 0) add_boundary();
        cursor = target_frames; // pad the remainder with background
    }

    timeline.meta.frame_count = cursor;
    for (AnnotationTier& tier : timeline.tiers)
        std::sort(tier.spans.begin(), tier.spans.end(),
                  [](const AnnotationSpan& a, const AnnotationSpan& b) {
                      return std::tie(a.interval.start, a.interval.end) <
                             std::tie(b.interval.start, b.interval.end);
                  });
    return timeline;
}

} // namespace aslgram
