#pragma once

#include "aslgram/grammar.hpp"
#include "aslgram/io.hpp"
#include "aslgram/timeline.hpp"
#include "aslgram/windows.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace aslgram {

// Stand-in for the neural classifiers: per-window label flips with
// configurable confidence ranges, or a full per-modality confusion matrix.
struct NoiseModel {
    std::array<double, kModalityCount> flip_probability{0.0, 0.0, 0.0};
    double correct_conf_lo = 0.85;
    double correct_conf_hi = 1.0;
    double incorrect_conf_lo = 0.5;
    double incorrect_conf_hi = 0.9;
    std::uint64_t seed = 0;
    // Optional row-stochastic confusion matrix per modality (true class ->
    // predicted class distribution); overrides uniform flips when set.
    std::array<std::optional<std::vector<std::vector<double>>>, kModalityCount> confusion{};
};

// Per-frame true class ids for each modality, derived from annotation tiers.
struct FrameTruth {
    std::array<std::vector<ClassId>, kModalityCount> labels;
};

// Hands truth comes from the fingerspelling, lexical_pointing, clause and
// wanted_words tiers; face truth from facial_expressions with the
// Conditional/Topic/RHQ subclasses merged; head truth from head_movements if
// present, otherwise mapped from face truth (YNQ/WHQ -> tilt forward,
// Negative -> shake side-to-side, merged class -> tilt slightly to side).
FrameTruth derive_frame_truth(const AnnotationTimeline& timeline);

// One prediction per enumerated window, labeled by the truth at the window's
// center frame, then perturbed by the noise model. Pure function of the seed.
std::vector<WindowPrediction> synthesize_predictions(std::span<const ClassId> truth,
                                                     Modality modality, const WindowSpec& spec,
                                                     const VideoMeta& meta,
                                                     const NoiseModel& noise);

// All three modalities bundled as a loadable prediction file.
PredictionFile synthesize_prediction_file(const AnnotationTimeline& timeline,
                                          const std::array<WindowSpec, kModalityCount>& specs,
                                          const NoiseModel& noise);

// Break one rule of the target type in an otherwise clean timeline: lexical
// targets delete the nonmanual evidence around one trigger sign, timing
// targets shift one nonmanual onset/offset at least 500 ms beyond the timing
// threshold. The errors tier gains the matching ground-truth span.
AnnotationTimeline inject_error(const AnnotationTimeline& timeline, ErrorType target,
                                std::uint64_t seed, const RuleThresholds& t = {});

// Brute-force rule evaluation directly on annotation spans: no windows, no
// voting, no pruning. Used as the independent oracle for the full pipeline.
std::vector<DetectedError> oracle_detect(const AnnotationTimeline& timeline,
                                         const RuleThresholds& t);

// Grammatical multi-sentence timeline exercising every manual and nonmanual
// class, with eligible instances for all eight injections. target_frames = 0
// yields a single pass over the sentence set; larger targets cycle sentences
// and pad with background to exactly target_frames.
AnnotationTimeline sample_timeline(int target_frames = 0);

} // namespace aslgram
