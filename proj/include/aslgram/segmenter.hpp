#pragma once

#include "aslgram/timeline.hpp"
#include "aslgram/voting.hpp"
#include "aslgram/windows.hpp"

#include <span>
#include <vector>

namespace aslgram {

// Maximal run of consecutive frames sharing one final label.
struct Segment {
    Modality modality = Modality::Hands;
    ClassId label = 0;
    Interval interval{};
    double peak_confidence = 0.0;

    bool operator==(const Segment&) const = default;
};

struct PruneConfig {
    double threshold = 0.8; // segments survive only when peak confidence is strictly greater
};

// Confidence supporting the chosen final label at one frame: the maximum
// confidence among that frame's votes carrying the final label.
double frame_confidence(const FrameVotes& votes, const FrameLabel& final_label);

// Partition frames 0..n-1 into maximal same-label segments.
std::vector<Segment> extract_segments(std::span<const FrameLabel> finals,
                                      std::span<const FrameVotes> votes, Modality modality);

// Relabel low-confidence segments to Others and merge adjacent Others runs.
// Others segments themselves are never pruned.
std::vector<Segment> prune_segments(std::vector<Segment> segments, const PruneConfig& config);

} // namespace aslgram
