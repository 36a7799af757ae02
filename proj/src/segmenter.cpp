#include "aslgram/segmenter.hpp"

#include <algorithm>

namespace aslgram {

double frame_confidence(const FrameVotes& votes, const FrameLabel& final_label) {
    double best = 0.0;
    for (const Vote& v : votes)
        if (v.label == final_label.label) best = std::max(best, v.confidence);
    return best;
}

std::vector<Segment> extract_segments(std::span<const FrameLabel> finals,
                                      std::span<const FrameVotes> votes, Modality modality) {
    std::vector<Segment> segments;
    if (finals.empty()) return segments;

    Segment current{modality, finals[0].label, {0, 0}, frame_confidence(votes[0], finals[0])};
    for (int f = 1; f < static_cast<int>(finals.size()); ++f) {
        const double conf = frame_confidence(votes[static_cast<std::size_t>(f)],
                                             finals[static_cast<std::size_t>(f)]);
        if (finals[static_cast<std::size_t>(f)].label == current.label) {
            current.interval.end = f;
            current.peak_confidence = std::max(current.peak_confidence, conf);
        } else {
            segments.push_back(current);
            current = {modality, finals[static_cast<std::size_t>(f)].label, {f, f}, conf};
        }
    }
    segments.push_back(current);
    return segments;
}

std::vector<Segment> prune_segments(std::vector<Segment> segments, const PruneConfig& config) {
    if (segments.empty()) return segments;
    const ClassId others = others_class(segments.front().modality);

    // Keep only segments whose peak confidence is strictly greater than the
    // threshold; everything else becomes Others.
    for (Segment& s : segments)
        if (s.label != others && !(s.peak_confidence > config.threshold)) s.label = others;

    // Merge adjacent Others runs so maximality holds again.
    std::vector<Segment> merged;
    merged.reserve(segments.size());
    for (const Segment& s : segments) {
        if (!merged.empty() && merged.back().label == s.label) {
            merged.back().interval.end = s.interval.end;
            merged.back().peak_confidence = std::max(merged.back().peak_confidence,
                                                     s.peak_confidence);
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

} // namespace aslgram
