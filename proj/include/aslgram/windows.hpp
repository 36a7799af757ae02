#pragma once

#include "aslgram/timeline.hpp"

#include <span>
#include <vector>

namespace aslgram {

// Sliding-window geometry for one modality.
struct WindowSpec {
    int size = 8;
    int stride = 2;

    bool operator==(const WindowSpec&) const = default;
};

inline constexpr WindowSpec kDefaultHandsWindow{8, 2};
inline constexpr WindowSpec kDefaultFaceWindow{32, 2};
inline constexpr WindowSpec kDefaultHeadWindow{32, 2};

// Classifier verdict for one window: argmax label plus its confidence.
struct WindowPrediction {
    Modality modality = Modality::Hands;
    int start = 0;
    ClassId label = 0;
    double confidence = 0.0;

    bool operator==(const WindowPrediction&) const = default;
};

struct Vote {
    ClassId label = 0;
    double confidence = 0.0;

    bool operator==(const Vote&) const = default;
};

// Votes contributed to one frame by every window covering it, kept in
// ascending window-start order.
using FrameVotes = std::vector<Vote>;

// Window starts 0, stride, 2*stride, ... up to n-size. When n-size is not a
// multiple of the stride, a tail window at start n-size is appended so the
// last frames stay covered.
std::vector<int> enumerate_windows(const VideoMeta& meta, const WindowSpec& spec);

// True when `start` is one of the starts enumerate_windows would produce.
bool is_enumerated_start(int start, const VideoMeta& meta, const WindowSpec& spec);

// Spread window predictions onto the frames they cover. Serial reference
// implementation: iterates predictions in start order and appends.
std::vector<FrameVotes> accumulate_votes(std::span<const WindowPrediction> predictions,
                                         const WindowSpec& spec, const VideoMeta& meta);

// Same contract, OpenMP kernel parallel over frames. Output is identical to
// the serial reference byte for byte.
std::vector<FrameVotes> accumulate_votes_parallel(std::span<const WindowPrediction> predictions,
                                                  const WindowSpec& spec, const VideoMeta& meta);

} // namespace aslgram
