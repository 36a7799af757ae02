#pragma once

#include "aslgram/timeline.hpp"
#include "aslgram/windows.hpp"

#include <random>
#include <span>
#include <vector>

namespace aslgram {

enum class TieBreak {
    SeededRandom,     // uniform draw from the tied candidate set
    LowestLabelIndex, // smallest label in canonical taxonomy order
};

struct VotingConfig {
    int lookback = 3;
    TieBreak tie_break = TieBreak::SeededRandom;
    std::uint64_t seed = 0;
};

struct FrameLabel {
    ClassId label = 0;
    bool tie_broken = false; // true when the vote counts alone did not decide

    bool operator==(const FrameLabel&) const = default;
};

// RNG consumed only on random tie-breaks; one instance per modality stream
// so output never depends on scheduling. The draw is rng() % |candidates|
// with candidates in canonical label order.
using TieRng = std::mt19937_64;

// One step of the majority vote: most frequent label in `votes` wins; ties
// fall back to the final labels of the previous `lookback` frames (nearest
// first), then to the configured tie-break.
FrameLabel majority_vote_frame(const FrameVotes& votes, std::span<const FrameLabel> previous,
                               const VotingConfig& config, TieRng& rng);

// Left-to-right vote over a whole stream; frame i's lookback reads the final
// labels already emitted for frames i-1..i-lookback.
std::vector<FrameLabel> vote_stream(std::span<const FrameVotes> all_votes,
                                    const VotingConfig& config);

} // namespace aslgram
