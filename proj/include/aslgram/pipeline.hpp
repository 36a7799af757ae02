#pragma once

#include "aslgram/grammar.hpp"
#include "aslgram/io.hpp"
#include "aslgram/segmenter.hpp"
#include "aslgram/voting.hpp"
#include "aslgram/windows.hpp"

#include <array>

namespace aslgram {

// Serial runs every stage on one thread through the reference kernels.
// Parallel runs the three modality lanes as OpenMP tasks and uses the
// parallel vote-accumulation kernel; output is identical by contract.
enum class ExecMode { Serial, Parallel };

struct PipelineConfig {
    std::array<WindowSpec, kModalityCount> windows{kDefaultHandsWindow, kDefaultFaceWindow,
                                                   kDefaultHeadWindow};
    VotingConfig voting{};
    PruneConfig prune{};
    RuleThresholds thresholds{};
};

// Intermediate products of one modality lane (accumulate -> vote -> segment).
struct ModalityResult {
    std::vector<FrameVotes> votes;
    std::vector<FrameLabel> finals;
    std::vector<Segment> segments; // pruned
};

struct PipelineResult {
    std::array<ModalityResult, kModalityCount> lanes;
    std::vector<DetectedError> errors;
};

// Full detect pipeline: accumulate windows, vote per frame, extract and prune
// segments per modality, then run the grammar rules across modalities.
PipelineResult run_pipeline(const PredictionFile& input, const PipelineConfig& config,
                            ExecMode mode = ExecMode::Parallel);

} // namespace aslgram
