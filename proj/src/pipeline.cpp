#include "aslgram/pipeline.hpp"

#include <algorithm>
#include <exception>
#include <vector>

namespace aslgram {

namespace {

ModalityResult run_lane(std::span<const WindowPrediction> predictions, Modality modality,
                        const PipelineConfig& config, const VideoMeta& meta, bool parallel) {
    ModalityResult lane;
    const WindowSpec& spec = config.windows[static_cast<int>(modality)];
    lane.votes = parallel ? accumulate_votes_parallel(predictions, spec, meta)
                          : accumulate_votes(predictions, spec, meta);
    lane.finals = vote_stream(lane.votes, config.voting);
    lane.segments =
        prune_segments(extract_segments(lane.finals, lane.votes, modality), config.prune);
    return lane;
}

} // namespace

PipelineResult run_pipeline(const PredictionFile& input, const PipelineConfig& config,
                            ExecMode mode) {
    // Shard by modality; the engine accepts records in any order.
    std::array<std::vector<WindowPrediction>, kModalityCount> sharded;
    for (const WindowPrediction& p : input.records)
        sharded[static_cast<int>(p.modality)].push_back(p);
    for (auto& shard : sharded)
        std::sort(shard.begin(), shard.end(),
                  [](const WindowPrediction& a, const WindowPrediction& b) {
                      return a.start < b.start;
                  });

    PipelineResult result;
    const bool parallel = mode == ExecMode::Parallel;
    if (parallel) {
        // The three lanes are independent; each owns its tie-break RNG, so
        // the outcome does not depend on scheduling. Exceptions must not
        // escape an OpenMP region; they are parked and rethrown in lane order.
        std::array<std::exception_ptr, kModalityCount> failures{};
#pragma omp parallel sections
        {
#pragma omp section
            {
                try {
                    result.lanes[0] =
                        run_lane(sharded[0], Modality::Hands, config, input.meta, true);
                } catch (...) {
                    failures[0] = std::current_exception();
                }
            }
#pragma omp section
            {
                try {
                    result.lanes[1] =
                        run_lane(sharded[1], Modality::Face, config, input.meta, true);
                } catch (...) {
                    failures[1] = std::current_exception();
                }
            }
#pragma omp section
            {
                try {
                    result.lanes[2] =
                        run_lane(sharded[2], Modality::Head, config, input.meta, true);
                } catch (...) {
                    failures[2] = std::current_exception();
                }
            }
        }
        for (const std::exception_ptr& failure : failures)
            if (failure) std::rethrow_exception(failure);
    } else {
        for (int m = 0; m < kModalityCount; ++m)
            result.lanes[m] =
                run_lane(sharded[m], static_cast<Modality>(m), config, input.meta, false);
    }

    result.errors = detect_errors(result.lanes[0].segments, result.lanes[1].segments,
                                  result.lanes[2].segments, input.meta, config.thresholds);
    return result;
}

} // namespace aslgram
