#include "aslgram/windows.hpp"

#include "aslgram/error.hpp"

#include <algorithm>
#include <string>

namespace aslgram {

namespace {

void validate_geometry(const VideoMeta& meta, const WindowSpec& spec) {
    if (spec.size < 1 || spec.stride < 1)
        raise(ErrorKind::OutOfRange, "window size and stride must be at least 1");
    if (meta.frame_count < spec.size)
        raise(ErrorKind::ShortVideo, "video has " + std::to_string(meta.frame_count) +
                                         " frames but the window needs " +
                                         std::to_string(spec.size));
}

// Maps a window start to its slot in the enumerated order, or -1.
struct StartIndex {
    int last_regular; // largest multiple of stride <= n - size
    int tail;         // n - size when not reached by the stride grid, else -1
    int stride;

    int slot(int start) const {
        if (start == tail) return last_regular / stride + 1;
        if (start >= 0 && start <= last_regular && start % stride == 0) return start / stride;
        return -1;
    }
    int count() const { return last_regular / stride + 1 + (tail >= 0 ? 1 : 0); }
};

StartIndex make_index(const VideoMeta& meta, const WindowSpec& spec) {
    const int max_start = meta.frame_count - spec.size;
    const int last_regular = max_start - max_start % spec.stride;
    const int tail = last_regular < max_start ? max_start : -1;
    return {last_regular, tail, spec.stride};
}

} // namespace

std::vector<int> enumerate_windows(const VideoMeta& meta, const WindowSpec& spec) {
    validate_geometry(meta, spec);
    const StartIndex index = make_index(meta, spec);
    std::vector<int> starts;
    starts.reserve(static_cast<std::size_t>(index.count()));
    for (int s = 0; s <= index.last_regular; s += spec.stride) starts.push_back(s);
    if (index.tail >= 0) starts.push_back(index.tail);
    return starts;
}

bool is_enumerated_start(int start, const VideoMeta& meta, const WindowSpec& spec) {
    validate_geometry(meta, spec);
    return make_index(meta, spec).slot(start) >= 0;
}

namespace {

// Validates predictions and returns them ordered by enumeration slot; empty
// slots (windows the classifier skipped) hold -1.
std::vector<int> slot_table(std::span<const WindowPrediction> predictions, const WindowSpec& spec,
                            const VideoMeta& meta) {
    const StartIndex index = make_index(meta, spec);
    std::vector<int> slots(static_cast<std::size_t>(index.count()), -1);
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const WindowPrediction& p = predictions[i];
        const int slot = index.slot(p.start);
        if (slot < 0)
            raise(ErrorKind::OutOfRange, "window start " + std::to_string(p.start) +
                                             " is not an enumerated start for size " +
                                             std::to_string(spec.size) + " stride " +
                                             std::to_string(spec.stride) + " over " +
                                             std::to_string(meta.frame_count) + " frames");
        if (slots[static_cast<std::size_t>(slot)] >= 0)
            raise(ErrorKind::DuplicateWindow,
                  "two predictions share window start " + std::to_string(p.start));
        slots[static_cast<std::size_t>(slot)] = static_cast<int>(i);
    }
    return slots;
}

} // namespace

std::vector<FrameVotes> accumulate_votes(std::span<const WindowPrediction> predictions,
                                         const WindowSpec& spec, const VideoMeta& meta) {
    const std::vector<int> slots = slot_table(predictions, spec, meta);
    const std::vector<int> starts = enumerate_windows(meta, spec);

    std::vector<FrameVotes> frames(static_cast<std::size_t>(meta.frame_count));
    for (std::size_t slot = 0; slot < slots.size(); ++slot) {
        if (slots[slot] < 0) continue;
        const WindowPrediction& p = predictions[static_cast<std::size_t>(slots[slot])];
        const int start = starts[slot];
        for (int f = start; f < start + spec.size; ++f)
            frames[static_cast<std::size_t>(f)].push_back({p.label, p.confidence});
    }
    return frames;
}

std::vector<FrameVotes> accumulate_votes_parallel(std::span<const WindowPrediction> predictions,
                                                  const WindowSpec& spec, const VideoMeta& meta) {
    const std::vector<int> slots = slot_table(predictions, spec, meta);
    const StartIndex index = make_index(meta, spec);
    const int n = meta.frame_count;

    std::vector<FrameVotes> frames(static_cast<std::size_t>(n));
    // Each frame gathers its own covering windows in ascending start order,
    // so the result is independent of thread scheduling.
#pragma omp parallel for schedule(static)
    for (int f = 0; f < n; ++f) {
        FrameVotes& votes = frames[static_cast<std::size_t>(f)];
        const int lo = std::max(0, f - spec.size + 1);
        int s = lo % spec.stride == 0 ? lo : lo + (spec.stride - lo % spec.stride);
        for (; s <= f && s <= index.last_regular; s += spec.stride) {
            const int pred = slots[static_cast<std::size_t>(s / spec.stride)];
            if (pred >= 0)
                votes.push_back({predictions[static_cast<std::size_t>(pred)].label,
                                 predictions[static_cast<std::size_t>(pred)].confidence});
        }
        if (index.tail >= 0 && index.tail >= lo && index.tail <= f) {
            const int pred = slots.back();
            if (pred >= 0)
                votes.push_back({predictions[static_cast<std::size_t>(pred)].label,
                                 predictions[static_cast<std::size_t>(pred)].confidence});
        }
    }
    return frames;
}

} // namespace aslgram
