#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string_view>

namespace aslgram {

// Frame count and capture rate of one video. All engine arithmetic is done
// in frames; millisecond thresholds are converted through fps on demand.
struct VideoMeta {
    int frame_count = 0;
    double fps = 30.0;

    bool valid() const { return frame_count >= 1 && fps > 0.0; }
    bool operator==(const VideoMeta&) const = default;
};

enum class Modality : std::uint8_t { Hands = 0, Face = 1, Head = 2 };
inline constexpr int kModalityCount = 3;

// Class index within one modality's taxonomy. The numeric order of each enum
// is the canonical taxonomy order used for serialization and tie-breaking.
using ClassId = std::uint8_t;

enum class GestureLabel : ClassId {
    Conditional = 0,
    Negative,
    Ynq,
    Whq,
    Time,
    Pointing,
    Fingerspelling,
    ClauseBoundary,
    Others,
};

enum class FaceLabel : ClassId {
    CondTopicRhq = 0, // merged Conditional/Topic/RHQ class
    Negative,
    Ynq,
    Whq,
    Others,
};

enum class HeadLabel : ClassId {
    ShakeSideToSide = 0,
    TiltForward,
    TiltSlightSide,
    Others,
};

constexpr ClassId class_id(GestureLabel l) { return static_cast<ClassId>(l); }
constexpr ClassId class_id(FaceLabel l) { return static_cast<ClassId>(l); }
constexpr ClassId class_id(HeadLabel l) { return static_cast<ClassId>(l); }

int label_count(Modality m);
ClassId others_class(Modality m);

std::string_view to_string(Modality m);
std::string_view label_name(Modality m, ClassId id);
std::optional<Modality> parse_modality(std::string_view text);
std::optional<ClassId> parse_label(Modality m, std::string_view text);

// Closed frame range [start, end], both inclusive.
struct Interval {
    int start = 0;
    int end = 0;

    int length() const { return end - start + 1; }
    bool contains(const Interval& other) const {
        return start <= other.start && other.end <= end;
    }
    bool operator==(const Interval&) const = default;
};

// Frames strictly separating two intervals; 0 when they overlap or touch.
// Adjacent intervals such as [0,4] and [5,9] have gap 1.
inline int interval_gap(const Interval& a, const Interval& b) {
    return std::max(0, std::max(a.start, b.start) - std::min(a.end, b.end));
}

inline double frames_to_ms(int frames, const VideoMeta& meta) {
    return static_cast<double>(frames) * 1000.0 / meta.fps;
}

} // namespace aslgram
