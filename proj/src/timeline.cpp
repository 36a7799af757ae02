#include "aslgram/timeline.hpp"

#include "aslgram/error.hpp"

#include <array>
#include <span>

namespace aslgram {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ShortVideo: return "ShortVideo";
    case ErrorKind::DuplicateWindow: return "DuplicateWindow";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyVotes: return "EmptyVotes";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OverlapError: return "OverlapError";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::ConfidenceRange: return "ConfidenceRange";
    case ErrorKind::NoEligibleInstance: return "NoEligibleInstance";
    }
    return "Error";
}

namespace {

constexpr std::array<std::string_view, 9> kGestureNames = {
    "conditional", "negative",       "ynq",             "whq",    "time",
    "pointing",    "fingerspelling", "clause_boundary", "others",
};

constexpr std::array<std::string_view, 5> kFaceNames = {
    "cond_topic_rhq", "negative", "ynq", "whq", "others",
};

constexpr std::array<std::string_view, 4> kHeadNames = {
    "shake_side_to_side", "tilt_forward", "tilt_slight_side", "others",
};

constexpr std::array<std::string_view, 3> kModalityNames = {"hands", "face", "head"};

std::span<const std::string_view> names_for(Modality m) {
    switch (m) {
    case Modality::Hands: return kGestureNames;
    case Modality::Face: return kFaceNames;
    case Modality::Head: return kHeadNames;
    }
    return {};
}

} // namespace

int label_count(Modality m) {
    return static_cast<int>(names_for(m).size());
}

ClassId others_class(Modality m) {
    return static_cast<ClassId>(label_count(m) - 1);
}

std::string_view to_string(Modality m) {
    return kModalityNames[static_cast<int>(m)];
}

std::string_view label_name(Modality m, ClassId id) {
    auto names = names_for(m);
    if (id >= names.size())
        raise(ErrorKind::UnknownLabel,
              "class id " + std::to_string(id) + " out of range for modality " +
                  std::string(to_string(m)));
    return names[id];
}

std::optional<Modality> parse_modality(std::string_view text) {
    for (int i = 0; i < kModalityCount; ++i)
        if (kModalityNames[i] == text) return static_cast<Modality>(i);
    return std::nullopt;
}

std::optional<ClassId> parse_label(Modality m, std::string_view text) {
    auto names = names_for(m);
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == text) return static_cast<ClassId>(i);
    return std::nullopt;
}

} // namespace aslgram
