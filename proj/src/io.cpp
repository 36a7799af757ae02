#include "aslgram/io.hpp"

#include "aslgram/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <tuple>

namespace aslgram {

namespace {

constexpr std::array<std::string_view, 7> kKnownTiers = {
    "clause",           "wanted_words",   "facial_expressions", "fingerspelling",
    "lexical_pointing", "head_movements", "errors",
};

// Allowed label spellings per known tier. The facial_expressions tier accepts
// the pre-merge subclass names alongside the merged class.
const std::set<std::string_view>* allowed_labels(std::string_view tier) {
    static const std::set<std::string_view> clause = {"clause_boundary"};
    static const std::set<std::string_view> wanted = {
        "conditional", "negative", "ynq", "whq", "time", "pointing", "fingerspelling"};
    static const std::set<std::string_view> face = {
        "conditional", "topic", "rhq", "cond_topic_rhq", "negative", "ynq", "whq"};
    static const std::set<std::string_view> fingerspelling = {"fingerspelling"};
    static const std::set<std::string_view> pointing = {"pointing"};
    static const std::set<std::string_view> head = {"shake_side_to_side", "tilt_forward",
                                                    "tilt_slight_side"};
    static const std::set<std::string_view> errors = {
        "whq_lexical",   "ynq_lexical", "neg_lexical",    "cond_lexical",
        "ynq_beginning", "ynq_end",     "cond_beginning", "topic_beginning"};

    if (tier == "clause") return &clause;
    if (tier == "wanted_words") return &wanted;
    if (tier == "facial_expressions") return &face;
    if (tier == "fingerspelling") return &fingerspelling;
    if (tier == "lexical_pointing") return &pointing;
    if (tier == "head_movements") return &head;
    if (tier == "errors") return &errors;
    return nullptr; // unknown tier: any label
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    raise(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

int parse_int(std::string_view token, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        parse_fail(line, std::string("expected integer ") + what + ", got '" +
                             std::string(token) + "'");
    return value;
}

double parse_double(std::string_view token, int line, const char* what) {
    std::string buf(token);
    char* end = nullptr;
    const double value = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || buf.empty())
        parse_fail(line, std::string("expected number ") + what + ", got '" + buf + "'");
    return value;
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double v) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_number = 0;

    // Next non-empty line with comments stripped; false at end of input.
    bool next(std::vector<std::string_view>& tokens, int& line_out) {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_number;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            tokens = tokenize(line);
            if (!tokens.empty()) {
                line_out = line_number;
                return true;
            }
        }
        return false;
    }
};

VideoMeta parse_header(const std::vector<std::string_view>& tokens, int line) {
    if (tokens.size() != 3 || tokens[0] != "video")
        parse_fail(line, "expected header 'video <frame_count> <fps>'");
    VideoMeta meta;
    meta.frame_count = parse_int(tokens[1], line, "frame count");
    meta.fps = parse_double(tokens[2], line, "fps");
    if (meta.frame_count < 1) parse_fail(line, "frame count must be at least 1");
    if (!(meta.fps > 0.0)) parse_fail(line, "fps must be positive");
    return meta;
}

Interval parse_interval(std::string_view start_tok, std::string_view end_tok, int line,
                        const VideoMeta& meta) {
    Interval iv{parse_int(start_tok, line, "start frame"), parse_int(end_tok, line, "end frame")};
    if (iv.start < 0 || iv.end < iv.start || iv.end >= meta.frame_count)
        parse_fail(line, "interval [" + std::to_string(iv.start) + "," + std::to_string(iv.end) +
                             "] is not within 0.." + std::to_string(meta.frame_count - 1));
    return iv;
}

} // namespace

std::span<const std::string_view> known_tier_names() {
    return kKnownTiers;
}

const AnnotationTier* AnnotationTimeline::find_tier(std::string_view name) const {
    for (const AnnotationTier& tier : tiers)
        if (tier.name == name) return &tier;
    return nullptr;
}

std::vector<AnnotationSpan>& AnnotationTimeline::tier_spans(std::string_view name) {
    for (AnnotationTier& tier : tiers)
        if (tier.name == name) return tier.spans;
    tiers.push_back({std::string(name), {}});
    return tiers.back().spans;
}

AnnotationTimeline parse_annotations(std::string_view text) {
    LineReader reader{text};
    std::vector<std::string_view> tokens;
    int line = 0;

    if (!reader.next(tokens, line)) raise(ErrorKind::ParseError, "empty document");
    AnnotationTimeline timeline;
    timeline.meta = parse_header(tokens, line);

    while (reader.next(tokens, line)) {
        if (tokens.size() != 4)
            parse_fail(line, "expected '<tier> <label> <start_frame> <end_frame>'");
        const std::string tier(tokens[0]);
        const std::string label(tokens[1]);
        if (const auto* allowed = allowed_labels(tier); allowed && !allowed->count(label))
            raise(ErrorKind::UnknownLabel,
                  "line " + std::to_string(line) + ": label '" + label +
                      "' is not valid on tier '" + tier + "'");
        timeline.tier_spans(tier).push_back(
            {label, parse_interval(tokens[2], tokens[3], line, timeline.meta)});
    }

    for (AnnotationTier& tier : timeline.tiers) {
        std::sort(tier.spans.begin(), tier.spans.end(),
                  [](const AnnotationSpan& a, const AnnotationSpan& b) {
                      return std::tie(a.interval.start, a.interval.end) <
                             std::tie(b.interval.start, b.interval.end);
                  });
        for (std::size_t i = 1; i < tier.spans.size(); ++i)
            if (tier.spans[i].interval.start <= tier.spans[i - 1].interval.end)
                raise(ErrorKind::OverlapError, "tier '" + tier.name + "' has overlapping spans [" +
                                                   std::to_string(tier.spans[i - 1].interval.start) +
                                                   "," +
                                                   std::to_string(tier.spans[i - 1].interval.end) +
                                                   "] and [" +
                                                   std::to_string(tier.spans[i].interval.start) +
                                                   "," +
                                                   std::to_string(tier.spans[i].interval.end) +
                                                   "]");
    }
    return timeline;
}

std::string serialize_annotations(const AnnotationTimeline& timeline) {
    std::ostringstream out;
    out << "video " << timeline.meta.frame_count << ' ' << format_double(timeline.meta.fps)
        << '\n';
    for (const AnnotationTier& tier : timeline.tiers)
        for (const AnnotationSpan& span : tier.spans)
            out << tier.name << ' ' << span.label << ' ' << span.interval.start << ' '
                << span.interval.end << '\n';
    return out.str();
}

PredictionFile load_predictions(std::string_view text) {
    LineReader reader{text};
    std::vector<std::string_view> tokens;
    int line = 0;

    if (!reader.next(tokens, line)) raise(ErrorKind::ParseError, "empty document");
    PredictionFile file;
    file.meta = parse_header(tokens, line);

    std::set<std::pair<int, int>> seen; // (modality, start)
    while (reader.next(tokens, line)) {
        if (tokens[0] == "window") {
            if (tokens.size() != 4)
                parse_fail(line, "expected 'window <modality> <size> <stride>'");
            const auto modality = parse_modality(tokens[1]);
            if (!modality) parse_fail(line, "unknown modality '" + std::string(tokens[1]) + "'");
            WindowSpec spec{parse_int(tokens[2], line, "window size"),
                            parse_int(tokens[3], line, "stride")};
            if (spec.size < 1 || spec.stride < 1)
                parse_fail(line, "window size and stride must be at least 1");
            file.specs[static_cast<int>(*modality)] = spec;
            continue;
        }

        if (tokens.size() != 4)
            parse_fail(line, "expected '<modality> <window_start> <label> <confidence>'");
        const auto modality = parse_modality(tokens[0]);
        if (!modality) parse_fail(line, "unknown modality '" + std::string(tokens[0]) + "'");
        const int start = parse_int(tokens[1], line, "window start");
        if (start < 0) parse_fail(line, "window start must be non-negative");
        const auto label = parse_label(*modality, tokens[2]);
        if (!label)
            raise(ErrorKind::UnknownLabel,
                  "line " + std::to_string(line) + ": label '" + std::string(tokens[2]) +
                      "' is not in the " + std::string(to_string(*modality)) + " taxonomy");
        const double confidence = parse_double(tokens[3], line, "confidence");
        if (!(confidence >= 0.0 && confidence <= 1.0))
            raise(ErrorKind::ConfidenceRange,
                  "line " + std::to_string(line) + ": confidence " + format_double(confidence) +
                      " is outside [0,1]");
        if (!seen.emplace(static_cast<int>(*modality), start).second)
            raise(ErrorKind::DuplicateWindow,
                  "line " + std::to_string(line) + ": second prediction for " +
                      std::string(to_string(*modality)) + " window at start " +
                      std::to_string(start));
        file.records.push_back({*modality, start, *label, confidence});
    }

    std::sort(file.records.begin(), file.records.end(),
              [](const WindowPrediction& a, const WindowPrediction& b) {
                  return std::tie(a.modality, a.start) < std::tie(b.modality, b.start);
              });
    return file;
}

std::string serialize_predictions(const PredictionFile& file) {
    std::ostringstream out;
    out << "video " << file.meta.frame_count << ' ' << format_double(file.meta.fps) << '\n';
    for (int m = 0; m < kModalityCount; ++m)
        out << "window " << to_string(static_cast<Modality>(m)) << ' ' << file.specs[m].size
            << ' ' << file.specs[m].stride << '\n';

    std::vector<WindowPrediction> records(file.records.begin(), file.records.end());
    std::sort(records.begin(), records.end(),
              [](const WindowPrediction& a, const WindowPrediction& b) {
                  return std::tie(a.modality, a.start) < std::tie(b.modality, b.start);
              });
    for (const WindowPrediction& p : records)
        out << to_string(p.modality) << ' ' << p.start << ' ' << label_name(p.modality, p.label)
            << ' ' << format_double(p.confidence) << '\n';
    return out.str();
}

std::string write_report(std::span<const DetectedError> errors, const VideoMeta& meta) {
    nlohmann::ordered_json doc;
    doc["video"] = {{"frame_count", meta.frame_count}, {"fps", meta.fps}};

    nlohmann::ordered_json summary;
    std::array<int, kErrorTypeCount> counts{};
    for (const DetectedError& e : errors) ++counts[static_cast<int>(e.type)];
    for (int i = 0; i < kErrorTypeCount; ++i)
        summary[std::string(to_string(static_cast<ErrorType>(i)))] = counts[i];
    summary["total"] = static_cast<int>(errors.size());
    doc["summary"] = summary;

    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const DetectedError& e : errors) {
        nlohmann::ordered_json entry;
        entry["type"] = std::string(to_string(e.type));
        entry["start_frame"] = e.interval.start;
        entry["end_frame"] = e.interval.end;
        entry["start_ms"] = std::lround(frames_to_ms(e.interval.start, meta));
        entry["end_ms"] = std::lround(frames_to_ms(e.interval.end, meta));
        entry["trigger_label"] =
            std::string(label_name(e.trigger_segment.modality, e.trigger_segment.label));
        entry["confidence"] = e.trigger_segment.peak_confidence;
        entry["message"] = e.message;
        entries.push_back(std::move(entry));
    }
    doc["errors"] = std::move(entries);
    return doc.dump(2) + "\n";
}

std::vector<ReportEntry> parse_report(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::ParseError, std::string("report is not valid JSON: ") + e.what());
    }
    std::vector<ReportEntry> entries;
    try {
        for (const auto& entry : doc.at("errors")) {
            const auto type = parse_error_type(entry.at("type").get<std::string>());
            if (!type)
                raise(ErrorKind::UnknownLabel,
                      "unknown error type '" + entry.at("type").get<std::string>() + "'");
            entries.push_back(
                {*type, {entry.at("start_frame").get<int>(), entry.at("end_frame").get<int>()}});
        }
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::ParseError, std::string("report is missing fields: ") + e.what());
    }
    return entries;
}

namespace {

std::string timestamp(long ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%02ld:%02ld.%ld", ms / 60000, ms / 1000 % 60, ms / 100 % 10);
    return buf;
}

std::string_view hint_for(ErrorType type) {
    switch (type) {
    case ErrorType::WhqLexical:
        return "WH-question signs need furrowed brows with the head tilted forward.";
    case ErrorType::YnqLexical:
        return "yes-no question signs need raised brows with the head tilted forward.";
    case ErrorType::NegLexical:
        return "negative signs need furrowed brows and a scrunched nose with the head shaking "
               "side to side.";
    case ErrorType::CondLexical:
        return "conditional signs need raised brows with the head tilted slightly to the side.";
    case ErrorType::YnqBeginning:
        return "start the yes-no question expression as the question clause starts.";
    case ErrorType::YnqEnd:
        return "hold the yes-no question expression until the question clause ends.";
    case ErrorType::CondBeginning:
        return "start the conditional expression as the conditional clause starts.";
    case ErrorType::TopicBeginning:
        return "mark the topic right at the start of its clause.";
    }
    return "";
}

} // namespace

std::string write_feedback_text(std::span<const DetectedError> errors, const VideoMeta& meta) {
    std::ostringstream out;
    if (errors.empty()) {
        out << "No grammar errors detected. Nice signing!\n";
        return out.str();
    }
    out << "Found " << errors.size() << (errors.size() == 1 ? " possible grammar error.\n"
                                                            : " possible grammar errors.\n");
    int index = 0;
    for (const DetectedError& e : errors) {
        const long start = std::lround(frames_to_ms(e.interval.start, meta));
        const long end = std::lround(frames_to_ms(e.interval.end, meta));
        out << '\n'
            << ++index << ") [" << timestamp(start) << " - " << timestamp(end) << "] "
            << e.message << ".\nTip: " << hint_for(e.type) << '\n';
    }
    return out.str();
}

} // namespace aslgram
