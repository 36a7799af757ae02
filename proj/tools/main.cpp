#include "aslgram/error.hpp"
#include "aslgram/evaluator.hpp"
#include "aslgram/io.hpp"
#include "aslgram/pipeline.hpp"
#include "aslgram/simulator.hpp"

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace aslgram;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << content;
}

// Threshold and engine knobs shared by the subcommands, with the defaults the
// system was tuned with (0.8 confidence, 200 ms lexical, 1000 ms timing,
// windows 8/32/32 at stride 2, lookback 3).
struct EngineOptions {
    double fps = 0.0; // 0 = keep the file header value
    double conf_threshold = 0.8;
    double lexical_ms = 200.0;
    double timing_ms = 1000.0;
    int window_hands = 8;
    int window_face = 32;
    int window_head = 32;
    int stride = 2;
    int lookback = 3;
    std::string tie_break = "seeded";
    std::uint64_t seed = 0;
    std::string implicit_boundaries = "on";
    bool require_both = false;
    bool serial = false;
};

void add_engine_flags(CLI::App* cmd, EngineOptions& opt, bool with_windows) {
    cmd->add_option("--fps", opt.fps, "Override the file header frame rate");
    cmd->add_option("--conf-threshold", opt.conf_threshold,
                    "Confidence gate for pruning and error triggers");
    cmd->add_option("--lexical-ms", opt.lexical_ms, "Lexical proximity threshold in ms");
    cmd->add_option("--timing-ms", opt.timing_ms, "Timing proximity threshold in ms");
    if (with_windows) {
        cmd->add_option("--window-hands", opt.window_hands, "Hand window size in frames");
        cmd->add_option("--window-face", opt.window_face, "Face window size in frames");
        cmd->add_option("--window-head", opt.window_head, "Head window size in frames");
        cmd->add_option("--stride", opt.stride, "Window stride in frames");
    }
    cmd->add_option("--lookback", opt.lookback, "Frames of history consulted on vote ties");
    cmd->add_option("--tie-break", opt.tie_break, "Tie-break mode")
        ->check(CLI::IsMember({"seeded", "lowest"}));
    cmd->add_option("--seed", opt.seed, "Seed for tie-breaking and simulation");
    cmd->add_option("--implicit-boundaries", opt.implicit_boundaries,
                    "Treat video start/end as clause boundaries")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_flag("--require-both", opt.require_both,
                  "Lexical evidence must come from face and head");
    cmd->add_flag("--serial", opt.serial, "Run the serial reference pipeline");
}

PipelineConfig make_config(const EngineOptions& opt) {
    PipelineConfig config;
    config.windows = {WindowSpec{opt.window_hands, opt.stride},
                      WindowSpec{opt.window_face, opt.stride},
                      WindowSpec{opt.window_head, opt.stride}};
    config.voting.lookback = opt.lookback;
    config.voting.tie_break =
        opt.tie_break == "lowest" ? TieBreak::LowestLabelIndex : TieBreak::SeededRandom;
    config.voting.seed = opt.seed;
    config.prune.threshold = opt.conf_threshold;
    config.thresholds.lexical_ms = opt.lexical_ms;
    config.thresholds.timing_ms = opt.timing_ms;
    config.thresholds.evidence_confidence = opt.conf_threshold;
    config.thresholds.implicit_boundaries = opt.implicit_boundaries == "on";
    config.thresholds.require_face_and_head = opt.require_both;
    return config;
}

int cmd_detect(const std::string& input_path, const EngineOptions& opt,
               const std::string& report_path, const std::string& feedback_path,
               bool windows_overridden) {
    PredictionFile file = load_predictions(read_file(input_path));
    if (opt.fps > 0.0) file.meta.fps = opt.fps;

    PipelineConfig config = make_config(opt);
    if (!windows_overridden) config.windows = file.specs;

    const PipelineResult result =
        run_pipeline(file, config, opt.serial ? ExecMode::Serial : ExecMode::Parallel);

    const std::string report = write_report(result.errors, file.meta);
    if (report_path.empty())
        std::cout << report;
    else
        write_file(report_path, report);
    if (!feedback_path.empty())
        write_file(feedback_path, write_feedback_text(result.errors, file.meta));

    std::cerr << "detected " << result.errors.size() << " grammar error"
              << (result.errors.size() == 1 ? "" : "s") << " in " << file.meta.frame_count
              << " frames\n";
    return result.errors.empty() ? 0 : 3;
}

int cmd_simulate(const std::string& annotation_path, bool use_sample, const EngineOptions& opt,
                 double flip, const std::vector<std::string>& inject,
                 const std::string& predictions_path, const std::string& truth_path) {
    AnnotationTimeline timeline =
        use_sample ? sample_timeline() : parse_annotations(read_file(annotation_path));
    if (opt.fps > 0.0) timeline.meta.fps = opt.fps;

    const RuleThresholds thresholds = make_config(opt).thresholds;
    std::uint64_t injection_seed = opt.seed;
    for (const std::string& name : inject) {
        const auto type = parse_error_type(name);
        if (!type) raise(ErrorKind::ParseError, "unknown error type '" + name + "'");
        timeline = inject_error(timeline, *type, injection_seed++, thresholds);
    }

    NoiseModel noise;
    noise.flip_probability = {flip, flip, flip};
    noise.seed = opt.seed;
    const PipelineConfig config = make_config(opt);
    const PredictionFile file = synthesize_prediction_file(timeline, config.windows, noise);

    const std::string predictions = serialize_predictions(file);
    if (predictions_path.empty())
        std::cout << predictions;
    else
        write_file(predictions_path, predictions);
    if (!truth_path.empty()) write_file(truth_path, serialize_annotations(timeline));
    return 0;
}

int cmd_evaluate(const std::string& report_path, const std::string& annotation_path,
                 double tolerance_ms) {
    const std::vector<ReportEntry> detected = parse_report(read_file(report_path));
    const AnnotationTimeline timeline = parse_annotations(read_file(annotation_path));

    std::vector<ReportEntry> truth;
    if (const auto* tier = timeline.find_tier("errors")) {
        for (const AnnotationSpan& span : tier->spans)
            if (const auto type = parse_error_type(span.label))
                truth.push_back({*type, span.interval});
    }
    MatchConfig config;
    config.match_tolerance_ms = tolerance_ms;
    std::cout << format_evaluation(match_errors(detected, truth, timeline.meta, config));
    return 0;
}

int cmd_bench(int frames, const EngineOptions& opt, int repeats) {
    const AnnotationTimeline timeline = sample_timeline(frames);
    NoiseModel noise;
    noise.seed = opt.seed;
    const PipelineConfig config = make_config(opt);
    const PredictionFile file = synthesize_prediction_file(timeline, config.windows, noise);

    auto time_mode = [&](ExecMode mode) {
        double best_ms = 1e300;
        std::size_t errors = 0;
        for (int r = 0; r < repeats; ++r) {
            const auto begin = std::chrono::steady_clock::now();
            const PipelineResult result = run_pipeline(file, config, mode);
            const auto end = std::chrono::steady_clock::now();
            best_ms = std::min(best_ms,
                               std::chrono::duration<double, std::milli>(end - begin).count());
            errors = result.errors.size();
        }
        return std::pair{best_ms, errors};
    };

    const auto [serial_ms, serial_errors] = time_mode(ExecMode::Serial);
    const auto [parallel_ms, parallel_errors] = time_mode(ExecMode::Parallel);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    const double frames_per_sec = timeline.meta.frame_count / (parallel_ms / 1000.0);
    std::cout << "frames:        " << timeline.meta.frame_count << " @ " << timeline.meta.fps
              << " fps (" << file.records.size() << " window predictions)\n"
              << "serial:        " << serial_ms << " ms\n"
              << "parallel:      " << parallel_ms << " ms (" << threads << " threads, speedup "
              << serial_ms / parallel_ms << "x)\n"
              << "throughput:    " << static_cast<long>(frames_per_sec) << " frames/s\n"
              << "errors found:  " << parallel_errors << " (serial " << serial_errors << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grammar error detection for continuous sign language videos"};
    app.require_subcommand(1);

    EngineOptions opt;

    auto* detect = app.add_subcommand("detect", "Run the detection pipeline on a prediction file");
    std::string detect_input, report_path, feedback_path;
    detect->add_option("predictions", detect_input, "Window prediction file")->required();
    detect->add_option("--report", report_path, "Write the JSON report here (default: stdout)");
    detect->add_option("--feedback", feedback_path, "Write the student feedback text here");
    add_engine_flags(detect, opt, true);

    auto* simulate =
        app.add_subcommand("simulate", "Synthesize window predictions from an annotation file");
    std::string sim_input, sim_predictions, sim_truth;
    double flip = 0.0;
    bool use_sample = false;
    std::vector<std::string> inject;
    auto* sim_positional = simulate->add_option("annotations", sim_input, "Annotation timeline file");
    simulate->add_flag("--sample", use_sample, "Use the built-in sample passage as input");
    sim_positional->excludes("--sample");
    simulate->add_option("--predictions", sim_predictions,
                         "Write the prediction file here (default: stdout)");
    simulate->add_option("--truth", sim_truth,
                         "Write the (possibly injected) annotation file here");
    simulate->add_option("--flip", flip, "Per-window label flip probability")
        ->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--inject", inject,
                         "Inject a grammar error of this type before synthesis (repeatable)");
    add_engine_flags(simulate, opt, true);

    auto* evaluate =
        app.add_subcommand("evaluate", "Score a detection report against annotated errors");
    std::string eval_report, eval_annotations;
    double tolerance_ms = 1000.0;
    evaluate->add_option("report", eval_report, "JSON report from detect")->required();
    evaluate->add_option("annotations", eval_annotations, "Annotation file with an errors tier")
        ->required();
    evaluate->add_option("--match-tolerance-ms", tolerance_ms,
                         "Max gap between a detection and a truth span");

    auto* bench = app.add_subcommand("bench", "Time the detect pipeline on a synthetic workload");
    int frames = 1800;
    int repeats = 5;
    bench->add_option("--frames", frames, "Workload length in frames");
    bench->add_option("--repeats", repeats, "Timing repetitions (best is reported)");
    add_engine_flags(bench, opt, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (detect->parsed()) {
            const bool windows_overridden =
                detect->count("--window-hands") || detect->count("--window-face") ||
                detect->count("--window-head") || detect->count("--stride");
            return cmd_detect(detect_input, opt, report_path, feedback_path, windows_overridden);
        }
        if (simulate->parsed()) {
            if (!use_sample && sim_input.empty())
                raise(ErrorKind::ParseError, "simulate needs an annotation file or --sample");
            return cmd_simulate(sim_input, use_sample, opt, flip, inject, sim_predictions,
                                sim_truth);
        }
        if (evaluate->parsed()) return cmd_evaluate(eval_report, eval_annotations, tolerance_ms);
        if (bench->parsed()) return cmd_bench(frames, opt, repeats);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
