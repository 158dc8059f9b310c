#include "intake/archspec.hpp"
#include "intake/csv.hpp"
#include "intake/detector.hpp"
#include "intake/errors.hpp"
#include "intake/evaluation.hpp"
#include "intake/log.hpp"
#include "intake/svg.hpp"
#include "intake/synth.hpp"
#include "intake/timeline.hpp"
#include "intake/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::string> g_argv;

// Every run leaves a manifest sufficient to reproduce it: the exact argv,
// tool version, inputs and outputs.
json run_manifest(const std::string& command) {
    json manifest;
    manifest["command"] = command;
    manifest["version"] = intake::kVersion;
    manifest["argv"] = g_argv;
    return manifest;
}

void write_manifest_for(const fs::path& out_path, json manifest) {
    manifest["outputs"] = {out_path.string()};
    const fs::path manifest_path = out_path.string() + ".manifest.json";
    intake::csv::write_file_atomic(manifest_path, manifest.dump(2) + "\n");
}

std::int64_t frames_needed(std::span<const intake::AnnotationInterval> intervals, double fps) {
    std::int64_t n = 1;
    for (const auto& interval : intervals) {
        n = std::max(n, intake::last_frame_at_or_before(interval.end_s, fps) + 1);
    }
    return n;
}

std::vector<intake::FrameEvent> events_for(std::span<const intake::AnnotationInterval> intervals,
                                           double fps,
                                           std::int64_t min_frames) {
    if (intervals.empty()) {
        return {};
    }
    const std::int64_t n = std::max(min_frames, frames_needed(intervals, fps));
    return intake::events_from_annotations(intervals, fps, n);
}

json metrics_json(const intake::EvalCounts& counts, const intake::Metrics& metrics) {
    json out;
    out["tp"] = counts.tp;
    out["fp1"] = counts.fp1;
    out["fp2"] = counts.fp2;
    out["fn"] = counts.fn;
    out["precision"] = metrics.precision;
    out["recall"] = metrics.recall;
    out["f1"] = metrics.f1;
    return out;
}

struct LabelArgs {
    std::string annotations;
    std::string out;
    double fps = 8.0;
    std::int64_t frames = 0;
    double duration = 0.0;
    std::int64_t downsample = 1;
};

void cmd_label(const LabelArgs& args) {
    const auto intervals = intake::csv::read_annotations(args.annotations);
    std::int64_t n_frames = args.frames;
    if (n_frames == 0) {
        if (!(args.duration > 0.0)) {
            throw intake::ValidationError("label: provide --frames or --duration");
        }
        n_frames = static_cast<std::int64_t>(args.duration * args.fps);
    }
    auto labels = intake::labels_from_annotations(intervals, args.fps, n_frames);
    if (args.downsample != 1) {
        labels = intake::downsample_labels(labels, args.downsample);
    }
    intake::csv::write_file_atomic(args.out, intake::csv::format_labels(labels));

    json manifest = run_manifest("label");
    manifest["inputs"] = {args.annotations};
    manifest["params"] = {{"fps", args.fps},
                          {"n_frames", n_frames},
                          {"downsample", args.downsample}};
    write_manifest_for(args.out, manifest);
    intake::log::info("wrote " + args.out);
}

struct DetectArgs {
    std::string probs;
    std::string out;
    double threshold = 0.5;
    double min_dist = 2.0;
    double fps = 8.0;
};

void cmd_detect(const DetectArgs& args) {
    const auto series = intake::csv::read_probs(args.probs, args.fps);
    const auto detections = intake::detect(series, {args.threshold, args.min_dist});
    intake::csv::write_file_atomic(args.out, intake::csv::format_detections(detections));

    json manifest = run_manifest("detect");
    manifest["inputs"] = {args.probs};
    manifest["params"] = {{"threshold", args.threshold},
                          {"min_dist_s", args.min_dist},
                          {"fps", args.fps}};
    write_manifest_for(args.out, manifest);
    std::cout << detections.frames.size() << " detections\n";
}

struct TuneArgs {
    std::string probs_dir;
    std::string annotations_dir;
    std::string out;
    double grid_lo = 0.5;
    double grid_hi = 1.0;
    double grid_step = 0.001;
    double min_dist = 2.0;
    double fps = 8.0;
};

bool ends_with(const std::string& text, const std::string& suffix) {
    return text.size() > suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string session_stem(const fs::path& name) {
    std::string stem = name.filename().string();
    for (const char* suffix : {".probs.csv", ".annotations.csv", ".csv"}) {
        if (ends_with(stem, suffix)) {
            return stem.substr(0, stem.size() - std::string(suffix).size());
        }
    }
    return stem;
}

// Prefer files carrying the role suffix so probability and annotation files
// can share one directory; fall back to bare *.csv layouts.
std::map<std::string, fs::path> scan_sessions(const fs::path& dir, const std::string& want,
                                              const std::string& reject) {
    std::map<std::string, fs::path> tagged;
    std::map<std::string, fs::path> plain;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (entry.path().extension() != ".csv") {
            continue;
        }
        if (ends_with(name, want)) {
            tagged[session_stem(entry.path())] = entry.path();
        } else if (!ends_with(name, reject)) {
            plain[session_stem(entry.path())] = entry.path();
        }
    }
    return tagged.empty() ? plain : tagged;
}

void cmd_tune(const TuneArgs& args) {
    const auto probs_files = scan_sessions(args.probs_dir, ".probs.csv", ".annotations.csv");
    const auto annotation_files =
        scan_sessions(args.annotations_dir, ".annotations.csv", ".probs.csv");
    std::vector<std::string> unmatched;
    for (const auto& [stem, path] : probs_files) {
        if (annotation_files.find(stem) == annotation_files.end()) {
            unmatched.push_back(stem);
        }
    }
    for (const auto& [stem, path] : annotation_files) {
        if (probs_files.find(stem) == probs_files.end()) {
            unmatched.push_back(stem);
        }
    }
    if (probs_files.empty()) {
        throw intake::ValidationError("tune: no probability files in " + args.probs_dir);
    }
    if (!unmatched.empty()) {
        std::sort(unmatched.begin(), unmatched.end());
        std::string message = "tune: unmatched session stems:";
        for (const auto& stem : unmatched) {
            message += ' ' + stem;
        }
        throw intake::ValidationError(message);
    }

    std::vector<intake::LabeledSeries> sessions;
    for (const auto& [stem, path] : probs_files) {
        intake::LabeledSeries session;
        session.probs = intake::csv::read_probs(path, args.fps);
        const auto intervals = intake::csv::read_annotations(annotation_files.at(stem));
        const std::int64_t min_frames =
            session.probs.start_frame + static_cast<std::int64_t>(session.probs.probs.size());
        session.events = events_for(intervals, args.fps, min_frames);
        sessions.push_back(std::move(session));
    }

    const intake::GridSpec grid{args.grid_lo, args.grid_hi, args.grid_step};
    const auto result = intake::tune_threshold(sessions, grid, args.min_dist);

    intake::EvalCounts counts;
    for (const auto& session : sessions) {
        counts += intake::evaluate_detections(
            intake::detect(session.probs, {result.threshold, args.min_dist}), session.events);
    }
    const auto metrics = intake::compute_metrics(counts);

    std::printf("p_t=%.6f f1=%.6f\n", result.threshold, result.f1);
    json report = metrics_json(counts, metrics);
    report["threshold"] = result.threshold;
    report["grid"] = {{"lo", args.grid_lo}, {"hi", args.grid_hi}, {"step", args.grid_step}};
    report["sessions"] = probs_files.size();
    report["run"] = run_manifest("tune");
    if (!args.out.empty()) {
        intake::csv::write_file_atomic(args.out, report.dump(2) + "\n");
    } else {
        std::cout << report.dump(2) << '\n';
    }
}

struct EvalArgs {
    std::string detections;
    std::string annotations;
    std::string pred_labels;
    std::string truth_labels;
    std::string out;
    double fps = 8.0;
};

void cmd_eval(const EvalArgs& args) {
    const auto detections = intake::csv::read_detections(args.detections, args.fps);
    const auto intervals = intake::csv::read_annotations(args.annotations);
    const std::int64_t min_frames =
        detections.frames.empty() ? 1 : detections.frames.back() + 1;
    const auto events = events_for(intervals, args.fps, min_frames);
    const auto counts = intake::evaluate_detections(detections, events);
    const auto metrics = intake::compute_metrics(counts);

    std::printf("tp=%lld fp1=%lld fp2=%lld fn=%lld\n", static_cast<long long>(counts.tp),
                static_cast<long long>(counts.fp1), static_cast<long long>(counts.fp2),
                static_cast<long long>(counts.fn));
    std::printf("precision=%.6f recall=%.6f f1=%.6f\n", metrics.precision, metrics.recall,
                metrics.f1);

    json report = metrics_json(counts, metrics);
    if (!args.pred_labels.empty() || !args.truth_labels.empty()) {
        if (args.pred_labels.empty() || args.truth_labels.empty()) {
            throw intake::ValidationError(
                "eval: --pred-labels and --truth-labels must be given together");
        }
        const auto predicted = intake::csv::read_labels(args.pred_labels, args.fps);
        const auto truth = intake::csv::read_labels(args.truth_labels, args.fps);
        const double recall_avg = intake::uar(predicted, truth);
        std::printf("uar=%.6f\n", recall_avg);
        report["uar"] = recall_avg;
    }
    report["run"] = run_manifest("eval");
    if (!args.out.empty()) {
        intake::csv::write_file_atomic(args.out, report.dump(2) + "\n");
    } else {
        std::cout << report.dump(2) << '\n';
    }
}

struct ParamsArgs {
    std::string arch;
    std::string json_out;
};

void cmd_params(const ParamsArgs& args) {
    const auto spec = intake::builtin_arch(args.arch);
    const auto reports = intake::analyze_arch(spec);
    const std::int64_t total = intake::count_params(spec);

    std::printf("%-14s %-12s %-28s %-16s %12s\n", "layer", "pathway", "kernel", "output",
                "params");
    for (const auto& row : reports) {
        std::printf("%-14s %-12s %-28s %-16s %12lld\n", row.layer.c_str(), row.pathway.c_str(),
                    row.kernel.c_str(), intake::to_string(row.output).c_str(),
                    static_cast<long long>(row.params));
    }
    const double rel_error =
        (static_cast<double>(total) - static_cast<double>(spec.reference_params)) /
        static_cast<double>(spec.reference_params);
    std::printf("total: %lld\n", static_cast<long long>(total));
    std::printf("reference: %lld (%.2fM), relative error %+.2f%%\n",
                static_cast<long long>(spec.reference_params),
                static_cast<double>(spec.reference_params) / 1e6, 100.0 * rel_error);

    if (!args.json_out.empty()) {
        json out;
        out["arch"] = spec.name;
        out["layers"] = json::array();
        for (const auto& row : reports) {
            out["layers"].push_back({{"layer", row.layer},
                                     {"pathway", row.pathway},
                                     {"kernel", row.kernel},
                                     {"output", intake::to_string(row.output)},
                                     {"params", row.params}});
        }
        out["total_params"] = total;
        out["reference_params"] = spec.reference_params;
        out["relative_error"] = rel_error;
        out["run"] = run_manifest("params");
        intake::csv::write_file_atomic(args.json_out, out.dump(2) + "\n");
    }
}

struct SimulateArgs {
    std::string out_dir;
    std::int64_t sessions = 1;
    std::uint64_t seed = 0;
    intake::SessionConfig config;
};

void cmd_simulate(const SimulateArgs& args) {
    if (args.sessions < 1) {
        throw intake::ValidationError("simulate: need at least one session");
    }
    const auto dataset = intake::generate_dataset(args.sessions, args.seed, args.config);
    fs::create_directories(args.out_dir);

    json manifest = run_manifest("simulate");
    manifest["config"] = {{"duration_s", args.config.duration_s},
                          {"gesture_mean_s", args.config.gesture_mean_s},
                          {"gesture_std_s", args.config.gesture_std_s},
                          {"mean_gap_s", args.config.mean_gap_s},
                          {"min_gap_s", args.config.min_gap_s},
                          {"noise_std", args.config.noise_std},
                          {"fps", args.config.fps}};
    manifest["base_seed"] = args.seed;
    manifest["sessions"] = json::array();

    for (std::size_t k = 0; k < dataset.size(); ++k) {
        char stem[32];
        std::snprintf(stem, sizeof(stem), "session_%03zu", k);
        const fs::path annotations = fs::path(args.out_dir) / (std::string(stem) + ".annotations.csv");
        const fs::path probs = fs::path(args.out_dir) / (std::string(stem) + ".probs.csv");
        intake::csv::write_file_atomic(annotations,
                                       intake::csv::format_annotations(dataset[k].events));
        intake::csv::write_file_atomic(probs, intake::csv::format_probs(dataset[k].probs));
        manifest["sessions"].push_back({{"stem", stem},
                                        {"seed", args.seed + k},
                                        {"events", dataset[k].events.size()},
                                        {"annotations", annotations.string()},
                                        {"probs", probs.string()}});
    }
    intake::csv::write_file_atomic(fs::path(args.out_dir) / "manifest.json",
                                   manifest.dump(2) + "\n");
    std::cout << dataset.size() << " sessions written to " << args.out_dir << '\n';
}

struct ReportArgs {
    std::string probs;
    std::string detections;
    std::string annotations;
    std::string out;
    double fps = 8.0;
    double threshold = -1.0;
};

void cmd_report(const ReportArgs& args) {
    const auto series = intake::csv::read_probs(args.probs, args.fps);
    const auto detections = intake::csv::read_detections(args.detections, args.fps);
    const auto intervals = intake::csv::read_annotations(args.annotations);
    const std::int64_t min_frames =
        series.start_frame + static_cast<std::int64_t>(series.probs.size());
    const auto events = events_for(intervals, args.fps, min_frames);

    std::optional<double> threshold;
    if (args.threshold >= 0.0) {
        threshold = args.threshold;
    }
    const std::string svg = intake::render_report_svg(series, detections, events, threshold);
    intake::csv::write_file_atomic(args.out, svg);

    json manifest = run_manifest("report");
    manifest["inputs"] = {args.probs, args.detections, args.annotations};
    manifest["params"] = {{"fps", args.fps}};
    write_manifest_for(args.out, manifest);
    intake::log::info("wrote " + args.out);
}

} // namespace

int main(int argc, char** argv) {
    g_argv.assign(argv, argv + argc);

    CLI::App app{"Intake gesture detection toolkit: frame labeling, sparse event detection, "
                 "evaluation, architecture bookkeeping and synthetic sessions."};
    app.set_version_flag("--version", intake::kVersion);
    app.require_subcommand(1);

    LabelArgs label_args;
    auto* label = app.add_subcommand("label", "Derive per-frame labels from annotations");
    label->add_option("annotations", label_args.annotations, "annotation CSV")->required();
    label->add_option("--fps", label_args.fps, "frames per second")->capture_default_str();
    label->add_option("--frames", label_args.frames, "number of frames to label");
    label->add_option("--duration", label_args.duration, "session duration in seconds");
    label->add_option("--downsample", label_args.downsample, "keep every k-th frame")
        ->capture_default_str();
    label->add_option("--out", label_args.out, "label CSV to write")->required();
    label->callback([&] { cmd_label(label_args); });

    DetectArgs detect_args;
    auto* detect = app.add_subcommand("detect", "Detect gesture times from probabilities");
    detect->add_option("probs", detect_args.probs, "probability CSV")->required();
    detect->add_option("--threshold", detect_args.threshold, "detection threshold p_t")
        ->required();
    detect->add_option("--min-dist", detect_args.min_dist, "minimum distance in seconds")
        ->capture_default_str();
    detect->add_option("--fps", detect_args.fps, "frames per second")->capture_default_str();
    detect->add_option("--out", detect_args.out, "detection CSV to write")->required();
    detect->callback([&] { cmd_detect(detect_args); });

    TuneArgs tune_args;
    auto* tune = app.add_subcommand("tune", "Grid-search the detection threshold");
    tune->add_option("--probs-dir", tune_args.probs_dir, "directory of probability CSVs")
        ->required();
    tune->add_option("--annotations-dir", tune_args.annotations_dir,
                     "directory of annotation CSVs")
        ->required();
    tune->add_option("--grid-lo", tune_args.grid_lo)->capture_default_str();
    tune->add_option("--grid-hi", tune_args.grid_hi)->capture_default_str();
    tune->add_option("--grid-step", tune_args.grid_step)->capture_default_str();
    tune->add_option("--min-dist", tune_args.min_dist)->capture_default_str();
    tune->add_option("--fps", tune_args.fps)->capture_default_str();
    tune->add_option("--out", tune_args.out, "report JSON to write");
    tune->callback([&] { cmd_tune(tune_args); });

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Score detections against annotations");
    eval->add_option("detections", eval_args.detections, "detection CSV")->required();
    eval->add_option("annotations", eval_args.annotations, "annotation CSV")->required();
    eval->add_option("--fps", eval_args.fps)->capture_default_str();
    eval->add_option("--pred-labels", eval_args.pred_labels,
                     "predicted label CSV, adds frame-level UAR");
    eval->add_option("--truth-labels", eval_args.truth_labels,
                     "ground-truth label CSV, adds frame-level UAR");
    eval->add_option("--out", eval_args.out, "report JSON to write");
    eval->callback([&] { cmd_eval(eval_args); });

    ParamsArgs params_args;
    auto* params = app.add_subcommand("params", "Layer table and parameter count of a model");
    params->add_option("arch", params_args.arch, "architecture name")->required();
    params->add_option("--json", params_args.json_out, "JSON report to write");
    params->callback([&] { cmd_params(params_args); });

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Generate synthetic sessions");
    simulate->add_option("--sessions", sim_args.sessions, "number of sessions")
        ->capture_default_str();
    simulate->add_option("--seed", sim_args.seed, "base seed")->capture_default_str();
    simulate->add_option("--out", sim_args.out_dir, "output directory")->required();
    simulate->add_option("--duration", sim_args.config.duration_s)->capture_default_str();
    simulate->add_option("--gesture-mean", sim_args.config.gesture_mean_s)
        ->capture_default_str();
    simulate->add_option("--gesture-std", sim_args.config.gesture_std_s)->capture_default_str();
    simulate->add_option("--mean-gap", sim_args.config.mean_gap_s)->capture_default_str();
    simulate->add_option("--min-gap", sim_args.config.min_gap_s)->capture_default_str();
    simulate->add_option("--noise-std", sim_args.config.noise_std)->capture_default_str();
    simulate->add_option("--fps", sim_args.config.fps)->capture_default_str();
    simulate->callback([&] { cmd_simulate(sim_args); });

    ReportArgs report_args;
    auto* report = app.add_subcommand("report", "Render an SVG timeline report");
    report->add_option("--probs", report_args.probs, "probability CSV")->required();
    report->add_option("--detections", report_args.detections, "detection CSV")->required();
    report->add_option("--annotations", report_args.annotations, "annotation CSV")->required();
    report->add_option("--threshold", report_args.threshold, "threshold rule to draw");
    report->add_option("--fps", report_args.fps)->capture_default_str();
    report->add_option("--out", report_args.out, "SVG to write")->required();
    report->callback([&] { cmd_report(report_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const intake::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
