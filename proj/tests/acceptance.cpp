// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own runtime budget.

#include "intake/archspec.hpp"
#include "intake/csv.hpp"
#include "intake/detector.hpp"
#include "intake/evaluation.hpp"
#include "intake/rng.hpp"
#include "intake/synth.hpp"
#include "intake/timeline.hpp"

#include "oracles.hpp"
#include "table_fixture.hpp"
#include "testing_helpers.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace intake;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void run_criterion(int number, const std::string& name, double time_limit_s,
                   const std::function<Outcome()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = fn();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > time_limit_s) {
        outcome.pass = false;
        outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!outcome.pass) {
        ++g_failures;
    }
    std::printf("[%s] criterion %d: %s (%s) [%.2f s]\n", outcome.pass ? "PASS" : "FAIL", number,
                name.c_str(), outcome.detail.c_str(), elapsed);
    std::fflush(stdout);
}

// --- criterion 1: F1 from published count rows, +-0.001 ---------------------

Outcome metric_reproduction() {
    struct Row {
        std::int64_t tp, fp1, fp2, fn;
        double f1;
    };
    const std::vector<Row> rows = {
        {670, 39, 287, 321, 0.674}, {662, 45, 1023, 329, 0.487}, {829, 54, 211, 162, 0.795},
        {661, 53, 1163, 330, 0.461}, {795, 37, 169, 196, 0.798}, {674, 17, 104, 317, 0.755},
        {653, 36, 185, 338, 0.700}, {754, 31, 103, 237, 0.803},  {775, 25, 54, 216, 0.840},
        {791, 29, 38, 200, 0.856},  {806, 49, 82, 185, 0.836},   {824, 23, 83, 167, 0.858},
    };
    int good = 0;
    for (const auto& row : rows) {
        const auto metrics = compute_metrics({row.tp, row.fp1, row.fp2, row.fn});
        if (std::abs(metrics.f1 - row.f1) <= 0.001) {
            ++good;
        }
    }
    std::ostringstream detail;
    detail << good << "/" << rows.size() << " rows within +-0.001";
    return {good == static_cast<int>(rows.size()), detail.str()};
}

// --- criterion 2: parameter counts vs published values ----------------------

Outcome parameter_reproduction() {
    struct Target {
        const char* name;
        double reference;
        double tolerance;
    };
    const std::vector<Target> targets = {
        {"small_2d_cnn_frame", 4.26e6, 0.01},   {"small_2d_cnn_flow", 4.26e6, 0.01},
        {"small_3d_cnn", 4.39e6, 0.01},         {"small_cnn_lstm", 4.85e6, 0.01},
        {"small_two_stream", 4.34e6, 0.01},     {"small_slowfast", 4.49e6, 0.03},
        {"resnet50_2d_cnn_frame", 23.5e6, 0.03}, {"resnet50_2d_cnn_flow", 23.5e6, 0.03},
        {"resnet50_3d_cnn", 32.2e6, 0.03},      {"resnet50_cnn_lstm", 24.6e6, 0.03},
        {"resnet50_two_stream", 47.0e6, 0.03},  {"resnet50_slowfast", 36.7e6, 0.03},
    };
    int good = 0;
    std::ostringstream detail;
    for (const auto& target : targets) {
        const auto count = static_cast<double>(count_params(builtin_arch(target.name)));
        const double rel = std::abs(count - target.reference) / target.reference;
        if (rel <= target.tolerance) {
            ++good;
        } else {
            detail << target.name << " off by " << rel * 100.0 << "%; ";
        }
    }
    detail << good << "/" << targets.size() << " models within tolerance";
    return {good == static_cast<int>(targets.size()), detail.str()};
}

// --- criterion 3: every printed output-size cell ----------------------------

Outcome shape_reproduction() {
    std::size_t cells = 0;
    std::vector<std::string> mismatches;
    for (const auto& fixture : table_fixture::all_fixtures()) {
        const auto result = table_fixture::check_cells(fixture);
        cells += result.checked;
        mismatches.insert(mismatches.end(), result.mismatches.begin(),
                          result.mismatches.end());
    }
    std::ostringstream detail;
    if (!mismatches.empty()) {
        detail << mismatches.size() << " mismatches, first: " << mismatches.front() << "; ";
    }
    detail << cells << " cells checked across 12 instantiations";
    return {mismatches.empty() && cells == 174, detail.str()};
}

// --- criterion 4: greedy detector vs literal second implementation ----------

Outcome detector_oracle_equivalence() {
    SplitMix64 rng(20240817);
    const int cases = 10000;
    int mismatches = 0;
    for (int iter = 0; iter < cases; ++iter) {
        const auto series = testing_helpers::random_series(rng, 512);
        const double p_t = static_cast<double>(rng.below(101)) / 100.0;
        const auto d_frames = static_cast<std::int64_t>(1 + rng.below(32));
        const auto fast = detect_maxima(threshold_probs(series, p_t), d_frames);
        if (fast.frames != oracles::detect_frames(series, p_t, d_frames)) {
            ++mismatches;
        }
    }
    std::ostringstream detail;
    detail << cases << " random series, " << mismatches << " mismatches";
    return {mismatches == 0, detail.str()};
}

// --- criterion 5: end-to-end synthetic pipeline ------------------------------

SessionConfig clean_session_config() {
    SessionConfig config;
    config.duration_s = 816.46;
    config.gesture_mean_s = 2.0;
    config.gesture_std_s = 0.0;
    config.mean_gap_s = 8.0;
    config.min_gap_s = 2.0;
    config.noise_std = 0.0;
    config.fps = 8.0;
    return config;
}

std::vector<LabeledSeries> to_labeled(const std::vector<SyntheticSession>& dataset, double fps) {
    std::vector<LabeledSeries> sessions;
    sessions.reserve(dataset.size());
    for (const auto& session : dataset) {
        const auto n_frames = static_cast<std::int64_t>(session.probs.probs.size());
        sessions.push_back(
            {session.probs, events_from_annotations(session.events, fps, n_frames)});
    }
    return sessions;
}

Outcome end_to_end_synthetic() {
    // noise-free: every session must score exactly 1.0
    const auto clean = generate_dataset(100, 5000, clean_session_config());
    int perfect = 0;
    for (const auto& session : clean) {
        const auto events = events_from_annotations(
            session.events, 8.0, static_cast<std::int64_t>(session.probs.probs.size()));
        const auto counts = evaluate_detections(detect(session.probs, {0.5, 2.0}), events);
        if (compute_metrics(counts).f1 == 1.0) {
            ++perfect;
        }
    }

    // noisy: threshold tuned on one split must transfer to the other
    SessionConfig noisy = clean_session_config();
    noisy.noise_std = 0.1;
    noisy.gesture_std_s = 0.5;
    noisy.gesture_mean_s = 2.32;
    noisy.mean_gap_s = 10.0;
    const auto validation = to_labeled(generate_dataset(20, 9000, noisy), noisy.fps);
    const auto holdout = to_labeled(generate_dataset(20, 9100, noisy), noisy.fps);

    const auto tuned = tune_threshold(validation, GridSpec{}, 2.0);
    EvalCounts pooled;
    for (const auto& session : holdout) {
        pooled += evaluate_detections(detect(session.probs, {tuned.threshold, 2.0}),
                                      session.events);
    }
    const double holdout_f1 = compute_metrics(pooled).f1;
    const double degradation = tuned.f1 - holdout_f1;

    std::ostringstream detail;
    detail << perfect << "/100 clean sessions at F1=1.000; tuned F1 " << tuned.f1
           << ", holdout F1 " << holdout_f1 << ", degradation " << degradation;
    return {perfect == 100 && degradation < 0.05, detail.str()};
}

// --- criterion 6: tuning equals exhaustive recomputation --------------------

Outcome tuning_oracle() {
    SessionConfig config = clean_session_config();
    config.duration_s = 200.0;
    config.noise_std = 0.08;
    config.gesture_std_s = 0.3;
    config.gesture_mean_s = 2.2;
    auto dataset = generate_dataset(5, 123, config);

    // plant mid-level spurious peaks far from events so the F1 landscape
    // actually varies over the grid
    SplitMix64 rng(55);
    for (auto& session : dataset) {
        const auto events = events_from_annotations(
            session.events, config.fps, static_cast<std::int64_t>(session.probs.probs.size()));
        for (int planted = 0; planted < 3;) {
            const auto idx = rng.below(session.probs.probs.size());
            bool clear = session.probs.probs[idx] < 0.2;
            for (const auto& event : events) {
                if (static_cast<std::int64_t>(idx) >= event.first_frame - 20 &&
                    static_cast<std::int64_t>(idx) <= event.last_frame + 20) {
                    clear = false;
                    break;
                }
            }
            if (clear) {
                session.probs.probs[idx] = 0.55 + 0.1 * static_cast<double>(planted);
                ++planted;
            }
        }
    }

    const auto sessions = to_labeled(dataset, config.fps);
    const GridSpec grid{};
    const auto fast = tune_threshold(sessions, grid, 2.0);
    const auto slow = oracles::tune(sessions, grid, 2.0);

    const bool grid_ok = grid.points().size() == 501;
    const bool equal = fast.threshold == slow.threshold && fast.f1 == slow.f1;
    std::ostringstream detail;
    detail << "tuned (" << fast.threshold << ", " << fast.f1 << ") vs oracle ("
           << slow.threshold << ", " << slow.f1 << "), grid points "
           << grid.points().size();
    return {grid_ok && equal, detail.str()};
}

// --- criterion 7: invariant property suites ----------------------------------

Outcome invariant_suites() {
    std::ostringstream detail;
    bool all_pass = true;

    {
        SplitMix64 rng(71);
        int failures = 0;
        for (int iter = 0; iter < 1000; ++iter) {
            const int n_classes = 2 + static_cast<int>(rng.below(4));
            const std::size_t m = 1 + rng.below(64);
            std::vector<int> batch(m);
            std::vector<std::int64_t> counts(static_cast<std::size_t>(n_classes), 0);
            for (auto& label : batch) {
                label = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_classes)));
                ++counts[static_cast<std::size_t>(label)];
            }
            const auto weights = class_weights(batch, n_classes);
            for (std::size_t i = 0; i < m; ++i) {
                const double product =
                    static_cast<double>(counts[static_cast<std::size_t>(batch[i])]) *
                    weights.weights[i];
                if (std::abs(product - static_cast<double>(m) / n_classes) > 1e-9) {
                    ++failures;
                    break;
                }
            }
        }
        all_pass = all_pass && failures == 0;
        detail << "weights " << 1000 - failures << "/1000";
    }

    {
        SplitMix64 rng(72);
        int failures = 0;
        for (int iter = 0; iter < 1000; ++iter) {
            std::vector<FrameEvent> events;
            std::int64_t cursor = 0;
            for (std::size_t i = 0; i < rng.below(10); ++i) {
                const std::int64_t first = cursor + 1 + static_cast<std::int64_t>(rng.below(8));
                const std::int64_t last = first + static_cast<std::int64_t>(rng.below(5));
                events.push_back({first, last});
                cursor = last;
            }
            DetectionList detections{8.0, {}};
            std::int64_t frame = 0;
            for (std::size_t i = 0; i < rng.below(12); ++i) {
                frame += 1 + static_cast<std::int64_t>(rng.below(6));
                detections.frames.push_back(frame);
            }
            const auto counts = evaluate_detections(detections, events);
            const bool ok =
                counts.tp + counts.fp1 + counts.fp2 ==
                    static_cast<std::int64_t>(detections.frames.size()) &&
                counts.tp + counts.fn == static_cast<std::int64_t>(events.size());
            if (!ok) {
                ++failures;
            }
        }
        all_pass = all_pass && failures == 0;
        detail << ", counts " << 1000 - failures << "/1000";
    }

    {
        SplitMix64 rng(73);
        int failures = 0;
        for (int iter = 0; iter < 1000; ++iter) {
            FrameLabelSeries series{24.0, 0, {}};
            const std::size_t len = 1 + rng.below(160);
            for (std::size_t i = 0; i < len; ++i) {
                series.labels.push_back(rng.uniform() < 0.35 ? Label::intake
                                                             : Label::non_intake);
            }
            const auto a = static_cast<std::int64_t>(1 + rng.below(4));
            const auto b = static_cast<std::int64_t>(1 + rng.below(4));
            const auto two_step = downsample_labels(downsample_labels(series, a), b);
            const auto one_step = downsample_labels(series, a * b);
            const bool composed = two_step.labels == one_step.labels &&
                                  std::abs(two_step.fps - one_step.fps) < 1e-12;
            const bool monotone = events_from_labels(one_step).size() <=
                                  events_from_labels(series).size();
            if (!composed || !monotone) {
                ++failures;
            }
        }
        all_pass = all_pass && failures == 0;
        detail << ", downsample " << 1000 - failures << "/1000";
    }

    {
        testing_helpers::TempDir dir("acceptance_csv");
        SplitMix64 rng(74);
        int failures = 0;
        for (int iter = 0; iter < 1000; ++iter) {
            bool ok = true;

            auto series = testing_helpers::random_series(rng, 60);
            if (series.probs.empty()) {
                series.probs.push_back(rng.uniform());
            }
            const auto probs_path = dir.path() / "p.csv";
            csv::write_file_atomic(probs_path, csv::format_probs(series));
            const auto parsed = csv::read_probs(probs_path, series.fps);
            ok = ok && parsed.probs == series.probs &&
                 parsed.start_frame == series.start_frame;

            std::vector<AnnotationInterval> intervals;
            double cursor = rng.uniform(0.0, 1.0);
            for (std::size_t i = 0; i < 1 + rng.below(4); ++i) {
                const double start = cursor + rng.uniform(0.2, 2.0);
                const double end = start + rng.uniform(0.5, 3.0);
                intervals.push_back({start, end, Label::intake});
                cursor = end;
            }
            const auto ann_path = dir.path() / "a.csv";
            csv::write_file_atomic(ann_path, csv::format_annotations(intervals));
            const auto parsed_intervals = csv::read_annotations(ann_path);
            ok = ok && parsed_intervals.size() == intervals.size();
            for (std::size_t i = 0; ok && i < intervals.size(); ++i) {
                ok = parsed_intervals[i].start_s == intervals[i].start_s &&
                     parsed_intervals[i].end_s == intervals[i].end_s;
            }

            DetectionList detections{8.0, {}};
            std::int64_t frame = 0;
            for (std::size_t i = 0; i < rng.below(6); ++i) {
                frame += 1 + static_cast<std::int64_t>(rng.below(40));
                detections.frames.push_back(frame);
            }
            const auto det_path = dir.path() / "d.csv";
            csv::write_file_atomic(det_path, csv::format_detections(detections));
            ok = ok && csv::read_detections(det_path, 8.0).frames == detections.frames;

            FrameLabelSeries labels{8.0, 0, {}};
            for (std::size_t i = 0; i < 1 + rng.below(30); ++i) {
                labels.labels.push_back(rng.uniform() < 0.5 ? Label::intake
                                                            : Label::non_intake);
            }
            const auto label_path = dir.path() / "l.csv";
            csv::write_file_atomic(label_path, csv::format_labels(labels));
            ok = ok && csv::read_labels(label_path, 8.0).labels == labels.labels;

            if (!ok) {
                ++failures;
            }
        }
        all_pass = all_pass && failures == 0;
        detail << ", csv round-trips " << 1000 - failures << "/1000";
    }

    return {all_pass, detail.str()};
}

} // namespace

int main() {
    std::printf("acceptance suite, version %s\n", "0.1.0");
    run_criterion(1, "metric reproduction from published count rows", 1.0, metric_reproduction);
    run_criterion(2, "parameter-count reproduction", 1.0, parameter_reproduction);
    run_criterion(3, "shape reproduction, all printed cells", 5.0, shape_reproduction);
    run_criterion(4, "detector equals independent second implementation", 30.0,
                  detector_oracle_equivalence);
    run_criterion(5, "end-to-end synthetic pipeline", 120.0, end_to_end_synthetic);
    run_criterion(6, "tuning equals exhaustive oracle, 501-point grid", 60.0, tuning_oracle);
    run_criterion(7, "invariant property suites (1000 cases each)", 60.0, invariant_suites);

    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
