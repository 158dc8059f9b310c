#include "intake/csv.hpp"
#include "intake/svg.hpp"

#include "intake/errors.hpp"
#include "intake/rng.hpp"
#include "intake/synth.hpp"
#include "testing_helpers.hpp"

#include <doctest.h>

#include <fstream>
#include <string>

using namespace intake;
using testing_helpers::TempDir;

namespace {

std::filesystem::path write(const TempDir& dir, const std::string& name,
                            const std::string& content) {
    const auto path = dir.path() / name;
    csv::write_file_atomic(path, content);
    return path;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

// Minimal well-formedness scan: every opened tag is closed or self-closing.
bool tags_balanced(const std::string& svg) {
    std::vector<std::string> stack;
    std::size_t pos = 0;
    while ((pos = svg.find('<', pos)) != std::string::npos) {
        const std::size_t end = svg.find('>', pos);
        if (end == std::string::npos) {
            return false;
        }
        std::string tag = svg.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        if (tag.empty() || tag[0] == '?' || tag[0] == '!') {
            continue;
        }
        if (tag[0] == '/') {
            if (stack.empty()) {
                return false;
            }
            if (tag.substr(1) != stack.back()) {
                return false;
            }
            stack.pop_back();
            continue;
        }
        if (tag.back() == '/') {
            continue;
        }
        stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
    }
    return stack.empty();
}

} // namespace

TEST_CASE("csv round trips preserve values exactly") {
    TempDir dir("csv");
    SplitMix64 rng(808);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<AnnotationInterval> intervals;
        double cursor = rng.uniform(0.0, 1.0);
        const std::size_t n = 1 + rng.below(6);
        for (std::size_t i = 0; i < n; ++i) {
            const double start = cursor + rng.uniform(0.125, 3.0);
            const double end = start + rng.uniform(0.5, 4.0);
            intervals.push_back({start, end, Label::intake});
            cursor = end;
        }
        const auto annotations_path =
            write(dir, "a.csv", csv::format_annotations(intervals));
        const auto parsed = csv::read_annotations(annotations_path);
        REQUIRE(parsed.size() == intervals.size());
        for (std::size_t i = 0; i < parsed.size(); ++i) {
            CHECK(parsed[i].start_s == intervals[i].start_s);
            CHECK(parsed[i].end_s == intervals[i].end_s);
        }

        auto series = testing_helpers::random_series(rng, 100);
        if (series.probs.empty()) {
            series.probs.push_back(rng.uniform());
        }
        const auto probs_path = write(dir, "p.csv", csv::format_probs(series));
        const auto probs = csv::read_probs(probs_path, series.fps);
        CHECK(probs.probs == series.probs);
        CHECK(probs.start_frame == series.start_frame);

        FrameLabelSeries labels{8.0, static_cast<std::int64_t>(rng.below(10)), {}};
        const std::size_t len = 1 + rng.below(40);
        for (std::size_t i = 0; i < len; ++i) {
            labels.labels.push_back(rng.uniform() < 0.5 ? Label::intake : Label::non_intake);
        }
        const auto labels_path = write(dir, "l.csv", csv::format_labels(labels));
        const auto parsed_labels = csv::read_labels(labels_path, labels.fps);
        CHECK(parsed_labels.labels == labels.labels);
        CHECK(parsed_labels.start_frame == labels.start_frame);

        DetectionList detections{8.0, {}};
        std::int64_t frame = 0;
        for (std::size_t i = 0; i < rng.below(8); ++i) {
            frame += 1 + static_cast<std::int64_t>(rng.below(30));
            detections.frames.push_back(frame);
        }
        const auto det_path = write(dir, "d.csv", csv::format_detections(detections));
        const auto parsed_det = csv::read_detections(det_path, detections.fps);
        CHECK(parsed_det.frames == detections.frames);
    }
}

TEST_CASE("csv readers report the offending line") {
    TempDir dir("csv_err");

    const auto bad_header = write(dir, "h.csv", "foo,bar\n1,2\n");
    CHECK_THROWS_WITH_AS(csv::read_annotations(bad_header), doctest::Contains(":1:"),
                         ValidationError);

    const auto bad_interval =
        write(dir, "i.csv", "start_s,end_s,label\n1.0,2.0,intake\n3.0,2.5,intake\n");
    CHECK_THROWS_WITH_AS(csv::read_annotations(bad_interval), doctest::Contains(":3:"),
                         ValidationError);

    const auto bad_prob = write(dir, "p.csv", "frame,p_intake\n0,0.5\n1,1.5\n");
    CHECK_THROWS_WITH_AS(csv::read_probs(bad_prob, 8.0), doctest::Contains("outside [0, 1]"),
                         ValidationError);

    const auto gap = write(dir, "g.csv", "frame,p_intake\n0,0.5\n2,0.5\n");
    CHECK_THROWS_WITH_AS(csv::read_probs(gap, 8.0), doctest::Contains("contiguous"),
                         ValidationError);

    const auto empty = write(dir, "e.csv", "frame,p_intake\n");
    CHECK_THROWS_AS(csv::read_probs(empty, 8.0), ValidationError);

    const auto wrong_fps = write(dir, "w.csv", "frame,time_s\n16,1\n");
    CHECK_NOTHROW(csv::read_detections(wrong_fps, 16.0));
    CHECK_THROWS_WITH_AS(csv::read_detections(wrong_fps, 8.0), doctest::Contains("disagrees"),
                         ValidationError);

    CHECK_THROWS_AS(csv::read_annotations(dir.path() / "missing.csv"), ValidationError);
}

TEST_CASE("svg report structure") {
    SessionConfig config;
    config.duration_s = 60.0;
    config.gesture_mean_s = 2.0;
    config.gesture_std_s = 0.0;
    config.min_gap_s = 2.0;
    config.mean_gap_s = 4.0;
    config.seed = 11;
    const auto session = generate_session(config);
    const auto events = events_from_annotations(
        session.events, config.fps, static_cast<std::int64_t>(session.probs.probs.size()));
    const auto detections = detect(session.probs, {0.5, 2.0});

    const auto svg = render_report_svg(session.probs, detections, events, 0.5);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(tags_balanced(svg));
    CHECK(count_occurrences(svg, "<polyline") == 1);
    CHECK(count_occurrences(svg, "class=\"detection\"") == detections.frames.size());
    CHECK(count_occurrences(svg, "class=\"gt-event\"") == events.size());
    CHECK(count_occurrences(svg, "class=\"threshold\"") == 1);

    SUBCASE("no detections means no markers, no threshold means no rule") {
        const auto bare =
            render_report_svg(session.probs, DetectionList{config.fps, {}}, events, std::nullopt);
        CHECK(count_occurrences(bare, "class=\"detection\"") == 0);
        CHECK(count_occurrences(bare, "class=\"threshold\"") == 0);
        CHECK(tags_balanced(bare));
    }

    SUBCASE("identical inputs render identical bytes") {
        CHECK(render_report_svg(session.probs, detections, events, 0.5) == svg);
    }
}
