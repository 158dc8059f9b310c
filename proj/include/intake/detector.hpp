#pragma once

#include "intake/timeline.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace intake {

// Sparse detections as strictly ascending absolute frame indices.
struct DetectionList {
    double fps = 0.0;
    std::vector<std::int64_t> frames;

    std::vector<double> times() const;
};

struct DetectorConfig {
    double p_t = 0.5;  // threshold; probabilities below it are zeroed
    double d_s = 2.0;  // minimum distance between detections, seconds
};

// Threshold candidates for the tuner: lo, lo+step, ... while <= hi.
struct GridSpec {
    double lo = 0.5;
    double hi = 1.0;
    double step = 0.001;

    std::vector<double> points() const;
};

// Probability series paired with its ground-truth events; one session.
struct LabeledSeries {
    ProbabilitySeries probs;
    std::vector<FrameEvent> events;
};

struct TuneResult {
    double threshold = 0.0;
    double f1 = 0.0;
};

// p'_f = p_f if p_f >= p_t else 0.
ProbabilitySeries threshold_probs(const ProbabilitySeries& series, double p_t);

// Greedy minimum-distance maximum search on an already-thresholded series:
// repeatedly emit the highest surviving candidate (ties: earliest frame) and
// drop all candidates closer than d_frames to it. Zeros are not candidates.
DetectionList detect_maxima(const ProbabilitySeries& thresholded, std::int64_t d_frames);

// Composition of the two steps with d_frames = round-half-up(d_s * fps),
// at least 1.
DetectionList detect(const ProbabilitySeries& series, const DetectorConfig& config);

std::int64_t min_distance_frames(double d_s, double fps);

// Evaluates pooled F1 across sessions at every grid point and returns the
// smallest threshold attaining the maximum.
TuneResult tune_threshold(std::span<const LabeledSeries> sessions,
                          const GridSpec& grid,
                          double d_s);

} // namespace intake
