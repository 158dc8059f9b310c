#pragma once

#include "intake/detector.hpp"
#include "intake/timeline.hpp"

#include <cstdint>
#include <span>

namespace intake {

// Aggregate of the four-way detection scheme: the first detection inside a
// ground-truth event is a TP, further detections inside the same event are
// FP1, detections outside any event are FP2, events never hit are FN.
struct EvalCounts {
    std::int64_t tp = 0;
    std::int64_t fp1 = 0;
    std::int64_t fp2 = 0;
    std::int64_t fn = 0;

    EvalCounts& operator+=(const EvalCounts& other);
    friend EvalCounts operator+(EvalCounts lhs, const EvalCounts& rhs) { return lhs += rhs; }
    bool operator==(const EvalCounts&) const = default;
};

struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Events must be ascending and non-overlapping; detections ascending.
// Event membership is boundary-inclusive.
EvalCounts evaluate_detections(const DetectionList& detections,
                               std::span<const FrameEvent> gt_events);

// precision = tp/(tp+fp1+fp2), recall = tp/(tp+fn), f1 = 2PR/(P+R).
// A zero denominator makes the affected metric 0.
Metrics compute_metrics(const EvalCounts& counts);

// Mean of per-class recalls over the classes present in truth.
double uar(const FrameLabelSeries& predicted, const FrameLabelSeries& truth);

} // namespace intake
