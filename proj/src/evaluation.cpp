#include "intake/evaluation.hpp"

#include "intake/errors.hpp"

#include <string>
#include <vector>

namespace intake {

EvalCounts& EvalCounts::operator+=(const EvalCounts& other) {
    tp += other.tp;
    fp1 += other.fp1;
    fp2 += other.fp2;
    fn += other.fn;
    return *this;
}

EvalCounts evaluate_detections(const DetectionList& detections,
                               std::span<const FrameEvent> gt_events) {
    for (std::size_t i = 0; i < gt_events.size(); ++i) {
        if (gt_events[i].last_frame < gt_events[i].first_frame) {
            throw ValidationError("evaluate_detections: event " + std::to_string(i) +
                                  " ends before it starts");
        }
        if (i > 0 && gt_events[i].first_frame <= gt_events[i - 1].last_frame) {
            throw ValidationError("evaluate_detections: events " + std::to_string(i - 1) +
                                  " and " + std::to_string(i) + " overlap or are unsorted");
        }
    }
    for (std::size_t i = 1; i < detections.frames.size(); ++i) {
        if (detections.frames[i] <= detections.frames[i - 1]) {
            throw ValidationError("evaluate_detections: detections must be strictly ascending");
        }
    }

    EvalCounts counts;
    std::vector<bool> hit(gt_events.size(), false);
    std::size_t event_idx = 0;
    for (const std::int64_t frame : detections.frames) {
        while (event_idx < gt_events.size() && gt_events[event_idx].last_frame < frame) {
            ++event_idx;
        }
        const bool inside = event_idx < gt_events.size() &&
                            gt_events[event_idx].first_frame <= frame &&
                            frame <= gt_events[event_idx].last_frame;
        if (!inside) {
            ++counts.fp2;
        } else if (hit[event_idx]) {
            ++counts.fp1;
        } else {
            hit[event_idx] = true;
            ++counts.tp;
        }
    }
    for (const bool h : hit) {
        if (!h) {
            ++counts.fn;
        }
    }
    return counts;
}

Metrics compute_metrics(const EvalCounts& counts) {
    Metrics metrics;
    const std::int64_t detected = counts.tp + counts.fp1 + counts.fp2;
    const std::int64_t events = counts.tp + counts.fn;
    metrics.precision =
        detected > 0 ? static_cast<double>(counts.tp) / static_cast<double>(detected) : 0.0;
    metrics.recall =
        events > 0 ? static_cast<double>(counts.tp) / static_cast<double>(events) : 0.0;
    const double pr = metrics.precision + metrics.recall;
    metrics.f1 = pr > 0.0 ? 2.0 * metrics.precision * metrics.recall / pr : 0.0;
    return metrics;
}

double uar(const FrameLabelSeries& predicted, const FrameLabelSeries& truth) {
    validate(predicted);
    validate(truth);
    if (predicted.labels.size() != truth.labels.size() || predicted.fps != truth.fps ||
        predicted.start_frame != truth.start_frame) {
        throw ValidationError("uar: series must share length, fps and start_frame");
    }
    std::int64_t truth_count[2] = {0, 0};
    std::int64_t correct[2] = {0, 0};
    for (std::size_t i = 0; i < truth.labels.size(); ++i) {
        const auto cls = static_cast<std::size_t>(truth.labels[i]);
        ++truth_count[cls];
        if (predicted.labels[i] == truth.labels[i]) {
            ++correct[cls];
        }
    }
    double sum = 0.0;
    int present = 0;
    for (int cls = 0; cls < 2; ++cls) {
        if (truth_count[cls] > 0) {
            sum += static_cast<double>(correct[cls]) / static_cast<double>(truth_count[cls]);
            ++present;
        }
    }
    return sum / static_cast<double>(present);
}

} // namespace intake
