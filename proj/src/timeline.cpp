#include "intake/timeline.hpp"

#include "intake/errors.hpp"
#include "intake/log.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace intake {
namespace {

std::string interval_text(const AnnotationInterval& interval) {
    std::ostringstream out;
    out << "[" << interval.start_s << " s, " << interval.end_s << " s]";
    return out.str();
}

} // namespace

const char* label_name(Label label) {
    return label == Label::intake ? "intake" : "non_intake";
}

void validate(const AnnotationInterval& interval) {
    if (!(interval.start_s >= 0.0)) {
        throw ValidationError("annotation interval " + interval_text(interval) +
                              ": start must be >= 0");
    }
    if (!(interval.end_s > interval.start_s)) {
        throw ValidationError("annotation interval " + interval_text(interval) +
                              ": end must be greater than start");
    }
}

void validate(const FrameLabelSeries& series) {
    if (!(series.fps > 0.0)) {
        throw ValidationError("label series: fps must be positive");
    }
    if (series.labels.empty()) {
        throw ValidationError("label series: labels must be non-empty");
    }
    if (series.start_frame < 0) {
        throw ValidationError("label series: start_frame must be >= 0");
    }
}

void validate(const ProbabilitySeries& series) {
    if (!(series.fps > 0.0)) {
        throw ValidationError("probability series: fps must be positive");
    }
    if (series.start_frame < 0) {
        throw ValidationError("probability series: start_frame must be >= 0");
    }
    for (std::size_t i = 0; i < series.probs.size(); ++i) {
        const double p = series.probs[i];
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ValidationError("probability series: p[" + std::to_string(i) +
                                  "] = " + std::to_string(p) + " outside [0, 1]");
        }
    }
}

std::int64_t first_frame_at_or_after(double t, double fps) {
    auto k = static_cast<std::int64_t>(std::ceil(t * fps));
    if (k < 0) {
        k = 0;
    }
    while (k > 0 && static_cast<double>(k - 1) / fps >= t) {
        --k;
    }
    while (static_cast<double>(k) / fps < t) {
        ++k;
    }
    return k;
}

std::int64_t last_frame_at_or_before(double t, double fps) {
    auto k = static_cast<std::int64_t>(std::floor(t * fps));
    while (static_cast<double>(k) / fps > t) {
        --k;
    }
    while (static_cast<double>(k + 1) / fps <= t) {
        ++k;
    }
    return k;
}

FrameLabelSeries labels_from_annotations(std::span<const AnnotationInterval> intervals,
                                         double fps,
                                         std::int64_t n_frames) {
    if (!(fps > 0.0)) {
        throw ValidationError("labels_from_annotations: fps must be positive");
    }
    if (n_frames < 1) {
        throw ValidationError("labels_from_annotations: n_frames must be >= 1");
    }
    for (const auto& interval : intervals) {
        validate(interval);
    }

    std::vector<AnnotationInterval> sorted(intervals.begin(), intervals.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.start_s < b.start_s; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].start_s <= sorted[i - 1].end_s) {
            log::warn("overlapping annotations " + interval_text(sorted[i - 1]) + " and " +
                      interval_text(sorted[i]) + "; treating as their union");
        }
    }

    FrameLabelSeries series;
    series.fps = fps;
    series.start_frame = 0;
    series.labels.assign(static_cast<std::size_t>(n_frames), Label::non_intake);
    for (const auto& interval : sorted) {
        const std::int64_t first = first_frame_at_or_after(interval.start_s, fps);
        const std::int64_t last =
            std::min<std::int64_t>(last_frame_at_or_before(interval.end_s, fps), n_frames - 1);
        for (std::int64_t k = first; k <= last; ++k) {
            series.labels[static_cast<std::size_t>(k)] = Label::intake;
        }
    }
    return series;
}

FrameLabelSeries downsample_labels(const FrameLabelSeries& series, std::int64_t factor) {
    validate(series);
    if (factor < 1) {
        throw ValidationError("downsample_labels: factor must be >= 1");
    }
    if (series.start_frame % factor != 0) {
        throw ValidationError("downsample_labels: start_frame " +
                              std::to_string(series.start_frame) +
                              " is not divisible by factor " + std::to_string(factor));
    }
    FrameLabelSeries out;
    out.fps = series.fps / static_cast<double>(factor);
    out.start_frame = series.start_frame / factor;
    out.labels.reserve(series.labels.size() / static_cast<std::size_t>(factor) + 1);
    for (std::size_t i = 0; i < series.labels.size(); i += static_cast<std::size_t>(factor)) {
        out.labels.push_back(series.labels[i]);
    }
    return out;
}

std::vector<FrameEvent> events_from_labels(const FrameLabelSeries& series) {
    validate(series);
    std::vector<FrameEvent> events;
    const auto n = static_cast<std::int64_t>(series.labels.size());
    std::int64_t i = 0;
    while (i < n) {
        if (series.labels[static_cast<std::size_t>(i)] == Label::intake) {
            std::int64_t j = i;
            while (j + 1 < n && series.labels[static_cast<std::size_t>(j + 1)] == Label::intake) {
                ++j;
            }
            events.push_back({series.start_frame + i, series.start_frame + j});
            i = j + 1;
        } else {
            ++i;
        }
    }
    return events;
}

std::vector<FrameEvent> events_from_annotations(std::span<const AnnotationInterval> intervals,
                                                double fps,
                                                std::int64_t n_frames) {
    return events_from_labels(labels_from_annotations(intervals, fps, n_frames));
}

WeightVector class_weights(std::span<const int> batch_labels, int n_classes) {
    if (batch_labels.empty()) {
        throw ValidationError("class_weights: batch must be non-empty");
    }
    if (n_classes < 1) {
        throw ValidationError("class_weights: n_classes must be >= 1");
    }
    std::unordered_map<int, std::int64_t> counts;
    for (const int label : batch_labels) {
        if (label < 0 || label >= n_classes) {
            throw ValidationError("class_weights: label id " + std::to_string(label) +
                                  " outside [0, " + std::to_string(n_classes) + ")");
        }
        ++counts[label];
    }
    const auto m = static_cast<double>(batch_labels.size());
    WeightVector weights;
    weights.weights.reserve(batch_labels.size());
    for (const int label : batch_labels) {
        weights.weights.push_back(m / (static_cast<double>(counts[label]) * n_classes));
    }
    return weights;
}

double weighted_cross_entropy(const std::vector<std::vector<double>>& predicted_probs,
                              std::span<const int> true_labels,
                              const WeightVector& weights) {
    const std::size_t m = predicted_probs.size();
    if (true_labels.size() != m || weights.weights.size() != m) {
        throw ValidationError("weighted_cross_entropy: predictions, labels and weights "
                              "must have equal length");
    }
    if (m == 0) {
        throw ValidationError("weighted_cross_entropy: batch must be non-empty");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = predicted_probs[i];
        double sum = 0.0;
        for (const double v : p) {
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-6) {
            throw ValidationError("weighted_cross_entropy: prediction " + std::to_string(i) +
                                  " sums to " + std::to_string(sum) + ", expected 1");
        }
        const int truth = true_labels[i];
        if (truth < 0 || static_cast<std::size_t>(truth) >= p.size()) {
            throw ValidationError("weighted_cross_entropy: true label " + std::to_string(truth) +
                                  " outside prediction " + std::to_string(i));
        }
        const double clamped = std::clamp(p[static_cast<std::size_t>(truth)], 1e-7, 1.0);
        total += weights.weights[i] * -std::log(clamped);
    }
    return total / static_cast<double>(m);
}

} // namespace intake
