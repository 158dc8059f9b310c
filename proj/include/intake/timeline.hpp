#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace intake {

enum class Label : std::uint8_t { non_intake = 0, intake = 1 };

const char* label_name(Label label);

// Ground-truth gesture as a closed interval in seconds.
struct AnnotationInterval {
    double start_s = 0.0;
    double end_s = 0.0;
    Label label = Label::intake;
};

// Per-frame labels at a fixed rate. start_frame is the absolute index of
// labels[0]; frame k carries timestamp k / fps.
struct FrameLabelSeries {
    double fps = 0.0;
    std::int64_t start_frame = 0;
    std::vector<Label> labels;

    std::int64_t end_frame() const {
        return start_frame + static_cast<std::int64_t>(labels.size());
    }
};

// Per-frame intake probabilities. start_frame mirrors FrameLabelSeries and
// accommodates series whose leading frames carry no prediction.
struct ProbabilitySeries {
    double fps = 0.0;
    std::int64_t start_frame = 0;
    std::vector<double> probs;
};

// One positive weight per label of a minibatch.
struct WeightVector {
    std::vector<double> weights;
};

// Maximal run of consecutive intake frames, absolute indices, both inclusive.
struct FrameEvent {
    std::int64_t first_frame = 0;
    std::int64_t last_frame = 0;

    bool operator==(const FrameEvent&) const = default;
};

void validate(const AnnotationInterval& interval);
void validate(const FrameLabelSeries& series);
void validate(const ProbabilitySeries& series);

// Frame k is intake iff some interval satisfies start_s <= k/fps <= end_s
// (boundaries inclusive). Overlapping intervals act as their union and are
// reported with a warning.
FrameLabelSeries labels_from_annotations(std::span<const AnnotationInterval> intervals,
                                         double fps,
                                         std::int64_t n_frames);

// Keeps frames at indices 0, factor, 2*factor, ... and divides fps by factor.
// start_frame must be divisible by factor.
FrameLabelSeries downsample_labels(const FrameLabelSeries& series, std::int64_t factor);

// Maximal runs of consecutive intake frames, ascending and non-overlapping.
std::vector<FrameEvent> events_from_labels(const FrameLabelSeries& series);

// Composition used by the CLI and the tuner: annotation intervals to merged
// frame events on an n_frames grid.
std::vector<FrameEvent> events_from_annotations(std::span<const AnnotationInterval> intervals,
                                                double fps,
                                                std::int64_t n_frames);

// w_i = m / (C(i) * n) with m the batch size, n the class count and C(i) the
// number of batch labels equal to label i.
WeightVector class_weights(std::span<const int> batch_labels, int n_classes);

// Mean over the batch of w_i * -ln(p_i[true_i]); probabilities are clamped to
// [1e-7, 1] before the log. Each prediction vector must sum to 1 +- 1e-6.
double weighted_cross_entropy(const std::vector<std::vector<double>>& predicted_probs,
                              std::span<const int> true_labels,
                              const WeightVector& weights);

// Smallest k >= 0 with k/fps >= t, and largest k with k/fps <= t. Both nudge
// the float estimate so the result agrees exactly with the k/fps predicate.
std::int64_t first_frame_at_or_after(double t, double fps);
std::int64_t last_frame_at_or_before(double t, double fps);

} // namespace intake
