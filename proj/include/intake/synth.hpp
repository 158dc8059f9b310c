#pragma once

#include "intake/timeline.hpp"

#include <cstdint>
#include <vector>

namespace intake {

// Parameters of one synthetic eating session. Defaults follow the dataset
// statistics the generator is meant to mimic (mean session 816.46 s, gesture
// durations 2.32 +- 1.02 s).
struct SessionConfig {
    double duration_s = 816.46;
    double gesture_mean_s = 2.32;
    double gesture_std_s = 1.02;
    double mean_gap_s = 14.7;
    double min_gap_s = 0.0;  // effective floor is max(min_gap_s, 1/fps)
    double noise_std = 0.0;  // gaussian, clipped to [0, 1]
    double fps = 8.0;
    std::uint64_t seed = 0;
};

struct SyntheticSession {
    std::vector<AnnotationInterval> events;
    ProbabilitySeries probs;
};

void validate(const SessionConfig& config);

// Deterministic session from config.seed:
//   - gesture durations: Normal(gesture_mean_s, gesture_std_s) clamped to
//     >= 0.5 s (clamping keeps the pooled mean near gesture_mean_s);
//   - gaps: Exponential(mean_gap_s) floored at max(1/fps, min_gap_s);
//   - probability trace: per event a trapezoid with 2-frame ramps rescaled to
//     peak exactly at 1, baseline 0 elsewhere, plus optional gaussian noise
//     clipped to [0, 1].
// Rejects configurations that produce no event.
SyntheticSession generate_session(const SessionConfig& config);

// Session k uses seed = base_seed + k, so any prefix of a larger dataset is
// reproduced exactly.
std::vector<SyntheticSession> generate_dataset(std::int64_t n_sessions,
                                               std::uint64_t base_seed,
                                               const SessionConfig& config);

} // namespace intake
