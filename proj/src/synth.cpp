#include "intake/synth.hpp"

#include "intake/errors.hpp"
#include "intake/rng.hpp"

#include <algorithm>
#include <cmath>

namespace intake {
namespace {

constexpr double kMinGestureS = 0.5;
constexpr int kRampFrames = 2;

// Trapezoid over an n-frame event with kRampFrames rising/falling frames,
// rescaled so the peak is exactly 1 even when the event is too short to
// reach the nominal plateau.
double trapezoid_value(std::int64_t i, std::int64_t n) {
    const double denom = kRampFrames + 1;
    const auto raw = [denom, n](std::int64_t k) {
        const double up = static_cast<double>(k + 1) / denom;
        const double down = static_cast<double>(n - k) / denom;
        return std::min({1.0, up, down});
    };
    double peak = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        peak = std::max(peak, raw(k));
    }
    return raw(i) / peak;
}

} // namespace

void validate(const SessionConfig& config) {
    if (!(config.duration_s > 0.0)) {
        throw ValidationError("session config: duration must be positive");
    }
    if (!(config.fps > 0.0)) {
        throw ValidationError("session config: fps must be positive");
    }
    if (!(config.gesture_mean_s >= kMinGestureS)) {
        throw ValidationError("session config: gesture mean must be >= 0.5 s");
    }
    if (!(config.gesture_std_s >= 0.0)) {
        throw ValidationError("session config: gesture std must be >= 0");
    }
    if (!(config.mean_gap_s >= 0.0)) {
        throw ValidationError("session config: mean gap must be >= 0");
    }
    if (!(config.min_gap_s >= 0.0)) {
        throw ValidationError("session config: min gap must be >= 0");
    }
    if (!(config.noise_std >= 0.0 && config.noise_std < 1.0)) {
        throw ValidationError("session config: noise std must lie in [0, 1)");
    }
    if (config.duration_s < kMinGestureS) {
        throw ValidationError("session config: duration shorter than the minimum gesture");
    }
}

SyntheticSession generate_session(const SessionConfig& config) {
    validate(config);
    SplitMix64 rng(config.seed);

    const double gap_floor = std::max(1.0 / config.fps, config.min_gap_s);
    std::vector<AnnotationInterval> events;
    double cursor = 0.0;
    while (true) {
        const double gap = std::max(gap_floor, rng.exponential(config.mean_gap_s));
        const double duration =
            std::max(kMinGestureS, config.gesture_mean_s + config.gesture_std_s * rng.normal());
        const double start = cursor + gap;
        const double end = start + duration;
        if (end > config.duration_s) {
            break;
        }
        events.push_back({start, end, Label::intake});
        cursor = end;
    }
    if (events.empty()) {
        throw ValidationError("generate_session: configuration admits no events within " +
                              std::to_string(config.duration_s) + " s");
    }

    const auto n_frames = static_cast<std::int64_t>(config.duration_s * config.fps);
    ProbabilitySeries probs;
    probs.fps = config.fps;
    probs.start_frame = 0;
    probs.probs.assign(static_cast<std::size_t>(n_frames), 0.0);
    for (const auto& event : events) {
        const std::int64_t first = first_frame_at_or_after(event.start_s, config.fps);
        const std::int64_t last =
            std::min(last_frame_at_or_before(event.end_s, config.fps), n_frames - 1);
        const std::int64_t n = last - first + 1;
        for (std::int64_t k = first; k <= last; ++k) {
            probs.probs[static_cast<std::size_t>(k)] = trapezoid_value(k - first, n);
        }
    }
    if (config.noise_std > 0.0) {
        for (double& p : probs.probs) {
            p = std::clamp(p + config.noise_std * rng.normal(), 0.0, 1.0);
        }
    }

    return {std::move(events), std::move(probs)};
}

std::vector<SyntheticSession> generate_dataset(std::int64_t n_sessions,
                                               std::uint64_t base_seed,
                                               const SessionConfig& config) {
    if (n_sessions < 1) {
        throw ValidationError("generate_dataset: need at least one session");
    }
    std::vector<SyntheticSession> sessions;
    sessions.reserve(static_cast<std::size_t>(n_sessions));
    for (std::int64_t k = 0; k < n_sessions; ++k) {
        SessionConfig session_config = config;
        session_config.seed = base_seed + static_cast<std::uint64_t>(k);
        sessions.push_back(generate_session(session_config));
    }
    return sessions;
}

} // namespace intake
