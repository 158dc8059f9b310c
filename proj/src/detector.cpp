#include "intake/detector.hpp"

#include "intake/errors.hpp"
#include "intake/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace intake {

std::vector<double> DetectionList::times() const {
    std::vector<double> out;
    out.reserve(frames.size());
    for (const std::int64_t f : frames) {
        out.push_back(static_cast<double>(f) / fps);
    }
    return out;
}

std::vector<double> GridSpec::points() const {
    if (!(lo < hi)) {
        throw ValidationError("grid: lo must be less than hi");
    }
    if (!(step > 0.0)) {
        throw ValidationError("grid: step must be positive");
    }
    // Index-based enumeration; the 1e-9 slack keeps hi on the grid when
    // (hi - lo) / step is an integer up to float drift.
    const auto count = static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> points;
    points.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) {
        points.push_back(lo + static_cast<double>(k) * step);
    }
    return points;
}

ProbabilitySeries threshold_probs(const ProbabilitySeries& series, double p_t) {
    validate(series);
    if (!(p_t >= 0.0 && p_t <= 1.0)) {
        throw ValidationError("threshold_probs: p_t = " + std::to_string(p_t) +
                              " outside [0, 1]");
    }
    ProbabilitySeries out = series;
    for (double& p : out.probs) {
        if (p < p_t) {
            p = 0.0;
        }
    }
    return out;
}

DetectionList detect_maxima(const ProbabilitySeries& thresholded, std::int64_t d_frames) {
    validate(thresholded);
    if (d_frames < 1) {
        throw ValidationError("detect_maxima: d_frames must be >= 1");
    }

    struct Candidate {
        double p;
        std::int64_t frame;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < thresholded.probs.size(); ++i) {
        if (thresholded.probs[i] > 0.0) {
            candidates.push_back({thresholded.probs[i],
                                  thresholded.start_frame + static_cast<std::int64_t>(i)});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.p != b.p) {
            return a.p > b.p;
        }
        return a.frame < b.frame;
    });

    // Visiting candidates by descending probability (earliest frame on ties)
    // and accepting those >= d_frames from every accepted frame reproduces the
    // greedy take-the-highest-survivor loop; only the nearest accepted
    // neighbours can violate the distance.
    std::set<std::int64_t> accepted;
    for (const Candidate& cand : candidates) {
        auto right = accepted.lower_bound(cand.frame);
        bool blocked = false;
        if (right != accepted.end() && *right - cand.frame < d_frames) {
            blocked = true;
        }
        if (!blocked && right != accepted.begin()) {
            auto left = std::prev(right);
            if (cand.frame - *left < d_frames) {
                blocked = true;
            }
        }
        if (!blocked) {
            accepted.insert(cand.frame);
        }
    }

    DetectionList result;
    result.fps = thresholded.fps;
    result.frames.assign(accepted.begin(), accepted.end());
    return result;
}

std::int64_t min_distance_frames(double d_s, double fps) {
    if (!(d_s > 0.0)) {
        throw ValidationError("detector config: minimum distance must be positive");
    }
    if (!(fps > 0.0)) {
        throw ValidationError("detector config: fps must be positive");
    }
    const auto rounded = static_cast<std::int64_t>(std::floor(d_s * fps + 0.5));
    return std::max<std::int64_t>(1, rounded);
}

DetectionList detect(const ProbabilitySeries& series, const DetectorConfig& config) {
    const std::int64_t d_frames = min_distance_frames(config.d_s, series.fps);
    return detect_maxima(threshold_probs(series, config.p_t), d_frames);
}

TuneResult tune_threshold(std::span<const LabeledSeries> sessions,
                          const GridSpec& grid,
                          double d_s) {
    if (sessions.empty()) {
        throw ValidationError("tune_threshold: need at least one session");
    }
    if (!(grid.lo >= 0.0 && grid.hi <= 1.0)) {
        throw ValidationError("tune_threshold: grid must lie within [0, 1]");
    }
    std::size_t total_events = 0;
    for (const auto& session : sessions) {
        validate(session.probs);
        total_events += session.events.size();
    }
    if (total_events == 0) {
        throw ValidationError("tune_threshold: no ground-truth events in any session; "
                              "F1 is undefined");
    }

    TuneResult best{grid.lo, -1.0};
    for (const double p_t : grid.points()) {
        EvalCounts pooled;
        for (const auto& session : sessions) {
            pooled += evaluate_detections(detect(session.probs, {p_t, d_s}), session.events);
        }
        const double f1 = compute_metrics(pooled).f1;
        // Strict improvement keeps the smallest threshold on F1 ties.
        if (f1 > best.f1) {
            best = {p_t, f1};
        }
    }
    return best;
}

} // namespace intake
