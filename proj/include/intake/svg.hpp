#pragma once

#include "intake/detector.hpp"
#include "intake/timeline.hpp"

#include <optional>
#include <span>
#include <string>

namespace intake {

// Static timeline report: probability curve as one polyline, ground-truth
// events as shaded bands, optional threshold rule, one marker circle per
// detection. Deterministic output for identical inputs.
std::string render_report_svg(const ProbabilitySeries& probs,
                              const DetectionList& detections,
                              std::span<const FrameEvent> gt_events,
                              std::optional<double> threshold);

} // namespace intake
