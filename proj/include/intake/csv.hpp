#pragma once

#include "intake/detector.hpp"
#include "intake/timeline.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace intake::csv {

// File formats, all with a mandatory header row:
//   annotations:  start_s,end_s,label      (decimal seconds, label "intake")
//   labels:       frame,label              (label intake|non_intake)
//   probabilities: frame,p_intake          (absolute, contiguous frame index)
//   detections:   frame,time_s
// Readers throw ValidationError naming the offending line.

std::vector<AnnotationInterval> read_annotations(const std::filesystem::path& path);
FrameLabelSeries read_labels(const std::filesystem::path& path, double fps);
ProbabilitySeries read_probs(const std::filesystem::path& path, double fps);
DetectionList read_detections(const std::filesystem::path& path, double fps);

std::string format_annotations(std::span<const AnnotationInterval> intervals);
std::string format_labels(const FrameLabelSeries& series);
std::string format_probs(const ProbabilitySeries& series);
std::string format_detections(const DetectionList& detections);

// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

// Write-temp-then-rename so readers never observe partial files.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace intake::csv
