#include "intake/svg.hpp"

#include "intake/csv.hpp"

#include <algorithm>
#include <sstream>

namespace intake {
namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 240.0;
constexpr double kMarginLeft = 40.0;
constexpr double kMarginRight = 12.0;
constexpr double kMarginTop = 16.0;
constexpr double kMarginBottom = 28.0;

std::string num(double v) { return csv::format_double(v); }

} // namespace

std::string render_report_svg(const ProbabilitySeries& probs,
                              const DetectionList& detections,
                              std::span<const FrameEvent> gt_events,
                              std::optional<double> threshold) {
    validate(probs);

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const double first_t = static_cast<double>(probs.start_frame) / probs.fps;
    const auto last_frame = probs.start_frame + static_cast<std::int64_t>(probs.probs.size()) - 1;
    const double last_t = static_cast<double>(std::max(last_frame, probs.start_frame + 1)) / probs.fps;
    const double span = std::max(last_t - first_t, 1e-9);

    const auto x_of = [&](double t) { return kMarginLeft + (t - first_t) / span * plot_w; };
    const auto y_of = [&](double p) { return kMarginTop + (1.0 - p) * plot_h; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
        << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(kHeight) << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
        << "\" fill=\"white\"/>\n";

    for (const auto& event : gt_events) {
        const double t0 = static_cast<double>(event.first_frame) / probs.fps;
        const double t1 = static_cast<double>(event.last_frame) / probs.fps;
        out << "  <rect class=\"gt-event\" x=\"" << num(x_of(t0)) << "\" y=\"" << num(kMarginTop)
            << "\" width=\"" << num(std::max(x_of(t1) - x_of(t0), 1.0)) << "\" height=\""
            << num(plot_h) << "\" fill=\"#f4c7c3\"/>\n";
    }

    // Axes.
    out << "  <line x1=\"" << num(kMarginLeft) << "\" y1=\"" << num(kMarginTop) << "\" x2=\""
        << num(kMarginLeft) << "\" y2=\"" << num(kMarginTop + plot_h)
        << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    out << "  <line x1=\"" << num(kMarginLeft) << "\" y1=\"" << num(kMarginTop + plot_h)
        << "\" x2=\"" << num(kMarginLeft + plot_w) << "\" y2=\"" << num(kMarginTop + plot_h)
        << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << num(kMarginLeft - 6.0) << "\" y=\"" << num(y_of(1.0) + 4.0)
        << "\" text-anchor=\"end\" font-size=\"10\">1</text>\n";
    out << "  <text x=\"" << num(kMarginLeft - 6.0) << "\" y=\"" << num(y_of(0.0) + 4.0)
        << "\" text-anchor=\"end\" font-size=\"10\">0</text>\n";
    out << "  <text x=\"" << num(kMarginLeft + plot_w) << "\" y=\"" << num(kHeight - 8.0)
        << "\" text-anchor=\"end\" font-size=\"10\">" << num(last_t) << " s</text>\n";

    if (threshold.has_value()) {
        out << "  <line class=\"threshold\" x1=\"" << num(kMarginLeft) << "\" y1=\""
            << num(y_of(*threshold)) << "\" x2=\"" << num(kMarginLeft + plot_w) << "\" y2=\""
            << num(y_of(*threshold))
            << "\" stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }

    out << "  <polyline class=\"probability\" fill=\"none\" stroke=\"#1a6fb4\" "
           "stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < probs.probs.size(); ++i) {
        const double t =
            static_cast<double>(probs.start_frame + static_cast<std::int64_t>(i)) / probs.fps;
        if (i != 0) {
            out << ' ';
        }
        out << num(x_of(t)) << ',' << num(y_of(probs.probs[i]));
    }
    out << "\"/>\n";

    for (const std::int64_t frame : detections.frames) {
        const double t = static_cast<double>(frame) / detections.fps;
        out << "  <circle class=\"detection\" cx=\"" << num(x_of(t)) << "\" cy=\""
            << num(kMarginTop + plot_h + 6.0) << "\" r=\"3\" fill=\"#d33\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace intake
