#include "intake/archspec.hpp"
#include "intake/csv.hpp"
#include "intake/detector.hpp"
#include "intake/errors.hpp"
#include "intake/evaluation.hpp"
#include "intake/svg.hpp"
#include "intake/synth.hpp"
#include "intake/timeline.hpp"
#include "intake/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace intake;

PYBIND11_MODULE(_intakedet, m) {
    m.doc() = "Intake gesture detection toolkit: frame labeling, sparse event detection, "
              "detection evaluation, architecture bookkeeping and synthetic sessions.";
    m.attr("__version__") = kVersion;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::enum_<Label>(m, "Label")
        .value("non_intake", Label::non_intake)
        .value("intake", Label::intake);

    py::class_<AnnotationInterval>(m, "AnnotationInterval")
        .def(py::init<>())
        .def(py::init([](double start_s, double end_s) {
                 return AnnotationInterval{start_s, end_s, Label::intake};
             }),
             py::arg("start_s"), py::arg("end_s"))
        .def_readwrite("start_s", &AnnotationInterval::start_s)
        .def_readwrite("end_s", &AnnotationInterval::end_s)
        .def_readwrite("label", &AnnotationInterval::label);

    py::class_<FrameLabelSeries>(m, "FrameLabelSeries")
        .def(py::init<>())
        .def_readwrite("fps", &FrameLabelSeries::fps)
        .def_readwrite("start_frame", &FrameLabelSeries::start_frame)
        .def_readwrite("labels", &FrameLabelSeries::labels);

    py::class_<ProbabilitySeries>(m, "ProbabilitySeries")
        .def(py::init<>())
        .def(py::init([](double fps, std::int64_t start_frame, std::vector<double> probs) {
                 return ProbabilitySeries{fps, start_frame, std::move(probs)};
             }),
             py::arg("fps"), py::arg("start_frame"), py::arg("probs"))
        .def_readwrite("fps", &ProbabilitySeries::fps)
        .def_readwrite("start_frame", &ProbabilitySeries::start_frame)
        .def_readwrite("probs", &ProbabilitySeries::probs);

    py::class_<FrameEvent>(m, "FrameEvent")
        .def(py::init<>())
        .def(py::init([](std::int64_t first, std::int64_t last) {
                 return FrameEvent{first, last};
             }),
             py::arg("first_frame"), py::arg("last_frame"))
        .def_readwrite("first_frame", &FrameEvent::first_frame)
        .def_readwrite("last_frame", &FrameEvent::last_frame)
        .def("__eq__", [](const FrameEvent& a, const FrameEvent& b) { return a == b; })
        .def("__repr__", [](const FrameEvent& e) {
            return "FrameEvent(" + std::to_string(e.first_frame) + ", " +
                   std::to_string(e.last_frame) + ")";
        });

    py::class_<WeightVector>(m, "WeightVector")
        .def(py::init<>())
        .def_readwrite("weights", &WeightVector::weights);

    py::class_<DetectionList>(m, "DetectionList")
        .def(py::init<>())
        .def_readwrite("fps", &DetectionList::fps)
        .def_readwrite("frames", &DetectionList::frames)
        .def("times", &DetectionList::times);

    py::class_<DetectorConfig>(m, "DetectorConfig")
        .def(py::init<>())
        .def(py::init([](double p_t, double d_s) { return DetectorConfig{p_t, d_s}; }),
             py::arg("p_t"), py::arg("d_s") = 2.0)
        .def_readwrite("p_t", &DetectorConfig::p_t)
        .def_readwrite("d_s", &DetectorConfig::d_s);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def(py::init([](double lo, double hi, double step) { return GridSpec{lo, hi, step}; }),
             py::arg("lo") = 0.5, py::arg("hi") = 1.0, py::arg("step") = 0.001)
        .def_readwrite("lo", &GridSpec::lo)
        .def_readwrite("hi", &GridSpec::hi)
        .def_readwrite("step", &GridSpec::step)
        .def("points", &GridSpec::points);

    py::class_<EvalCounts>(m, "EvalCounts")
        .def(py::init<>())
        .def(py::init([](std::int64_t tp, std::int64_t fp1, std::int64_t fp2, std::int64_t fn) {
                 return EvalCounts{tp, fp1, fp2, fn};
             }),
             py::arg("tp"), py::arg("fp1"), py::arg("fp2"), py::arg("fn"))
        .def_readwrite("tp", &EvalCounts::tp)
        .def_readwrite("fp1", &EvalCounts::fp1)
        .def_readwrite("fp2", &EvalCounts::fp2)
        .def_readwrite("fn", &EvalCounts::fn)
        .def("__add__", [](const EvalCounts& a, const EvalCounts& b) { return a + b; });

    py::class_<Metrics>(m, "Metrics")
        .def_readonly("precision", &Metrics::precision)
        .def_readonly("recall", &Metrics::recall)
        .def_readonly("f1", &Metrics::f1);

    py::class_<SessionConfig>(m, "SessionConfig")
        .def(py::init<>())
        .def_readwrite("duration_s", &SessionConfig::duration_s)
        .def_readwrite("gesture_mean_s", &SessionConfig::gesture_mean_s)
        .def_readwrite("gesture_std_s", &SessionConfig::gesture_std_s)
        .def_readwrite("mean_gap_s", &SessionConfig::mean_gap_s)
        .def_readwrite("min_gap_s", &SessionConfig::min_gap_s)
        .def_readwrite("noise_std", &SessionConfig::noise_std)
        .def_readwrite("fps", &SessionConfig::fps)
        .def_readwrite("seed", &SessionConfig::seed);

    py::class_<SyntheticSession>(m, "SyntheticSession")
        .def_readonly("events", &SyntheticSession::events)
        .def_readonly("probs", &SyntheticSession::probs);

    py::class_<ShapeState>(m, "ShapeState")
        .def_readonly("t", &ShapeState::t)
        .def_readonly("h", &ShapeState::h)
        .def_readonly("w", &ShapeState::w)
        .def_readonly("c", &ShapeState::c)
        .def("__repr__", [](const ShapeState& s) { return to_string(s); });

    py::class_<ArchSpec>(m, "ArchSpec")
        .def_readonly("name", &ArchSpec::name)
        .def_readonly("reference_params", &ArchSpec::reference_params)
        .def_readonly("alpha", &ArchSpec::alpha)
        .def_readonly("beta", &ArchSpec::beta);

    py::class_<LayerReport>(m, "LayerReport")
        .def_readonly("layer", &LayerReport::layer)
        .def_readonly("pathway", &LayerReport::pathway)
        .def_readonly("kernel", &LayerReport::kernel)
        .def_readonly("output", &LayerReport::output)
        .def_readonly("params", &LayerReport::params);

    m.def("labels_from_annotations",
          [](const std::vector<AnnotationInterval>& intervals, double fps, std::int64_t n) {
              return labels_from_annotations(intervals, fps, n);
          },
          py::arg("intervals"), py::arg("fps"), py::arg("n_frames"),
          "Per-frame labels; frame k is intake iff start <= k/fps <= end for some interval.");
    m.def("downsample_labels", &downsample_labels, py::arg("series"), py::arg("factor"));
    m.def("events_from_labels", &events_from_labels, py::arg("series"));
    m.def("events_from_annotations",
          [](const std::vector<AnnotationInterval>& intervals, double fps, std::int64_t n) {
              return events_from_annotations(intervals, fps, n);
          },
          py::arg("intervals"), py::arg("fps"), py::arg("n_frames"));
    m.def("class_weights",
          [](const std::vector<int>& labels, int n_classes) {
              return class_weights(labels, n_classes);
          },
          py::arg("batch_labels"), py::arg("n_classes"));
    m.def("weighted_cross_entropy",
          [](const std::vector<std::vector<double>>& predicted, const std::vector<int>& truth,
             const WeightVector& weights) {
              return weighted_cross_entropy(predicted, truth, weights);
          },
          py::arg("predicted_probs"), py::arg("true_labels"), py::arg("weights"));

    m.def("threshold_probs", &threshold_probs, py::arg("series"), py::arg("p_t"));
    m.def("detect_maxima", &detect_maxima, py::arg("thresholded"), py::arg("d_frames"));
    m.def("detect", &detect, py::arg("series"), py::arg("config"));
    m.def("min_distance_frames", &min_distance_frames, py::arg("d_s"), py::arg("fps"));
    m.def("tune_threshold",
          [](const std::vector<std::pair<ProbabilitySeries, std::vector<FrameEvent>>>& sessions,
             const GridSpec& grid, double d_s) {
              std::vector<LabeledSeries> converted;
              converted.reserve(sessions.size());
              for (const auto& [probs, events] : sessions) {
                  converted.push_back({probs, events});
              }
              const auto result = tune_threshold(converted, grid, d_s);
              return py::make_tuple(result.threshold, result.f1);
          },
          py::arg("sessions"), py::arg("grid"), py::arg("d_s") = 2.0,
          "Returns (threshold, f1); sessions are (ProbabilitySeries, [FrameEvent]) pairs.");

    m.def("evaluate_detections",
          [](const DetectionList& detections, const std::vector<FrameEvent>& events) {
              return evaluate_detections(detections, events);
          },
          py::arg("detections"), py::arg("gt_events"));
    m.def("compute_metrics", &compute_metrics, py::arg("counts"));
    m.def("uar", &uar, py::arg("predicted"), py::arg("truth"));

    m.def("builtin_arch_names", [] { return builtin_arch_names(); });
    m.def("builtin_arch", &builtin_arch, py::arg("name"));
    m.def("analyze_arch", &analyze_arch, py::arg("spec"));
    m.def("count_params", [](const std::string& name) { return count_params(builtin_arch(name)); },
          py::arg("name"));
    m.def("count_params", py::overload_cast<const ArchSpec&>(&count_params), py::arg("spec"));

    m.def("generate_session", &generate_session, py::arg("config"));
    m.def("generate_dataset", &generate_dataset, py::arg("n_sessions"), py::arg("base_seed"),
          py::arg("config"));

    m.def("render_report_svg",
          [](const ProbabilitySeries& probs, const DetectionList& detections,
             const std::vector<FrameEvent>& events, std::optional<double> threshold) {
              return render_report_svg(probs, detections, events, threshold);
          },
          py::arg("probs"), py::arg("detections"), py::arg("gt_events"),
          py::arg("threshold") = std::nullopt);
}
