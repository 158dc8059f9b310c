"""Smoke tests for the python bindings."""

import xml.etree.ElementTree as ET

import pytest

import intakedet as idet


def clean_config(seed=0):
    config = idet.SessionConfig()
    config.duration_s = 120.0
    config.gesture_mean_s = 2.0
    config.gesture_std_s = 0.0
    config.mean_gap_s = 5.0
    config.min_gap_s = 2.0
    config.noise_std = 0.0
    config.fps = 8.0
    config.seed = seed
    return config


def test_version():
    assert idet.__version__


def test_metrics_from_count_row():
    metrics = idet.compute_metrics(idet.EvalCounts(824, 23, 83, 167))
    assert metrics.f1 == pytest.approx(0.858, abs=1e-3)
    assert metrics.precision == pytest.approx(0.886, abs=1e-3)


def test_labels_and_events_round_trip():
    intervals = [idet.AnnotationInterval(0.5, 1.0)]
    labels = idet.labels_from_annotations(intervals, 8.0, 12)
    assert [l == idet.Label.intake for l in labels.labels] == [
        k in (4, 5, 6, 7, 8) for k in range(12)
    ]
    events = idet.events_from_labels(labels)
    assert events == [idet.FrameEvent(4, 8)]


def test_class_weights_identity():
    weights = idet.class_weights([0, 0, 0, 0, 0, 0, 1, 1], 2)
    assert weights.weights[0] == pytest.approx(8 / 12)
    assert weights.weights[-1] == pytest.approx(2.0)


def test_end_to_end_clean_session():
    session = idet.generate_session(clean_config(3))
    events = idet.events_from_annotations(session.events, 8.0, len(session.probs.probs))
    detections = idet.detect(session.probs, idet.DetectorConfig(0.5, 2.0))
    assert len(detections.frames) == len(events)
    counts = idet.evaluate_detections(detections, events)
    assert idet.compute_metrics(counts).f1 == 1.0


def test_tune_threshold_prefers_smallest():
    sessions = []
    for seed in range(3):
        session = idet.generate_session(clean_config(seed + 10))
        events = idet.events_from_annotations(
            session.events, 8.0, len(session.probs.probs)
        )
        sessions.append((session.probs, events))
    threshold, f1 = idet.tune_threshold(sessions, idet.GridSpec(0.5, 1.0, 0.01), 2.0)
    assert threshold == pytest.approx(0.5)
    assert f1 == 1.0


def test_builtin_architectures():
    names = idet.builtin_arch_names()
    assert len(names) == 12
    assert idet.count_params("small_2d_cnn_frame") == 4_262_946
    assert idet.count_params("resnet50_slowfast") == 36_509_210
    with pytest.raises(ValueError):
        idet.builtin_arch("not_a_model")


def test_shape_analysis_rows():
    rows = idet.analyze_arch(idet.builtin_arch("small_3d_cnn"))
    by_layer = {row.layer: row.output for row in rows}
    pool4 = by_layer["pool4"]
    assert (pool4.t, pool4.h, pool4.w, pool4.c) == (1, 8, 8, 64)


def test_validation_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        idet.threshold_probs(idet.ProbabilitySeries(8.0, 0, [0.5]), 1.5)


def test_svg_report_parses_as_xml():
    session = idet.generate_session(clean_config(7))
    events = idet.events_from_annotations(session.events, 8.0, len(session.probs.probs))
    detections = idet.detect(session.probs, idet.DetectorConfig(0.5, 2.0))
    svg = idet.render_report_svg(session.probs, detections, events, 0.5)
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    polylines = root.findall(f".//{ns}polyline")
    circles = root.findall(f".//{ns}circle")
    assert len(polylines) == 1
    assert len(circles) == len(detections.frames)
