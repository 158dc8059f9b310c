#include "intake/csv.hpp"

#include "intake/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

namespace intake::csv {
namespace {

struct Reader {
    std::filesystem::path path;
    std::ifstream stream;
    std::size_t line_no = 0;

    explicit Reader(const std::filesystem::path& p) : path(p), stream(p) {
        if (!stream) {
            throw ValidationError("cannot open " + p.string());
        }
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ValidationError(path.string() + ":" + std::to_string(line_no) + ": " + message);
    }

    bool next_line(std::string& line) {
        while (std::getline(stream, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (!line.empty()) {
                return true;
            }
        }
        return false;
    }

    void expect_header(std::string_view header) {
        std::string line;
        if (!next_line(line)) {
            fail("missing header, expected '" + std::string(header) + "'");
        }
        if (line != header) {
            fail("bad header '" + line + "', expected '" + std::string(header) + "'");
        }
    }
};

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = line.find(',', begin);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(begin));
            return fields;
        }
        fields.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
}

double parse_double(const Reader& reader, std::string_view text, const char* what) {
    double value = 0.0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
        reader.fail(std::string("malformed ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

std::int64_t parse_int(const Reader& reader, std::string_view text, const char* what) {
    std::int64_t value = 0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
        reader.fail(std::string("malformed ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

std::vector<AnnotationInterval> read_annotations(const std::filesystem::path& path) {
    Reader reader(path);
    reader.expect_header("start_s,end_s,label");
    std::vector<AnnotationInterval> intervals;
    std::string line;
    while (reader.next_line(line)) {
        const auto fields = split_fields(line);
        if (fields.size() != 3) {
            reader.fail("expected 3 fields, got " + std::to_string(fields.size()));
        }
        AnnotationInterval interval;
        interval.start_s = parse_double(reader, fields[0], "start_s");
        interval.end_s = parse_double(reader, fields[1], "end_s");
        if (fields[2] != "intake") {
            reader.fail("unknown label '" + std::string(fields[2]) + "'");
        }
        interval.label = Label::intake;
        try {
            validate(interval);
        } catch (const ValidationError& e) {
            reader.fail(e.what());
        }
        intervals.push_back(interval);
    }
    return intervals;
}

FrameLabelSeries read_labels(const std::filesystem::path& path, double fps) {
    Reader reader(path);
    reader.expect_header("frame,label");
    FrameLabelSeries series;
    series.fps = fps;
    std::string line;
    bool first = true;
    std::int64_t expected_frame = 0;
    while (reader.next_line(line)) {
        const auto fields = split_fields(line);
        if (fields.size() != 2) {
            reader.fail("expected 2 fields, got " + std::to_string(fields.size()));
        }
        const std::int64_t frame = parse_int(reader, fields[0], "frame");
        if (first) {
            if (frame < 0) {
                reader.fail("negative frame index");
            }
            series.start_frame = frame;
            expected_frame = frame;
            first = false;
        }
        if (frame != expected_frame) {
            reader.fail("frames must be contiguous; expected " + std::to_string(expected_frame));
        }
        ++expected_frame;
        if (fields[1] == "intake") {
            series.labels.push_back(Label::intake);
        } else if (fields[1] == "non_intake") {
            series.labels.push_back(Label::non_intake);
        } else {
            reader.fail("unknown label '" + std::string(fields[1]) + "'");
        }
    }
    if (series.labels.empty()) {
        reader.fail("no label rows");
    }
    return series;
}

ProbabilitySeries read_probs(const std::filesystem::path& path, double fps) {
    Reader reader(path);
    reader.expect_header("frame,p_intake");
    ProbabilitySeries series;
    series.fps = fps;
    std::string line;
    bool first = true;
    std::int64_t expected_frame = 0;
    while (reader.next_line(line)) {
        const auto fields = split_fields(line);
        if (fields.size() != 2) {
            reader.fail("expected 2 fields, got " + std::to_string(fields.size()));
        }
        const std::int64_t frame = parse_int(reader, fields[0], "frame");
        if (first) {
            if (frame < 0) {
                reader.fail("negative frame index");
            }
            series.start_frame = frame;
            expected_frame = frame;
            first = false;
        }
        if (frame != expected_frame) {
            reader.fail("frames must be contiguous; expected " + std::to_string(expected_frame));
        }
        ++expected_frame;
        const double p = parse_double(reader, fields[1], "p_intake");
        if (!(p >= 0.0 && p <= 1.0)) {
            reader.fail("p_intake " + std::string(fields[1]) + " outside [0, 1]");
        }
        series.probs.push_back(p);
    }
    if (series.probs.empty()) {
        reader.fail("no probability rows");
    }
    return series;
}

DetectionList read_detections(const std::filesystem::path& path, double fps) {
    Reader reader(path);
    reader.expect_header("frame,time_s");
    DetectionList detections;
    detections.fps = fps;
    std::string line;
    while (reader.next_line(line)) {
        const auto fields = split_fields(line);
        if (fields.size() != 2) {
            reader.fail("expected 2 fields, got " + std::to_string(fields.size()));
        }
        const std::int64_t frame = parse_int(reader, fields[0], "frame");
        const double time_s = parse_double(reader, fields[1], "time_s");
        if (std::abs(time_s - static_cast<double>(frame) / fps) > 1e-6) {
            reader.fail("time_s " + std::string(fields[1]) + " disagrees with frame " +
                        std::to_string(frame) + " at " + format_double(fps) + " fps");
        }
        if (!detections.frames.empty() && frame <= detections.frames.back()) {
            reader.fail("detection frames must be strictly ascending");
        }
        detections.frames.push_back(frame);
    }
    return detections;
}

std::string format_annotations(std::span<const AnnotationInterval> intervals) {
    std::ostringstream out;
    out << "start_s,end_s,label\n";
    for (const auto& interval : intervals) {
        out << format_double(interval.start_s) << ',' << format_double(interval.end_s) << ','
            << label_name(interval.label) << '\n';
    }
    return out.str();
}

std::string format_labels(const FrameLabelSeries& series) {
    std::ostringstream out;
    out << "frame,label\n";
    for (std::size_t i = 0; i < series.labels.size(); ++i) {
        out << series.start_frame + static_cast<std::int64_t>(i) << ','
            << label_name(series.labels[i]) << '\n';
    }
    return out.str();
}

std::string format_probs(const ProbabilitySeries& series) {
    std::ostringstream out;
    out << "frame,p_intake\n";
    for (std::size_t i = 0; i < series.probs.size(); ++i) {
        out << series.start_frame + static_cast<std::int64_t>(i) << ','
            << format_double(series.probs[i]) << '\n';
    }
    return out.str();
}

std::string format_detections(const DetectionList& detections) {
    std::ostringstream out;
    out << "frame,time_s\n";
    for (const std::int64_t frame : detections.frames) {
        out << frame << ',' << format_double(static_cast<double>(frame) / detections.fps) << '\n';
    }
    return out.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            throw std::runtime_error("short write to " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace intake::csv
