#include "eda/signal_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace eda::io {

namespace {

constexpr double kCanonicalRate = 8.0;
constexpr double kTimeTolerance = 1e-6;

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& field, long line) {
    if (field.empty()) throw ParseError("empty numeric cell", line);
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("non-numeric cell '" + field + "'", line);
    return value;
}

long parse_long(const std::string& field, long line) {
    if (field.empty()) throw ParseError("empty integer cell", line);
    long value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("non-integer cell '" + field + "'", line);
    return value;
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

WindowLabel majority_label(WindowLabel e1, WindowLabel e2, WindowLabel e3) {
    const int votes = label_value(e1) + label_value(e2) + label_value(e3);
    return votes >= 2 ? WindowLabel::Artifact : WindowLabel::Clean;
}

std::vector<WindowLabel> ExpertLabels::fused() const {
    std::vector<WindowLabel> out;
    out.reserve(labels.size());
    for (const auto& row : labels)
        out.push_back(majority_label(row[0], row[1], row[2]));
    return out;
}

Recording read_recording_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open recording file " + path.string());

    std::string line;
    long line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty recording file", 0);
    ++line_no;
    {
        auto header = split_csv_line(line);
        const std::vector<std::string> expected = {"time_s", "eda_us", "acc_x_g",
                                                   "acc_y_g", "acc_z_g"};
        if (header.size() != expected.size())
            throw ParseError("expected 5 columns in header", line_no);
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (header[i] != expected[i])
                throw ParseError("unexpected header column '" + header[i] + "'",
                                 line_no);
    }

    Recording rec;
    std::vector<double> times;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 5)
            throw ParseError("expected 5 fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        times.push_back(parse_double(fields[0], line_no));
        const double eda = parse_double(fields[1], line_no);
        if (eda < 0.0)
            throw ParseError("negative skin conductance", line_no);
        rec.eda_us.push_back(eda);
        rec.acc_x_g.push_back(parse_double(fields[2], line_no));
        rec.acc_y_g.push_back(parse_double(fields[3], line_no));
        rec.acc_z_g.push_back(parse_double(fields[4], line_no));
    }
    if (times.empty()) throw ParseError("recording has no samples", line_no);

    rec.start_time_s = times[0];
    if (times.size() >= 2) {
        const double step = 1.0 / kCanonicalRate;
        for (std::size_t i = 1; i < times.size(); ++i) {
            const double expected = times[0] + static_cast<double>(i) * step;
            if (std::abs(times[i] - expected) > kTimeTolerance)
                throw std::invalid_argument(
                    "non-canonical sampling: expected a fixed 1/8 s step at row " +
                    std::to_string(i + 2));
        }
    }
    rec.sampling_rate_hz = kCanonicalRate;
    return rec;
}

void write_recording_csv(const std::filesystem::path& path,
                         const Recording& rec) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write recording file " + path.string());
    out << "time_s,eda_us,acc_x_g,acc_y_g,acc_z_g\n";
    const double step = 1.0 / rec.sampling_rate_hz;
    for (std::size_t i = 0; i < rec.n_samples(); ++i) {
        out << format_double(rec.start_time_s + static_cast<double>(i) * step)
            << ',' << format_double(rec.eda_us[i]) << ','
            << format_double(rec.acc_x_g[i]) << ','
            << format_double(rec.acc_y_g[i]) << ','
            << format_double(rec.acc_z_g[i]) << '\n';
    }
}

ExpertLabels read_labels_csv(const std::filesystem::path& path,
                             std::size_t expected_window_count) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open label file " + path.string());

    std::string line;
    long line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty label file", 0);
    ++line_no;
    if (split_csv_line(line) !=
        std::vector<std::string>{"window_index", "expert1", "expert2", "expert3"})
        throw ParseError("unexpected label header", line_no);

    ExpertLabels out;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 4)
            throw ParseError("expected 4 fields", line_no);
        const long idx = parse_long(fields[0], line_no);
        if (idx != static_cast<long>(out.labels.size()))
            throw ParseError("window_index out of order: expected " +
                                 std::to_string(out.labels.size()),
                             line_no);
        std::array<WindowLabel, 3> row{};
        for (int e = 0; e < 3; ++e) {
            const long v = parse_long(fields[static_cast<std::size_t>(e) + 1],
                                      line_no);
            if (v != 0 && v != 1)
                throw ParseError("label value outside {0,1}", line_no);
            row[static_cast<std::size_t>(e)] =
                v == 1 ? WindowLabel::Artifact : WindowLabel::Clean;
        }
        out.labels.push_back(row);
    }
    out.window_count = out.labels.size();
    if (out.window_count != expected_window_count)
        throw std::invalid_argument(
            "label row count " + std::to_string(out.window_count) +
            " does not match expected window count " +
            std::to_string(expected_window_count));
    return out;
}

void write_labels_csv(const std::filesystem::path& path,
                      const std::vector<std::array<WindowLabel, 3>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write label file " + path.string());
    out << "window_index,expert1,expert2,expert3\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        out << i << ',' << label_value(rows[i][0]) << ','
            << label_value(rows[i][1]) << ',' << label_value(rows[i][2]) << '\n';
}

Manifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open manifest " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("manifest JSON: " + std::string(e.what()));
    }
    Manifest m;
    m.name = j.value("name", path.stem().string());
    if (!j.contains("segments") || !j["segments"].is_array())
        throw ParseError("manifest missing 'segments' array");
    for (const auto& e : j["segments"]) {
        ManifestEntry entry;
        entry.file = e.at("file").get<std::string>();
        entry.subject_id = e.at("subject_id").get<std::string>();
        entry.segment_id = e.at("segment_id").get<std::string>();
        entry.activity_tag = e.value("activity_tag", "");
        entry.labels = e.value("labels", "");
        m.entries.push_back(std::move(entry));
    }
    return m;
}

void write_manifest(const std::filesystem::path& path, const Manifest& manifest) {
    nlohmann::json j;
    j["name"] = manifest.name;
    j["segments"] = nlohmann::json::array();
    for (const auto& e : manifest.entries) {
        nlohmann::json je;
        je["file"] = e.file;
        je["subject_id"] = e.subject_id;
        je["segment_id"] = e.segment_id;
        je["activity_tag"] = e.activity_tag;
        if (!e.labels.empty()) je["labels"] = e.labels;
        j["segments"].push_back(je);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write manifest " + path.string());
    out << j.dump(2) << '\n';
}

std::vector<LoadedSegment> load_dataset(
    const std::filesystem::path& manifest_path) {
    const Manifest manifest = read_manifest(manifest_path);
    const auto base = manifest_path.parent_path();
    std::vector<LoadedSegment> out;
    for (const auto& entry : manifest.entries) {
        LoadedSegment seg;
        seg.recording = read_recording_csv(base / entry.file);
        seg.recording.subject_id = entry.subject_id;
        seg.recording.segment_id = entry.segment_id;
        seg.activity_tag = entry.activity_tag;
        if (!entry.labels.empty()) {
            const std::size_t window_count =
                seg.recording.n_samples() /
                static_cast<std::size_t>(seg.recording.sampling_rate_hz * 5.0);
            seg.labels =
                read_labels_csv(base / entry.labels, window_count).fused();
        }
        out.push_back(std::move(seg));
    }
    return out;
}

}  // namespace eda::io
