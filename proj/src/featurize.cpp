#include "eda/featurize.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace eda::featurize {

namespace {

const char* kSignalNames[6] = {"amp", "d1", "d2", "dwt4hz", "dwt2hz", "dwt1hz"};
const char* kStatNames[4] = {"mean", "std", "max", "min"};

void put_stats(std::span<const double> values, double* out) {
    const auto s = numkit::summary_stats(values);
    out[0] = s.mean;
    out[1] = s.std;
    out[2] = s.max;
    out[3] = s.min;
}

/// The 6 signals x 4 stats of one channel, in registry order.
void channel_features(std::span<const double> samples, double fs, double* out) {
    put_stats(samples, out);
    const auto d1 = dsp::first_derivative(samples, fs);
    put_stats(d1, out + 4);
    put_stats(dsp::first_derivative(d1, fs), out + 8);
    const auto dwt = dsp::haar_dwt(samples);
    put_stats(dwt.level1, out + 12);
    put_stats(dwt.level2, out + 16);
    put_stats(dwt.level3, out + 20);
}

std::vector<std::string> channel_names(const std::string& channel) {
    std::vector<std::string> out;
    out.reserve(24);
    for (const char* signal : kSignalNames)
        for (const char* stat : kStatNames)
            out.push_back(channel + "_" + signal + "_" + stat);
    return out;
}

std::vector<std::string> split_line(const std::string& line) {
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

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

std::array<double, kEdaFeatureCount> eda_features(const dsp::Window& window) {
    std::array<double, kEdaFeatureCount> out{};
    channel_features(window.eda, 8.0, out.data());
    return out;
}

std::array<double, kAccFeatureCount> acc_features(const dsp::Window& window) {
    std::array<double, kAccFeatureCount> out{};
    channel_features(window.acc_x, 8.0, out.data());
    channel_features(window.acc_y, 8.0, out.data() + 24);
    channel_features(window.acc_z, 8.0, out.data() + 48);
    const auto mag =
        dsp::acc_magnitude(window.acc_x, window.acc_y, window.acc_z);
    channel_features(mag, 8.0, out.data() + 72);
    return out;
}

std::size_t feature_count(FeatureSet set) {
    switch (set) {
        case FeatureSet::EdaOnly: return kEdaFeatureCount;
        case FeatureSet::AccOnly: return kAccFeatureCount;
        case FeatureSet::All: return kAllFeatureCount;
    }
    throw std::invalid_argument("feature_count: bad FeatureSet");
}

std::vector<std::string> feature_names(FeatureSet set) {
    std::vector<std::string> out;
    if (set == FeatureSet::EdaOnly || set == FeatureSet::All) {
        auto n = channel_names("eda");
        out.insert(out.end(), n.begin(), n.end());
    }
    if (set == FeatureSet::AccOnly || set == FeatureSet::All) {
        for (const char* axis : {"accx", "accy", "accz", "accmag"}) {
            auto n = channel_names(axis);
            out.insert(out.end(), n.begin(), n.end());
        }
    }
    return out;
}

FeatureMatrix assemble(const std::vector<dsp::Window>& windows,
                       FeatureSet set) {
    if (windows.empty())
        throw std::invalid_argument("assemble: empty window list");
    FeatureMatrix fm;
    fm.feature_names = feature_names(set);
    const std::size_t cols = fm.feature_names.size();
    fm.groups.reserve(cols);
    for (const auto& name : fm.feature_names)
        fm.groups.push_back(name.rfind("eda", 0) == 0 ? FeatureGroup::Eda
                                                      : FeatureGroup::Acc);
    fm.values = numkit::Matrix(windows.size(), cols);
    fm.row_ids.reserve(windows.size());
    for (std::size_t r = 0; r < windows.size(); ++r) {
        const auto& w = windows[r];
        fm.row_ids.push_back({w.subject_id, w.segment_id, w.window_index});
        auto row = fm.values.row(r);
        std::size_t at = 0;
        if (set == FeatureSet::EdaOnly || set == FeatureSet::All) {
            const auto f = eda_features(w);
            for (double v : f) row[at++] = v;
        }
        if (set == FeatureSet::AccOnly || set == FeatureSet::All) {
            const auto f = acc_features(w);
            for (double v : f) row[at++] = v;
        }
    }
    return fm;
}

FeatureSet feature_set_from_string(const std::string& name) {
    if (name == "eda") return FeatureSet::EdaOnly;
    if (name == "acc") return FeatureSet::AccOnly;
    if (name == "all") return FeatureSet::All;
    throw std::invalid_argument("unknown feature set '" + name +
                                "' (expected eda, acc or all)");
}

std::string to_string(FeatureSet set) {
    switch (set) {
        case FeatureSet::EdaOnly: return "eda";
        case FeatureSet::AccOnly: return "acc";
        case FeatureSet::All: return "all";
    }
    return "?";
}

void write_feature_csv(const std::filesystem::path& path,
                       const FeatureMatrix& matrix) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write feature CSV " + path.string());
    out << "subject_id,segment_id,window_index";
    for (const auto& name : matrix.feature_names) out << ',' << name;
    out << '\n';
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        const auto& id = matrix.row_ids[r];
        out << id.subject_id << ',' << id.segment_id << ',' << id.window_index;
        for (double v : matrix.values.row(r)) out << ',' << format_double(v);
        out << '\n';
    }
}

FeatureMatrix read_feature_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw io::ParseError("cannot open feature CSV " + path.string());
    std::string line;
    long line_no = 0;
    if (!std::getline(in, line)) throw io::ParseError("empty feature CSV", 0);
    ++line_no;
    auto header = split_line(line);
    if (header.size() < 4 || header[0] != "subject_id" ||
        header[1] != "segment_id" || header[2] != "window_index")
        throw io::ParseError("unexpected feature CSV header", line_no);

    FeatureMatrix fm;
    fm.feature_names.assign(header.begin() + 3, header.end());
    for (const auto& name : fm.feature_names)
        fm.groups.push_back(name.rfind("eda", 0) == 0 ? FeatureGroup::Eda
                                                      : FeatureGroup::Acc);
    const std::size_t cols = fm.feature_names.size();
    std::vector<double> data;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_line(line);
        if (fields.size() != cols + 3)
            throw io::ParseError("wrong field count in feature CSV", line_no);
        RowId id;
        id.subject_id = fields[0];
        id.segment_id = fields[1];
        {
            int idx = 0;
            auto [p, ec] = std::from_chars(
                fields[2].data(), fields[2].data() + fields[2].size(), idx);
            if (ec != std::errc{})
                throw io::ParseError("bad window_index", line_no);
            id.window_index = idx;
        }
        fm.row_ids.push_back(std::move(id));
        for (std::size_t c = 0; c < cols; ++c) {
            double v = 0.0;
            const auto& f = fields[c + 3];
            auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc{} || p != f.data() + f.size())
                throw io::ParseError("bad feature value '" + f + "'", line_no);
            data.push_back(v);
        }
    }
    fm.values = numkit::Matrix(fm.row_ids.size(), cols);
    fm.values.data() = std::move(data);
    return fm;
}

}  // namespace eda::featurize
