#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eda::io {

/// Parse failure in a CSV/JSON input; carries the offending line when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")"
                                       : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

enum class WindowLabel { Clean = 0, Artifact = 1 };

inline int label_value(WindowLabel l) { return l == WindowLabel::Artifact ? 1 : 0; }

/// Artifact iff at least 2 of the 3 experts said Artifact.
WindowLabel majority_label(WindowLabel e1, WindowLabel e2, WindowLabel e3);

/// Uniformly sampled multichannel trace: skin conductance in microsiemens
/// plus 3-axis acceleration in g. All channels share one length.
struct Recording {
    std::string subject_id;
    std::string segment_id;
    double sampling_rate_hz = 8.0;  // canonical rate
    double start_time_s = 0.0;
    std::vector<double> eda_us;
    std::vector<double> acc_x_g;
    std::vector<double> acc_y_g;
    std::vector<double> acc_z_g;

    std::size_t n_samples() const { return eda_us.size(); }
    double duration_s() const {
        return static_cast<double>(n_samples()) / sampling_rate_hz;
    }
};

/// Per-window votes of the three experts.
struct ExpertLabels {
    std::size_t window_count = 0;
    std::vector<std::array<WindowLabel, 3>> labels;  // window_count rows

    std::vector<WindowLabel> fused() const;
};

/// One dataset entry in the sidecar manifest.
struct ManifestEntry {
    std::string file;          // recording CSV, relative to the manifest
    std::string subject_id;
    std::string segment_id;
    std::string activity_tag;
    std::string labels;        // optional label CSV, relative to the manifest
};

struct Manifest {
    std::string name;
    std::vector<ManifestEntry> entries;
};

/// Reads the canonical recording CSV
/// (`time_s,eda_us,acc_x_g,acc_y_g,acc_z_g`, fixed 1/8 s step).
/// Rejects ragged rows, non-numeric cells and non-canonical rates.
Recording read_recording_csv(const std::filesystem::path& path);

/// Writes the canonical recording CSV losslessly (shortest round-trip floats).
void write_recording_csv(const std::filesystem::path& path, const Recording& rec);

/// Reads `window_index,expert1,expert2,expert3` with 0 = clean, 1 = artifact.
/// Row count must equal expected_window_count.
ExpertLabels read_labels_csv(const std::filesystem::path& path,
                             std::size_t expected_window_count);

void write_labels_csv(const std::filesystem::path& path,
                      const std::vector<std::array<WindowLabel, 3>>& rows);

Manifest read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const Manifest& manifest);

/// Recording plus its fused per-window labels (when a label file is listed).
struct LoadedSegment {
    Recording recording;
    std::optional<std::vector<WindowLabel>> labels;
    std::string activity_tag;
};

/// Loads every manifest entry; label files are fused by majority vote and
/// validated against the recording's window count.
std::vector<LoadedSegment> load_dataset(const std::filesystem::path& manifest_path);

}  // namespace eda::io
