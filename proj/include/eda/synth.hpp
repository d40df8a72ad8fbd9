#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eda/signal_io.hpp"

namespace eda::io {

/// Closed time interval [start_s, end_s] covering one injected artifact.
struct MaInterval {
    double start_s = 0.0;
    double end_s = 0.0;
};

/// Parameters of the seeded synthetic EDA/accelerometer generator.
///
/// Skin conductance = slow baseline drift + SCR events (0.5-2 s rise,
/// exponential decay) + motion artifacts (instantaneous drops with a flat
/// hold and ramp recovery, or non-decaying plateau peaks) + Gaussian noise,
/// clipped at 0. Accelerometer motion bursts are injected per window with
/// probabilities conditioned on whether the window overlaps an artifact, so
/// motion occurs both with and without artifacts.
struct SynthConfig {
    double duration_s = 720.0;
    double scr_rate_per_min = 3.0;
    std::pair<double, double> scr_amplitude_range_us = {0.2, 1.5};
    std::pair<double, double> scr_decay_tau_range_s = {2.0, 8.0};
    double ma_rate_per_min = 1.25;
    double ma_drop_min_us = 0.1;
    std::pair<double, double> ma_step_range_us = {0.3, 2.0};
    std::pair<double, double> ma_hold_range_s = {0.5, 3.0};
    double baseline_drift_scale = 0.5;
    double acc_motion_prob_given_ma = 0.9;
    double acc_motion_prob_given_clean = 0.05;
    double noise_std_us = 0.01;
    std::uint64_t seed = 0;
};

struct SyntheticRecording {
    Recording recording;
    std::vector<MaInterval> ma_intervals;  // sorted by onset, non-overlapping
};

/// Deterministic given config.seed; throws std::invalid_argument when the
/// config is out of range or shorter than one 5-second window.
SyntheticRecording generate_synthetic_recording(const SynthConfig& config);

/// Ground-truth window labels: a window is Artifact iff at least one of its
/// samples falls inside an artifact interval.
std::vector<WindowLabel> window_labels_from_intervals(
    std::size_t n_windows, double sampling_rate_hz,
    const std::vector<MaInterval>& intervals, double start_time_s = 0.0);

}  // namespace eda::io
