#include "eda/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eda/rng.hpp"

namespace eda::io {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kWindowSeconds = 5.0;
constexpr double kEdgeMarginS = 5.0;

int poisson_count(numkit::RngStream& rng, double lambda) {
    if (lambda <= 0.0) return 0;
    const double limit = std::exp(-lambda);
    int k = 0;
    double p = 1.0;
    do {
        ++k;
        p *= rng.next_double();
    } while (p > limit);
    return k - 1;
}

void validate(const SynthConfig& c) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("SynthConfig: ") + what);
    };
    require(c.duration_s >= kWindowSeconds, "duration shorter than one window");
    require(c.scr_rate_per_min >= 0.0, "scr_rate_per_min must be >= 0");
    require(c.ma_rate_per_min >= 0.0, "ma_rate_per_min must be >= 0");
    require(c.ma_drop_min_us >= 0.0, "ma_drop_min_us must be >= 0");
    require(c.noise_std_us >= 0.0, "noise_std_us must be >= 0");
    require(c.acc_motion_prob_given_ma >= 0.0 && c.acc_motion_prob_given_ma <= 1.0,
            "acc_motion_prob_given_ma outside [0,1]");
    require(c.acc_motion_prob_given_clean >= 0.0 &&
                c.acc_motion_prob_given_clean <= 1.0,
            "acc_motion_prob_given_clean outside [0,1]");
    require(c.scr_amplitude_range_us.first <= c.scr_amplitude_range_us.second,
            "scr_amplitude_range_us inverted");
    require(c.scr_decay_tau_range_s.first > 0.0 &&
                c.scr_decay_tau_range_s.first <= c.scr_decay_tau_range_s.second,
            "scr_decay_tau_range_s invalid");
    require(c.ma_step_range_us.first <= c.ma_step_range_us.second,
            "ma_step_range_us inverted");
    require(c.ma_hold_range_s.first > 0.0 &&
                c.ma_hold_range_s.first <= c.ma_hold_range_s.second,
            "ma_hold_range_s invalid");
}

double uniform_in(numkit::RngStream& rng, std::pair<double, double> range) {
    return range.first == range.second
               ? range.first
               : rng.uniform(range.first, range.second);
}

}  // namespace

SyntheticRecording generate_synthetic_recording(const SynthConfig& config) {
    validate(config);
    numkit::RngStream rng(config.seed);

    const double fs = 8.0;
    const std::size_t n =
        static_cast<std::size_t>(std::floor(config.duration_s * fs));
    std::vector<double> sc(n, 0.0);

    // Baseline level and slow drift (three slow sinusoids).
    const double base_level = rng.uniform(2.0, 10.0);
    double drift_amp[3], drift_freq[3], drift_phase[3];
    for (int j = 0; j < 3; ++j) {
        drift_amp[j] = rng.uniform(0.3, 1.0);
        drift_freq[j] = rng.uniform(0.0005, 0.005);
        drift_phase[j] = rng.uniform(0.0, 2.0 * kPi);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs;
        double drift = 0.0;
        for (int j = 0; j < 3; ++j)
            drift += drift_amp[j] * std::sin(2.0 * kPi * drift_freq[j] * t +
                                             drift_phase[j]);
        sc[i] = base_level + config.baseline_drift_scale * drift;
    }

    // SCR events: linear rise then exponential decay; events superpose.
    const double duration_min = config.duration_s / 60.0;
    const int n_scr = poisson_count(rng, config.scr_rate_per_min * duration_min);
    for (int e = 0; e < n_scr; ++e) {
        const double onset = rng.uniform(0.0, config.duration_s);
        const double rise = rng.uniform(0.5, 2.0);
        const double amp = uniform_in(rng, config.scr_amplitude_range_us);
        const double tau = uniform_in(rng, config.scr_decay_tau_range_s);
        const std::size_t first =
            static_cast<std::size_t>(std::ceil(onset * fs));
        for (std::size_t i = first; i < n; ++i) {
            const double dt = static_cast<double>(i) / fs - onset;
            const double v = dt <= rise ? amp * dt / rise
                                        : amp * std::exp(-(dt - rise) / tau);
            sc[i] += v;
            if (dt > rise && v < 1e-4) break;
        }
    }

    // Motion artifacts: stratified slots keep events disjoint while the count
    // stays Poisson with the configured rate.
    std::vector<MaInterval> intervals;
    const int n_ma = poisson_count(rng, config.ma_rate_per_min * duration_min);
    const double usable_lo = kEdgeMarginS;
    const double usable_hi = config.duration_s - kEdgeMarginS;
    if (n_ma > 0 && usable_hi > usable_lo) {
        const double slot_len =
            (usable_hi - usable_lo) / static_cast<double>(n_ma);
        for (int e = 0; e < n_ma; ++e) {
            const bool is_drop = rng.next_double() < 0.5;
            const double step =
                std::max(uniform_in(rng, config.ma_step_range_us),
                         config.ma_drop_min_us);
            const double hold = uniform_in(rng, config.ma_hold_range_s);
            const double recovery = is_drop ? rng.uniform(0.5, 1.5) : 0.0;
            const double dur = hold + recovery;
            const double slot_start =
                usable_lo + slot_len * static_cast<double>(e);
            const double max_offset = std::max(slot_len - dur, 0.0);
            const double onset = slot_start + rng.uniform(0.0, max_offset);
            if (onset + dur > usable_hi) continue;

            const std::size_t first =
                static_cast<std::size_t>(std::ceil(onset * fs));
            for (std::size_t i = first; i < n; ++i) {
                const double dt = static_cast<double>(i) / fs - onset;
                if (dt > dur) break;
                if (is_drop) {
                    // Instant drop, flat hold, then linear ramp back.
                    const double v = dt <= hold
                                         ? -step
                                         : -step * (1.0 - (dt - hold) / recovery);
                    sc[i] += v;
                } else if (dt <= hold) {
                    sc[i] += step;  // non-decaying plateau peak
                }
            }
            intervals.push_back({onset, onset + dur});
        }
    }

    // Measurement noise, then the physical floor at 0.
    for (std::size_t i = 0; i < n; ++i) {
        sc[i] += config.noise_std_us * rng.normal();
        if (sc[i] < 0.0) sc[i] = 0.0;
    }

    // Accelerometer: gravity on z plus sensor noise.
    Recording rec;
    rec.sampling_rate_hz = fs;
    rec.start_time_s = 0.0;
    rec.eda_us = std::move(sc);
    rec.acc_x_g.resize(n);
    rec.acc_y_g.resize(n);
    rec.acc_z_g.resize(n);
    const double acc_noise = 0.02;
    for (std::size_t i = 0; i < n; ++i) {
        rec.acc_x_g[i] = acc_noise * rng.normal();
        rec.acc_y_g[i] = acc_noise * rng.normal();
        rec.acc_z_g[i] = 1.0 + acc_noise * rng.normal();
    }

    // Per-window motion bursts with probabilities conditioned on artifact
    // overlap, so motion also occurs where the EDA is unaffected.
    const std::size_t window_len = static_cast<std::size_t>(fs * kWindowSeconds);
    const std::size_t n_windows = n / window_len;
    const auto truth =
        window_labels_from_intervals(n_windows, fs, intervals, 0.0);
    double* axes[3] = {rec.acc_x_g.data(), rec.acc_y_g.data(),
                       rec.acc_z_g.data()};
    for (std::size_t w = 0; w < n_windows; ++w) {
        const double p = truth[w] == WindowLabel::Artifact
                             ? config.acc_motion_prob_given_ma
                             : config.acc_motion_prob_given_clean;
        if (rng.next_double() >= p) continue;
        for (auto* axis : axes) {
            const double amp = rng.uniform(0.3, 1.2);
            const double freq = rng.uniform(1.0, 4.0);
            const double phase = rng.uniform(0.0, 2.0 * kPi);
            for (std::size_t i = w * window_len; i < (w + 1) * window_len; ++i) {
                const double t = static_cast<double>(i) / fs;
                axis[i] += amp * std::sin(2.0 * kPi * freq * t + phase);
            }
        }
    }

    std::sort(intervals.begin(), intervals.end(),
              [](const MaInterval& a, const MaInterval& b) {
                  return a.start_s < b.start_s;
              });
    return {std::move(rec), std::move(intervals)};
}

std::vector<WindowLabel> window_labels_from_intervals(
    std::size_t n_windows, double sampling_rate_hz,
    const std::vector<MaInterval>& intervals, double start_time_s) {
    std::vector<WindowLabel> out(n_windows, WindowLabel::Clean);
    const std::size_t window_len =
        static_cast<std::size_t>(sampling_rate_hz * kWindowSeconds);
    for (std::size_t w = 0; w < n_windows; ++w) {
        const double first_t =
            start_time_s + static_cast<double>(w * window_len) / sampling_rate_hz;
        const double last_t =
            start_time_s +
            static_cast<double>((w + 1) * window_len - 1) / sampling_rate_hz;
        for (const auto& iv : intervals) {
            // Overlap by >= 1 sample: some sample time in [start, end].
            const double lo = std::max(first_t, iv.start_s);
            const double hi = std::min(last_t, iv.end_s);
            if (lo > hi) continue;
            const double first_sample =
                std::ceil((lo - start_time_s) * sampling_rate_hz - 1e-9);
            if (first_sample / sampling_rate_hz + start_time_s <= hi + 1e-12) {
                out[w] = WindowLabel::Artifact;
                break;
            }
        }
    }
    return out;
}

}  // namespace eda::io
