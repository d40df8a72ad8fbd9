#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eda/signal_io.hpp"

namespace eda::dsp {

/// One 5-second, non-overlapping slice of all channels (40 samples at 8 Hz).
struct Window {
    std::string subject_id;
    std::string segment_id;
    int window_index = 0;
    std::vector<double> eda;
    std::vector<double> acc_x;
    std::vector<double> acc_y;
    std::vector<double> acc_z;
    std::optional<io::WindowLabel> label;
};

/// Haar detail coefficients at the 4 Hz, 2 Hz and 1 Hz scales of an 8 Hz
/// window (lengths 20/10/5 for 40 samples). approx3 is the remaining level-3
/// approximation, kept so the orthonormal energy identity is checkable.
struct DwtDetails {
    std::vector<double> level1;
    std::vector<double> level2;
    std::vector<double> level3;
    std::vector<double> approx3;
};

/// Consecutive non-overlapping 5-second windows; the trailing remainder is
/// dropped. Throws std::invalid_argument when shorter than one window.
std::vector<Window> segment_windows(const io::Recording& recording);

/// Forward difference scaled by the sampling rate: d[i] = (x[i+1] - x[i]) * fs.
std::vector<double> first_derivative(std::span<const double> samples, double fs);

/// first_derivative applied twice; length n - 2.
std::vector<double> second_derivative(std::span<const double> samples, double fs);

/// Orthonormal Haar cascade: at each level d[i] = (a[2i] - a[2i+1]) / sqrt(2),
/// a'[i] = (a[2i] + a[2i+1]) / sqrt(2). Length must be divisible by 8.
DwtDetails haar_dwt(std::span<const double> samples);

/// Inverse of haar_dwt (perfect reconstruction).
std::vector<double> haar_idwt(const DwtDetails& details);

/// Per-sample sqrt(x^2 + y^2 + z^2).
std::vector<double> acc_magnitude(std::span<const double> x,
                                  std::span<const double> y,
                                  std::span<const double> z);

}  // namespace eda::dsp
