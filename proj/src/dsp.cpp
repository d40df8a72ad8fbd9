#include "eda/dsp.hpp"

#include <cmath>
#include <stdexcept>

namespace eda::dsp {

namespace {
constexpr double kWindowSeconds = 5.0;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void haar_step(std::span<const double> in, std::vector<double>& details,
               std::vector<double>& approx) {
    const std::size_t half = in.size() / 2;
    details.resize(half);
    approx.resize(half);
    for (std::size_t i = 0; i < half; ++i) {
        details[i] = (in[2 * i] - in[2 * i + 1]) * kInvSqrt2;
        approx[i] = (in[2 * i] + in[2 * i + 1]) * kInvSqrt2;
    }
}

std::vector<double> haar_unstep(std::span<const double> details,
                                std::span<const double> approx) {
    std::vector<double> out(details.size() * 2);
    for (std::size_t i = 0; i < details.size(); ++i) {
        out[2 * i] = (approx[i] + details[i]) * kInvSqrt2;
        out[2 * i + 1] = (approx[i] - details[i]) * kInvSqrt2;
    }
    return out;
}
}  // namespace

std::vector<Window> segment_windows(const io::Recording& recording) {
    const std::size_t window_len = static_cast<std::size_t>(
        recording.sampling_rate_hz * kWindowSeconds);
    const std::size_t n = recording.n_samples();
    if (n < window_len)
        throw std::invalid_argument("segment_windows: recording shorter than one window");
    const std::size_t n_windows = n / window_len;
    std::vector<Window> out;
    out.reserve(n_windows);
    for (std::size_t w = 0; w < n_windows; ++w) {
        Window win;
        win.subject_id = recording.subject_id;
        win.segment_id = recording.segment_id;
        win.window_index = static_cast<int>(w);
        const std::size_t a = w * window_len;
        const std::size_t b = a + window_len;
        win.eda.assign(recording.eda_us.begin() + a, recording.eda_us.begin() + b);
        win.acc_x.assign(recording.acc_x_g.begin() + a,
                         recording.acc_x_g.begin() + b);
        win.acc_y.assign(recording.acc_y_g.begin() + a,
                         recording.acc_y_g.begin() + b);
        win.acc_z.assign(recording.acc_z_g.begin() + a,
                         recording.acc_z_g.begin() + b);
        out.push_back(std::move(win));
    }
    return out;
}

std::vector<double> first_derivative(std::span<const double> samples,
                                     double fs) {
    if (samples.size() < 2)
        throw std::invalid_argument("first_derivative: need >= 2 samples");
    std::vector<double> out(samples.size() - 1);
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        out[i] = (samples[i + 1] - samples[i]) * fs;
    return out;
}

std::vector<double> second_derivative(std::span<const double> samples,
                                      double fs) {
    if (samples.size() < 3)
        throw std::invalid_argument("second_derivative: need >= 3 samples");
    return first_derivative(first_derivative(samples, fs), fs);
}

DwtDetails haar_dwt(std::span<const double> samples) {
    if (samples.empty() || samples.size() % 8 != 0)
        throw std::invalid_argument("haar_dwt: length must be divisible by 8");
    DwtDetails out;
    std::vector<double> a1, a2;
    haar_step(samples, out.level1, a1);
    haar_step(a1, out.level2, a2);
    haar_step(a2, out.level3, out.approx3);
    return out;
}

std::vector<double> haar_idwt(const DwtDetails& details) {
    auto a2 = haar_unstep(details.level3, details.approx3);
    auto a1 = haar_unstep(details.level2, a2);
    return haar_unstep(details.level1, a1);
}

std::vector<double> acc_magnitude(std::span<const double> x,
                                  std::span<const double> y,
                                  std::span<const double> z) {
    if (x.size() != y.size() || x.size() != z.size())
        throw std::invalid_argument("acc_magnitude: length mismatch");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = std::sqrt(x[i] * x[i] + y[i] * y[i] + z[i] * z[i]);
    return out;
}

}  // namespace eda::dsp
