#include "eda/numkit.hpp"

#include <cmath>
#include <stdexcept>

namespace eda::numkit {

Matrix Matrix::take_rows(std::span<const int> indices) const {
    Matrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const auto src = row(static_cast<std::size_t>(indices[i]));
        auto dst = out.row(i);
        for (std::size_t c = 0; c < cols_; ++c) dst[c] = src[c];
    }
    return out;
}

SummaryStats summary_stats(std::span<const double> values) {
    if (values.empty())
        throw std::invalid_argument("summary_stats: empty input");
    double sum = 0.0;
    double mx = values[0];
    double mn = values[0];
    for (double v : values) {
        if (!std::isfinite(v))
            throw std::invalid_argument("summary_stats: non-finite value");
        sum += v;
        if (v > mx) mx = v;
        if (v < mn) mn = v;
    }
    const double n = static_cast<double>(values.size());
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : values) {
        const double d = v - mean;
        ss += d * d;
    }
    SummaryStats s;
    s.mean = mean;
    s.std = std::sqrt(ss / n);
    s.max = mx;
    s.min = mn;
    return s;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("distance: length mismatch");
    double ss = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        ss += d * d;
    }
    return ss;
}

double euclidean_distance(std::span<const double> a,
                          std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

double gaussian_kernel(std::span<const double> a, std::span<const double> b,
                       double gamma) {
    if (!(gamma > 0.0))
        throw std::invalid_argument("gaussian_kernel: gamma must be > 0");
    return std::exp(-gamma * squared_distance(a, b));
}

Standardizer::Standardizer(std::vector<double> means,
                           std::vector<double> scales)
    : means_(std::move(means)), scales_(std::move(scales)) {
    if (means_.size() != scales_.size())
        throw std::invalid_argument("Standardizer: means/scales size mismatch");
    for (double s : scales_)
        if (!(s > 0.0))
            throw std::invalid_argument("Standardizer: scales must be positive");
}

void Standardizer::apply_row(std::span<const double> in,
                             std::span<double> out) const {
    if (in.size() != means_.size() || out.size() != means_.size())
        throw std::invalid_argument("Standardizer: column count mismatch");
    for (std::size_t c = 0; c < in.size(); ++c)
        out[c] = (in[c] - means_[c]) / scales_[c];
}

Matrix Standardizer::apply(const Matrix& x) const {
    if (x.cols() != means_.size())
        throw std::invalid_argument("Standardizer: column count mismatch");
    Matrix z(x.rows(), x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) apply_row(x.row(r), z.row(r));
    return z;
}

Matrix Standardizer::inverse_apply(const Matrix& z) const {
    if (z.cols() != means_.size())
        throw std::invalid_argument("Standardizer: column count mismatch");
    Matrix x(z.rows(), z.cols());
    for (std::size_t r = 0; r < z.rows(); ++r)
        for (std::size_t c = 0; c < z.cols(); ++c)
            x(r, c) = means_[c] + scales_[c] * z(r, c);
    return x;
}

Standardizer fit_standardizer(const Matrix& x) {
    if (x.rows() == 0 || x.cols() == 0)
        throw std::invalid_argument("fit_standardizer: empty matrix");
    const double n = static_cast<double>(x.rows());
    std::vector<double> means(x.cols(), 0.0);
    std::vector<double> scales(x.cols(), 0.0);
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) means[c] += x(r, c);
    for (auto& m : means) m /= n;
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) {
            const double d = x(r, c) - means[c];
            scales[c] += d * d;
        }
    for (auto& s : scales) s = std::max(std::sqrt(s / n), Standardizer::kScaleFloor);
    return Standardizer(std::move(means), std::move(scales));
}

}  // namespace eda::numkit
