#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eda/rng.hpp"

namespace eda::numkit {

/// Dense row-major matrix of doubles. Rows are contiguous so detectors can
/// view them as spans without copying.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    double& operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    double operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<double> row(std::size_t r) {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const double> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    /// New matrix containing the given rows, in the given order.
    Matrix take_rows(std::span<const int> indices) const;

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// The four per-window statistics. Population convention: std divides by n.
struct SummaryStats {
    double mean = 0.0;
    double std = 0.0;
    double max = 0.0;
    double min = 0.0;
};

/// Mean, population standard deviation, max and min of a non-empty vector.
/// Throws std::invalid_argument on empty input or non-finite values.
SummaryStats summary_stats(std::span<const double> values);

/// L2 distance. Throws std::invalid_argument on length mismatch.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

double squared_distance(std::span<const double> a, std::span<const double> b);

/// k(a, b) = exp(-gamma * ||a - b||^2), in (0, 1].
/// Throws std::invalid_argument if gamma <= 0 or lengths differ.
double gaussian_kernel(std::span<const double> a, std::span<const double> b,
                       double gamma);

/// Per-column affine transform z = (x - mean) / scale with scale floored at
/// 1e-8 so constant columns map to zero instead of blowing up.
class Standardizer {
public:
    static constexpr double kScaleFloor = 1e-8;

    Standardizer() = default;
    Standardizer(std::vector<double> means, std::vector<double> scales);

    std::size_t dim() const { return means_.size(); }
    const std::vector<double>& means() const { return means_; }
    const std::vector<double>& scales() const { return scales_; }

    Matrix apply(const Matrix& x) const;
    void apply_row(std::span<const double> in, std::span<double> out) const;

    /// mean + scale * z; recovers the original matrix.
    Matrix inverse_apply(const Matrix& z) const;

private:
    std::vector<double> means_;
    std::vector<double> scales_;
};

/// Column means and floored population stds of a non-empty matrix.
Standardizer fit_standardizer(const Matrix& x);

}  // namespace eda::numkit
