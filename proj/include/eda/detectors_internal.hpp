#pragma once

// Building blocks behind the detector fits. Exposed so tests can verify the
// optimizers directly (finite-difference gradient checks, KKT conditions,
// brute-force duals) on the full training problem, not just through scores.

#include <cstdint>
#include <vector>

#include "eda/detectors.hpp"
#include "eda/numkit.hpp"
#include "eda/rng.hpp"

namespace eda::detectors::internal {

// ---------------------------------------------------------------------------
// Logistic regression
// ---------------------------------------------------------------------------

/// Mean cross-entropy + (lambda/2)|w|^2; gradients written to grad_w/grad_b
/// when non-null.
double logistic_loss_grad(const numkit::Matrix& xs, const std::vector<int>& y01,
                          std::span<const double> w, double b, double lambda,
                          std::vector<double>* grad_w, double* grad_b);

// ---------------------------------------------------------------------------
// Multi-layer perceptron (ReLU hidden layers, sigmoid output)
// ---------------------------------------------------------------------------

struct MlpNet {
    std::vector<int> layer_sizes;           // input, hidden..., 1
    std::vector<numkit::Matrix> weights;    // [l]: fan_out x fan_in
    std::vector<std::vector<double>> biases;

    static MlpNet init(int input_dim, int hidden_layers, int hidden_width,
                       numkit::RngStream& rng);

    double predict(std::span<const double> z) const;

    /// Mean cross-entropy + (lambda/2)*sum|W|^2 over the given rows.
    double loss(const numkit::Matrix& xs, const std::vector<int>& y01,
                std::span<const int> rows, double lambda) const;

    /// Analytic gradient of loss() in flat-parameter layout.
    std::vector<double> grad(const numkit::Matrix& xs,
                             const std::vector<int>& y01,
                             std::span<const int> rows, double lambda) const;

    std::vector<double> flat_params() const;
    void set_flat_params(std::span<const double> p);

    /// Smallest |pre-activation| over all hidden units and rows; gradient
    /// checks reject problems sitting on a ReLU kink.
    double min_abs_preactivation(const numkit::Matrix& xs,
                                 std::span<const int> rows) const;
};

// ---------------------------------------------------------------------------
// SMO solvers (maximal-violating-pair working sets of 2)
// ---------------------------------------------------------------------------

struct CsvmSolution {
    std::vector<double> alpha;  // box [0, C]
    double bias = 0.0;
    long iterations = 0;
    double kkt_gap = 0.0;  // m(alpha) - M(alpha) at termination
};

/// Soft-margin C-SVM dual on standardized rows with labels in {-1, +1}.
/// Throws TrainingDivergenceError when the KKT gap is still above tol at the
/// iteration cap.
CsvmSolution solve_csvm(const numkit::Matrix& xs, const std::vector<int>& y_pm,
                        double c, double gamma, double tol = 1e-3,
                        long max_iter = -1);

struct OneClassSolution {
    std::vector<double> alpha;  // box [0, 1], sum = nu * n
    double rho = 0.0;
    long iterations = 0;
    double kkt_gap = 0.0;
};

/// nu-formulation one-class SVM dual (box [0,1], sum alpha = nu*n).
OneClassSolution solve_one_class(const numkit::Matrix& xs, double nu,
                                 double gamma, double tol = 1e-3,
                                 long max_iter = -1);

// ---------------------------------------------------------------------------
// Tree structures (random forest and isolation forest)
// ---------------------------------------------------------------------------

/// Flat binary tree; node i is a leaf iff feature[i] < 0.
struct FlatTree {
    std::vector<int> feature;
    std::vector<double> threshold;
    std::vector<int> left;
    std::vector<int> right;
    std::vector<double> leaf_value;  // vote (forest) or node size (isolation)
};

/// Average path length normalizer c(n): 0 for n <= 1, 1 for n == 2, else
/// 2 H(n-1) - 2 (n-1)/n with H(i) ~ ln(i) + 0.5772156649.
double average_path_length(double n);

}  // namespace eda::detectors::internal
