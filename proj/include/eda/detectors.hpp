#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "eda/numkit.hpp"
#include "eda/signal_io.hpp"

namespace eda::detectors {

/// Fit failed to converge within its iteration cap or produced non-finite
/// values.
class TrainingDivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Algorithm {
    LogisticRegression,
    Mlp,
    Svm,
    KnnClassifier,
    RandomForest,
    OneClassSvm,
    KnnDistance,
    IsolationForest,
};

/// The first five learn from labels; the last three are anomaly detectors
/// whose anomalies are interpreted as predicted artifacts.
bool is_supervised(Algorithm algorithm);

std::string to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& name);
const std::vector<Algorithm>& all_algorithms();

// Per-algorithm hyperparameter records. Fields beyond the tuned ones are
// training controls with fixed defaults.
struct LogisticHp {
    double l2_lambda = 1e-3;
    int max_epochs = 500;
    double grad_tolerance = 1e-6;
};
struct MlpHp {
    int hidden_layers = 1;  // 1 or 2
    int hidden_width = 16;
    double learning_rate = 0.05;
    int epochs = 200;
    double l2_lambda = 1e-4;
    int batch_size = 32;
};
struct SvmHp {
    double c = 1.0;
    double gamma = 0.05;
};
struct KnnClassifierHp {
    int k = 5;
};
struct RandomForestHp {
    int n_trees = 100;
    int max_depth = 16;
    int min_leaf = 1;
};
struct OneClassSvmHp {
    double nu = 0.25;
    double gamma = 0.05;
};
struct KnnDistanceHp {
    int k = 5;
};
struct IsolationForestHp {
    int n_trees = 100;
    int subsample_size = 256;  // clamped to the row count
};

using Hyperparams =
    std::variant<LogisticHp, MlpHp, SvmHp, KnnClassifierHp, RandomForestHp,
                 OneClassSvmHp, KnnDistanceHp, IsolationForestHp>;

struct DetectorSpec {
    Algorithm algorithm = Algorithm::KnnDistance;
    Hyperparams hp = KnnDistanceHp{};
    std::uint64_t seed = 0;
};

Hyperparams default_hyperparams(Algorithm algorithm);

/// Named access to tunable hyperparameters (used by grid search; integer
/// parameters are rounded). Unknown names throw std::invalid_argument.
double get_param(const Hyperparams& hp, const std::string& name);
void set_param(Hyperparams& hp, const std::string& name, double value);

nlohmann::json hyperparams_to_json(const Hyperparams& hp);
Hyperparams hyperparams_from_json(Algorithm algorithm, const nlohmann::json& j);

/// Immutable fitted scorer. Standardization is fitted on the training rows
/// inside fit and reapplied inside score; scores are real-valued with higher
/// meaning more artifact-like.
class TrainedDetector {
public:
    virtual ~TrainedDetector() = default;
    TrainedDetector(const TrainedDetector&) = delete;
    TrainedDetector& operator=(const TrainedDetector&) = delete;

    virtual Algorithm algorithm() const = 0;
    std::uint64_t seed() const { return seed_; }
    const numkit::Standardizer& standardizer() const { return scaler_; }

    /// One finite score per row. Column count must match training.
    std::vector<double> score(const numkit::Matrix& x) const;
    double score_row(std::span<const double> raw) const;

    /// Versioned JSON document: algorithm id, hyperparameters, parameters,
    /// standardizer.
    nlohmann::json to_json() const;

protected:
    TrainedDetector(numkit::Standardizer scaler, std::uint64_t seed)
        : scaler_(std::move(scaler)), seed_(seed) {}

    virtual double score_standardized(std::span<const double> z) const = 0;
    virtual nlohmann::json hp_json() const = 0;
    virtual nlohmann::json params_json() const = 0;

    numkit::Standardizer scaler_;
    std::uint64_t seed_ = 0;
};

// Supervised fits; y must contain both classes.
std::unique_ptr<TrainedDetector> fit_logistic(
    const numkit::Matrix& x, const std::vector<io::WindowLabel>& y,
    const LogisticHp& hp, std::uint64_t seed);
std::unique_ptr<TrainedDetector> fit_mlp(const numkit::Matrix& x,
                                         const std::vector<io::WindowLabel>& y,
                                         const MlpHp& hp, std::uint64_t seed);
std::unique_ptr<TrainedDetector> fit_svm(const numkit::Matrix& x,
                                         const std::vector<io::WindowLabel>& y,
                                         const SvmHp& hp, std::uint64_t seed);
std::unique_ptr<TrainedDetector> fit_knn_classifier(
    const numkit::Matrix& x, const std::vector<io::WindowLabel>& y,
    const KnnClassifierHp& hp, std::uint64_t seed);
std::unique_ptr<TrainedDetector> fit_random_forest(
    const numkit::Matrix& x, const std::vector<io::WindowLabel>& y,
    const RandomForestHp& hp, std::uint64_t seed);

// Unsupervised fits; labels are never consulted.
std::unique_ptr<TrainedDetector> fit_one_class_svm(const numkit::Matrix& x,
                                                   const OneClassSvmHp& hp,
                                                   std::uint64_t seed);
std::unique_ptr<TrainedDetector> fit_knn_distance(const numkit::Matrix& x,
                                                  const KnnDistanceHp& hp,
                                                  std::uint64_t seed);
std::unique_ptr<TrainedDetector> fit_isolation_forest(
    const numkit::Matrix& x, const IsolationForestHp& hp, std::uint64_t seed);

/// Dispatcher. y may be null for unsupervised algorithms and is ignored by
/// them even when present.
std::unique_ptr<TrainedDetector> fit(const DetectorSpec& spec,
                                     const numkit::Matrix& x,
                                     const std::vector<io::WindowLabel>* y);

std::unique_ptr<TrainedDetector> detector_from_json(const nlohmann::json& j);

}  // namespace eda::detectors
