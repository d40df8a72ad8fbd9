#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detail.hpp"
#include "eda/detectors.hpp"

namespace eda::detectors {

bool is_supervised(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::LogisticRegression:
        case Algorithm::Mlp:
        case Algorithm::Svm:
        case Algorithm::KnnClassifier:
        case Algorithm::RandomForest:
            return true;
        case Algorithm::OneClassSvm:
        case Algorithm::KnnDistance:
        case Algorithm::IsolationForest:
            return false;
    }
    throw std::invalid_argument("is_supervised: bad algorithm");
}

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::LogisticRegression: return "logistic";
        case Algorithm::Mlp: return "mlp";
        case Algorithm::Svm: return "svm";
        case Algorithm::KnnClassifier: return "knn_classifier";
        case Algorithm::RandomForest: return "random_forest";
        case Algorithm::OneClassSvm: return "one_class_svm";
        case Algorithm::KnnDistance: return "knn_distance";
        case Algorithm::IsolationForest: return "isolation_forest";
    }
    return "?";
}

Algorithm algorithm_from_string(const std::string& name) {
    for (Algorithm a : all_algorithms())
        if (to_string(a) == name) return a;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> algorithms = {
        Algorithm::LogisticRegression, Algorithm::Mlp,
        Algorithm::Svm,                Algorithm::KnnClassifier,
        Algorithm::RandomForest,       Algorithm::OneClassSvm,
        Algorithm::KnnDistance,        Algorithm::IsolationForest,
    };
    return algorithms;
}

Hyperparams default_hyperparams(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::LogisticRegression: return LogisticHp{};
        case Algorithm::Mlp: return MlpHp{};
        case Algorithm::Svm: return SvmHp{};
        case Algorithm::KnnClassifier: return KnnClassifierHp{};
        case Algorithm::RandomForest: return RandomForestHp{};
        case Algorithm::OneClassSvm: return OneClassSvmHp{};
        case Algorithm::KnnDistance: return KnnDistanceHp{};
        case Algorithm::IsolationForest: return IsolationForestHp{};
    }
    throw std::invalid_argument("default_hyperparams: bad algorithm");
}

namespace {

int as_int(double value) { return static_cast<int>(std::llround(value)); }

[[noreturn]] void bad_param(const std::string& name) {
    throw std::invalid_argument("unknown hyperparameter '" + name + "'");
}

}  // namespace

double get_param(const Hyperparams& hp, const std::string& name) {
    return std::visit(
        [&](const auto& h) -> double {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, LogisticHp>) {
                if (name == "l2_lambda") return h.l2_lambda;
            } else if constexpr (std::is_same_v<T, MlpHp>) {
                if (name == "hidden_layers") return h.hidden_layers;
                if (name == "hidden_width") return h.hidden_width;
                if (name == "learning_rate") return h.learning_rate;
                if (name == "epochs") return h.epochs;
                if (name == "l2_lambda") return h.l2_lambda;
            } else if constexpr (std::is_same_v<T, SvmHp>) {
                if (name == "c") return h.c;
                if (name == "gamma") return h.gamma;
            } else if constexpr (std::is_same_v<T, KnnClassifierHp> ||
                                 std::is_same_v<T, KnnDistanceHp>) {
                if (name == "k") return h.k;
            } else if constexpr (std::is_same_v<T, RandomForestHp>) {
                if (name == "n_trees") return h.n_trees;
                if (name == "max_depth") return h.max_depth;
                if (name == "min_leaf") return h.min_leaf;
            } else if constexpr (std::is_same_v<T, OneClassSvmHp>) {
                if (name == "nu") return h.nu;
                if (name == "gamma") return h.gamma;
            } else if constexpr (std::is_same_v<T, IsolationForestHp>) {
                if (name == "n_trees") return h.n_trees;
                if (name == "subsample_size") return h.subsample_size;
            }
            bad_param(name);
        },
        hp);
}

void set_param(Hyperparams& hp, const std::string& name, double value) {
    std::visit(
        [&](auto& h) {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, LogisticHp>) {
                if (name == "l2_lambda") { h.l2_lambda = value; return; }
            } else if constexpr (std::is_same_v<T, MlpHp>) {
                if (name == "hidden_layers") { h.hidden_layers = as_int(value); return; }
                if (name == "hidden_width") { h.hidden_width = as_int(value); return; }
                if (name == "learning_rate") { h.learning_rate = value; return; }
                if (name == "epochs") { h.epochs = as_int(value); return; }
                if (name == "l2_lambda") { h.l2_lambda = value; return; }
            } else if constexpr (std::is_same_v<T, SvmHp>) {
                if (name == "c") { h.c = value; return; }
                if (name == "gamma") { h.gamma = value; return; }
            } else if constexpr (std::is_same_v<T, KnnClassifierHp> ||
                                 std::is_same_v<T, KnnDistanceHp>) {
                if (name == "k") { h.k = as_int(value); return; }
            } else if constexpr (std::is_same_v<T, RandomForestHp>) {
                if (name == "n_trees") { h.n_trees = as_int(value); return; }
                if (name == "max_depth") { h.max_depth = as_int(value); return; }
                if (name == "min_leaf") { h.min_leaf = as_int(value); return; }
            } else if constexpr (std::is_same_v<T, OneClassSvmHp>) {
                if (name == "nu") { h.nu = value; return; }
                if (name == "gamma") { h.gamma = value; return; }
            } else if constexpr (std::is_same_v<T, IsolationForestHp>) {
                if (name == "n_trees") { h.n_trees = as_int(value); return; }
                if (name == "subsample_size") { h.subsample_size = as_int(value); return; }
            }
            bad_param(name);
        },
        hp);
}

nlohmann::json hyperparams_to_json(const Hyperparams& hp) {
    nlohmann::json j;
    std::visit(
        [&](const auto& h) {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, LogisticHp>) {
                j["l2_lambda"] = h.l2_lambda;
                j["max_epochs"] = h.max_epochs;
                j["grad_tolerance"] = h.grad_tolerance;
            } else if constexpr (std::is_same_v<T, MlpHp>) {
                j["hidden_layers"] = h.hidden_layers;
                j["hidden_width"] = h.hidden_width;
                j["learning_rate"] = h.learning_rate;
                j["epochs"] = h.epochs;
                j["l2_lambda"] = h.l2_lambda;
                j["batch_size"] = h.batch_size;
            } else if constexpr (std::is_same_v<T, SvmHp>) {
                j["c"] = h.c;
                j["gamma"] = h.gamma;
            } else if constexpr (std::is_same_v<T, KnnClassifierHp> ||
                                 std::is_same_v<T, KnnDistanceHp>) {
                j["k"] = h.k;
            } else if constexpr (std::is_same_v<T, RandomForestHp>) {
                j["n_trees"] = h.n_trees;
                j["max_depth"] = h.max_depth;
                j["min_leaf"] = h.min_leaf;
            } else if constexpr (std::is_same_v<T, OneClassSvmHp>) {
                j["nu"] = h.nu;
                j["gamma"] = h.gamma;
            } else if constexpr (std::is_same_v<T, IsolationForestHp>) {
                j["n_trees"] = h.n_trees;
                j["subsample_size"] = h.subsample_size;
            }
        },
        hp);
    return j;
}

Hyperparams hyperparams_from_json(Algorithm algorithm,
                                  const nlohmann::json& j) {
    Hyperparams hp = default_hyperparams(algorithm);
    std::visit(
        [&](auto& h) {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, LogisticHp>) {
                h.l2_lambda = j.value("l2_lambda", h.l2_lambda);
                h.max_epochs = j.value("max_epochs", h.max_epochs);
                h.grad_tolerance = j.value("grad_tolerance", h.grad_tolerance);
            } else if constexpr (std::is_same_v<T, MlpHp>) {
                h.hidden_layers = j.value("hidden_layers", h.hidden_layers);
                h.hidden_width = j.value("hidden_width", h.hidden_width);
                h.learning_rate = j.value("learning_rate", h.learning_rate);
                h.epochs = j.value("epochs", h.epochs);
                h.l2_lambda = j.value("l2_lambda", h.l2_lambda);
                h.batch_size = j.value("batch_size", h.batch_size);
            } else if constexpr (std::is_same_v<T, SvmHp>) {
                h.c = j.value("c", h.c);
                h.gamma = j.value("gamma", h.gamma);
            } else if constexpr (std::is_same_v<T, KnnClassifierHp> ||
                                 std::is_same_v<T, KnnDistanceHp>) {
                h.k = j.value("k", h.k);
            } else if constexpr (std::is_same_v<T, RandomForestHp>) {
                h.n_trees = j.value("n_trees", h.n_trees);
                h.max_depth = j.value("max_depth", h.max_depth);
                h.min_leaf = j.value("min_leaf", h.min_leaf);
            } else if constexpr (std::is_same_v<T, OneClassSvmHp>) {
                h.nu = j.value("nu", h.nu);
                h.gamma = j.value("gamma", h.gamma);
            } else if constexpr (std::is_same_v<T, IsolationForestHp>) {
                h.n_trees = j.value("n_trees", h.n_trees);
                h.subsample_size = j.value("subsample_size", h.subsample_size);
            }
        },
        hp);
    return hp;
}

std::vector<double> TrainedDetector::score(const numkit::Matrix& x) const {
    if (x.rows() == 0) return {};
    if (x.cols() != scaler_.dim())
        throw std::invalid_argument(
            "score: column count does not match training");
    std::vector<double> out(x.rows());
    std::vector<double> z(x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        scaler_.apply_row(x.row(r), z);
        out[r] = score_standardized(z);
    }
    return out;
}

double TrainedDetector::score_row(std::span<const double> raw) const {
    if (raw.size() != scaler_.dim())
        throw std::invalid_argument(
            "score_row: column count does not match training");
    std::vector<double> z(raw.size());
    scaler_.apply_row(raw, z);
    return score_standardized(z);
}

nlohmann::json TrainedDetector::to_json() const {
    nlohmann::json j;
    j["format_version"] = detail::kFormatVersion;
    j["algorithm"] = detectors::to_string(algorithm());
    j["seed"] = seed_;
    j["hyperparameters"] = hp_json();
    j["standardizer"] = detail::standardizer_json(scaler_);
    j["params"] = params_json();
    return j;
}

std::unique_ptr<TrainedDetector> fit(const DetectorSpec& spec,
                                     const numkit::Matrix& x,
                                     const std::vector<io::WindowLabel>* y) {
    const bool supervised = is_supervised(spec.algorithm);
    if (supervised && y == nullptr)
        throw std::invalid_argument("fit: supervised algorithm requires labels");
    switch (spec.algorithm) {
        case Algorithm::LogisticRegression:
            return fit_logistic(x, *y, std::get<LogisticHp>(spec.hp), spec.seed);
        case Algorithm::Mlp:
            return fit_mlp(x, *y, std::get<MlpHp>(spec.hp), spec.seed);
        case Algorithm::Svm:
            return fit_svm(x, *y, std::get<SvmHp>(spec.hp), spec.seed);
        case Algorithm::KnnClassifier:
            return fit_knn_classifier(x, *y, std::get<KnnClassifierHp>(spec.hp),
                                      spec.seed);
        case Algorithm::RandomForest:
            return fit_random_forest(x, *y, std::get<RandomForestHp>(spec.hp),
                                     spec.seed);
        case Algorithm::OneClassSvm:
            return fit_one_class_svm(x, std::get<OneClassSvmHp>(spec.hp),
                                     spec.seed);
        case Algorithm::KnnDistance:
            return fit_knn_distance(x, std::get<KnnDistanceHp>(spec.hp),
                                    spec.seed);
        case Algorithm::IsolationForest:
            return fit_isolation_forest(x, std::get<IsolationForestHp>(spec.hp),
                                        spec.seed);
    }
    throw std::invalid_argument("fit: bad algorithm");
}

std::unique_ptr<TrainedDetector> detector_from_json(const nlohmann::json& j) {
    if (j.value("format_version", 0) != detail::kFormatVersion)
        throw std::invalid_argument("unsupported detector format_version");
    const Algorithm alg =
        algorithm_from_string(j.at("algorithm").get<std::string>());
    switch (alg) {
        case Algorithm::LogisticRegression: return detail::logistic_from_json(j);
        case Algorithm::Mlp: return detail::mlp_from_json(j);
        case Algorithm::Svm: return detail::svm_from_json(j);
        case Algorithm::KnnClassifier: return detail::knn_classifier_from_json(j);
        case Algorithm::RandomForest: return detail::random_forest_from_json(j);
        case Algorithm::OneClassSvm: return detail::one_class_svm_from_json(j);
        case Algorithm::KnnDistance: return detail::knn_distance_from_json(j);
        case Algorithm::IsolationForest:
            return detail::isolation_forest_from_json(j);
    }
    throw std::invalid_argument("detector_from_json: bad algorithm");
}

namespace detail {

std::vector<int> to_y01(const std::vector<io::WindowLabel>& y,
                        std::size_t expected_rows, bool require_both_classes) {
    if (y.size() != expected_rows)
        throw std::invalid_argument("labels do not match row count");
    std::vector<int> out(y.size());
    int pos = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        out[i] = io::label_value(y[i]);
        pos += out[i];
    }
    if (require_both_classes && (pos == 0 || pos == static_cast<int>(y.size())))
        throw std::invalid_argument(
            "supervised fit requires both classes in the labels");
    return out;
}

nlohmann::json standardizer_json(const numkit::Standardizer& s) {
    nlohmann::json j;
    j["means"] = s.means();
    j["scales"] = s.scales();
    return j;
}

numkit::Standardizer read_standardizer(const nlohmann::json& doc) {
    const auto& s = doc.at("standardizer");
    return numkit::Standardizer(s.at("means").get<std::vector<double>>(),
                                s.at("scales").get<std::vector<double>>());
}

nlohmann::json matrix_to_json(const numkit::Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (double v : m.row(r)) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

numkit::Matrix matrix_from_json(const nlohmann::json& rows) {
    if (!rows.is_array()) throw std::invalid_argument("expected matrix array");
    const std::size_t r = rows.size();
    const std::size_t c = r > 0 ? rows[0].size() : 0;
    numkit::Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged matrix in JSON");
        for (std::size_t j2 = 0; j2 < c; ++j2) m(i, j2) = rows[i][j2].get<double>();
    }
    return m;
}

}  // namespace detail
}  // namespace eda::detectors
