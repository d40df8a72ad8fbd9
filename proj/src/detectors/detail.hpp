#pragma once

// Shared plumbing between the detector translation units.

#include <memory>
#include <vector>

#include <json.hpp>

#include "eda/detectors.hpp"
#include "eda/numkit.hpp"

namespace eda::detectors::detail {

constexpr int kFormatVersion = 1;

/// Labels as 0/1 ints; throws when a supervised fit sees a single class.
std::vector<int> to_y01(const std::vector<io::WindowLabel>& y,
                        std::size_t expected_rows, bool require_both_classes);

numkit::Standardizer read_standardizer(const nlohmann::json& doc);
nlohmann::json standardizer_json(const numkit::Standardizer& s);

numkit::Matrix matrix_from_json(const nlohmann::json& rows);
nlohmann::json matrix_to_json(const numkit::Matrix& m);

// Per-algorithm deserializers; doc is the full versioned envelope.
std::unique_ptr<TrainedDetector> logistic_from_json(const nlohmann::json& doc);
std::unique_ptr<TrainedDetector> mlp_from_json(const nlohmann::json& doc);
std::unique_ptr<TrainedDetector> svm_from_json(const nlohmann::json& doc);
std::unique_ptr<TrainedDetector> knn_classifier_from_json(const nlohmann::json& doc);
std::unique_ptr<TrainedDetector> random_forest_from_json(const nlohmann::json& doc);
std::unique_ptr<TrainedDetector> one_class_svm_from_json(const nlohmann::json& doc);
std::unique_ptr<TrainedDetector> knn_distance_from_json(const nlohmann::json& doc);
std::unique_ptr<TrainedDetector> isolation_forest_from_json(const nlohmann::json& doc);

}  // namespace eda::detectors::detail
