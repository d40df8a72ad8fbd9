#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "eda/dsp.hpp"
#include "eda/numkit.hpp"

namespace eda::featurize {

enum class FeatureSet { EdaOnly, AccOnly, All };

enum class FeatureGroup { Eda, Acc };

constexpr std::size_t kEdaFeatureCount = 24;
constexpr std::size_t kAccFeatureCount = 96;
constexpr std::size_t kAllFeatureCount = 120;

struct RowId {
    std::string subject_id;
    std::string segment_id;
    int window_index = 0;
};

/// Windows-by-features matrix with a stable named registry. Column order is
/// fixed: signals SC, dSC, d2SC, DWT-4Hz, DWT-2Hz, DWT-1Hz; stats mean, std,
/// max, min; accelerometer axes x, y, z, magnitude; All = EDA then ACC.
struct FeatureMatrix {
    std::vector<RowId> row_ids;
    std::vector<std::string> feature_names;
    std::vector<FeatureGroup> groups;
    numkit::Matrix values;

    std::size_t rows() const { return values.rows(); }
    std::size_t cols() const { return values.cols(); }
};

/// 24 EDA features of one window: 6 signals x 4 summary stats.
std::array<double, kEdaFeatureCount> eda_features(const dsp::Window& window);

/// 96 accelerometer features: the same 24 per axis plus the magnitude.
std::array<double, kAccFeatureCount> acc_features(const dsp::Window& window);

FeatureMatrix assemble(const std::vector<dsp::Window>& windows, FeatureSet set);

std::vector<std::string> feature_names(FeatureSet set);

std::size_t feature_count(FeatureSet set);

FeatureSet feature_set_from_string(const std::string& name);
std::string to_string(FeatureSet set);

/// CSV exchange format: header `subject_id,segment_id,window_index,<names...>`.
void write_feature_csv(const std::filesystem::path& path,
                       const FeatureMatrix& matrix);
FeatureMatrix read_feature_csv(const std::filesystem::path& path);

}  // namespace eda::featurize
