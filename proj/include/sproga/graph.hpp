#pragma once

#include <string>
#include <string_view>

#include "sproga/types.hpp"

namespace sproga {

enum class WeightScheme { gaussian_knn, filtered_knn };

WeightScheme parse_weight_scheme(std::string_view text);
std::string to_string(WeightScheme scheme);

struct WeightConfig {
  int k = 10;
  WeightScheme scheme = WeightScheme::filtered_knn;
  /// Kernel decay for gaussian_knn.
  double phi = 0.5;
  /// Fraction of the longest k-NN edges removed by filtered_knn.
  double filter_percentile = 0.10;
};

/// Squared Euclidean distance between samples i and j.
double squared_distance(const DataMatrix& X, Index i, Index j);

/// Symmetrized k-nearest-neighbor graph with unit weights. Every sample
/// contributes its k nearest other samples (squared Euclidean distance, ties
/// broken by smaller index); each undirected pair is stored once.
EdgeGraph knn_edges(const DataMatrix& X, int k);

/// Replaces every weight by exp(-phi * |x_i - x_j|^2).
EdgeGraph gaussian_weights(const DataMatrix& X, const EdgeGraph& G, double phi);

/// k-NN graph with the ceil(percentile * |E|) longest edges removed and unit
/// weights on the rest. Among equally long edges the lexicographically
/// largest pair goes first. The result may be disconnected.
EdgeGraph filtered_knn(const DataMatrix& X, const WeightConfig& cfg);

/// Dispatches on cfg.scheme.
EdgeGraph build_graph(const DataMatrix& X, const WeightConfig& cfg);

}  // namespace sproga
