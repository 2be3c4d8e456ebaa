#include "sproga/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sproga/errors.hpp"

namespace sproga {

WeightScheme parse_weight_scheme(std::string_view text) {
  if (text == "gaussian" || text == "gaussian_knn") return WeightScheme::gaussian_knn;
  if (text == "filtered" || text == "filtered_knn") return WeightScheme::filtered_knn;
  throw ParameterError("unknown weight scheme '" + std::string(text) +
                       "' (expected gaussian or filtered)");
}

std::string to_string(WeightScheme scheme) {
  return scheme == WeightScheme::gaussian_knn ? "gaussian" : "filtered";
}

double squared_distance(const DataMatrix& X, Index i, Index j) {
  return (X.sample(i) - X.sample(j)).squaredNorm();
}

EdgeGraph knn_edges(const DataMatrix& X, int k) {
  const Index n = X.samples();
  if (k < 1 || k >= n) {
    throw ParameterError("k must satisfy 1 <= k < n (k = " + std::to_string(k) +
                         ", n = " + std::to_string(n) + ")");
  }
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  std::vector<double> dist(static_cast<std::size_t>(n));
  std::vector<Index> order(static_cast<std::size_t>(n - 1));
  for (Index i = 0; i < n; ++i) {
    std::size_t m = 0;
    for (Index j = 0; j < n; ++j) {
      dist[static_cast<std::size_t>(j)] = j == i ? 0.0 : squared_distance(X, i, j);
      if (j != i) order[m++] = j;
    }
    const auto closer = [&](Index a, Index b) {
      const double da = dist[static_cast<std::size_t>(a)];
      const double db = dist[static_cast<std::size_t>(b)];
      return da < db || (da == db && a < b);
    };
    std::partial_sort(order.begin(), order.begin() + k, order.end(), closer);
    for (int r = 0; r < k; ++r) {
      const Index j = order[static_cast<std::size_t>(r)];
      pairs.push_back({std::min(i, j), std::max(i, j)});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<double> weights(pairs.size(), 1.0);
  return EdgeGraph(n, std::move(pairs), std::move(weights));
}

EdgeGraph gaussian_weights(const DataMatrix& X, const EdgeGraph& G, double phi) {
  if (!(phi >= 0.0) || !std::isfinite(phi)) {
    throw ParameterError("phi must be finite and >= 0");
  }
  if (G.nodes() != X.samples()) throw DimensionError("graph and data sizes differ");
  std::vector<double> weights(G.size());
  for (std::size_t l = 0; l < G.size(); ++l) {
    const Edge& e = G.edge(l);
    weights[l] = std::exp(-phi * squared_distance(X, e.i, e.j));
  }
  // exp underflows to 0 for very distant pairs; keep the weight positive.
  for (double& w : weights) w = std::max(w, std::numeric_limits<double>::min());
  return G.with_weights(std::move(weights));
}

EdgeGraph filtered_knn(const DataMatrix& X, const WeightConfig& cfg) {
  if (!(cfg.filter_percentile >= 0.0 && cfg.filter_percentile < 1.0)) {
    throw ParameterError("filter percentile must lie in [0, 1)");
  }
  const EdgeGraph knn = knn_edges(X, cfg.k);
  const std::size_t m = knn.size();
  const auto removed = static_cast<std::size_t>(
      std::ceil(cfg.filter_percentile * static_cast<double>(m) - 1e-12));
  if (removed >= m) throw ParameterError("filtering would remove every edge");

  std::vector<double> dist(m);
  for (std::size_t l = 0; l < m; ++l) {
    dist[l] = squared_distance(X, knn.edge(l).i, knn.edge(l).j);
  }
  std::vector<std::size_t> ranked(m);
  std::iota(ranked.begin(), ranked.end(), std::size_t{0});
  // Longest first; on equal length the larger (i, j) is removed first.
  std::sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
    if (dist[a] != dist[b]) return dist[a] > dist[b];
    return knn.edge(b) < knn.edge(a);
  });
  std::vector<bool> keep(m, true);
  for (std::size_t r = 0; r < removed; ++r) keep[ranked[r]] = false;

  std::vector<Edge> edges;
  edges.reserve(m - removed);
  for (std::size_t l = 0; l < m; ++l) {
    if (keep[l]) edges.push_back(knn.edge(l));
  }
  std::vector<double> weights(edges.size(), 1.0);
  return EdgeGraph(X.samples(), std::move(edges), std::move(weights));
}

EdgeGraph build_graph(const DataMatrix& X, const WeightConfig& cfg) {
  switch (cfg.scheme) {
    case WeightScheme::gaussian_knn:
      return gaussian_weights(X, knn_edges(X, cfg.k), cfg.phi);
    case WeightScheme::filtered_knn:
      return filtered_knn(X, cfg);
  }
  throw ParameterError("unknown weight scheme");
}

}  // namespace sproga
