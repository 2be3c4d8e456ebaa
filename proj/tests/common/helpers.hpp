#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "sproga/types.hpp"

namespace testing {

using sproga::Index;
using sproga::Matrix;
using sproga::Vector;

inline Matrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, double sd = 1.0) {
  std::normal_distribution<double> normal(0.0, sd);
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
  }
  return m;
}

inline Vector random_vector(std::mt19937_64& rng, Index size, double sd = 1.0) {
  return random_matrix(rng, size, 1, sd).col(0);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Every pair (i, j), i < j.
inline sproga::EdgeGraph complete_graph(Index n) {
  std::vector<sproga::Edge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return sproga::EdgeGraph::from_pairs(n, edges);
}

/// A random graph with a spanning path plus extra random edges and weights in
/// [0.5, 2].
inline sproga::EdgeGraph random_connected_graph(std::mt19937_64& rng, Index n) {
  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<sproga::Edge> edges;
  for (std::size_t i = 1; i < order.size(); ++i) {
    edges.push_back({std::min(order[i - 1], order[i]), std::max(order[i - 1], order[i])});
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const sproga::Edge e{i, j};
      if (std::find(edges.begin(), edges.end(), e) == edges.end() && uniform(rng, 0, 1) < 0.3) {
        edges.push_back(e);
      }
    }
  }
  std::vector<double> w(edges.size());
  for (double& v : w) v = uniform(rng, 0.5, 2.0);
  return sproga::EdgeGraph::from_pairs(n, edges, w);
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  const char* root = std::getenv("SPROGA_TEST_TMP");
  std::filesystem::path dir =
      root ? std::filesystem::path(root) : std::filesystem::temp_directory_path() / "sproga_tests";
  dir /= name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing
