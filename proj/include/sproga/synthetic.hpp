#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sproga/types.hpp"

namespace sproga {

struct SyntheticData {
  DataMatrix X;
  std::vector<int> labels;
  std::vector<bool> informative;
};

/// K Gaussian clusters centered evenly on a circle, lifted to p_in dimensions
/// by a random 2 x p_in map with orthonormal rows, then padded with p - p_in
/// pure-noise features.
struct GaussianCircleSpec {
  std::vector<int> n_per_cluster;
  double radius = 4.0;
  /// Per-cluster variance of the 2-D cloud.
  std::vector<double> sigma2;
  int p = 200;
  int p_in = 20;
  /// Variance of the noise features. When absent, a sample in cluster i gets
  /// noise of variance sigma2[i] / 2.
  std::optional<double> noise_sigma2;
  std::uint64_t seed = 0;
};

struct HalfMoonSpec {
  int n_per_moon = 500;
  double r = 1.0;
  double a = 1.0;
  double b = 0.5;
  double sigma2 = 0.1;
  int p = 200;
  double noise_sigma2 = 0.01;
  std::uint64_t seed = 0;
};

/// Six equal clusters, r = 4, sigma^2 = 0.5, p = 200, p_in = 20. The scale
/// multiplies the cluster sizes (1200 samples at scale 1).
GaussianCircleSpec setting1_spec(std::uint64_t seed, double scale = 1.0);

/// Uneven sizes 20, 60, 120, 100, 300, 400 (times scale) with per-cluster
/// variances drawn from the positive part of N(1, 1).
GaussianCircleSpec setting2_spec(std::uint64_t seed, double scale = 1.0);

/// Setting 2 procedure at n = 10000, p = 500, p_in = 100.
GaussianCircleSpec setting4_spec(std::uint64_t seed, double scale = 1.0);

/// n = 1000 (times scale), p = 200 half moons.
HalfMoonSpec setting3_spec(std::uint64_t seed, double scale = 1.0);

SyntheticData gen_gaussian_circle(const GaussianCircleSpec& spec);
SyntheticData gen_half_moons(const HalfMoonSpec& spec);
SyntheticData gen_setting4(std::uint64_t seed, double scale = 1.0);

/// 2 x dim matrix with orthonormal rows, from two seeded Gaussian rows.
Matrix random_orthonormal_rows(int dim, std::uint64_t seed);

}  // namespace sproga
