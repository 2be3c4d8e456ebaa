#include "sproga/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "sproga/errors.hpp"

namespace sproga {
namespace {

using Engine = std::mt19937_64;

std::vector<int> scaled_sizes(std::vector<int> sizes, double scale) {
  if (!(scale > 0.0)) throw ParameterError("scale must be > 0");
  for (int& s : sizes) {
    s = std::max(1, static_cast<int>(std::lround(s * scale)));
  }
  return sizes;
}

Matrix orthonormal_rows(int dim, Engine& rng) {
  if (dim < 2) throw ParameterError("an orthonormal 2 x p_in map needs p_in >= 2");
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix W(2, dim);
  for (;;) {
    for (int c = 0; c < dim; ++c) W(0, c) = normal(rng);
    for (int c = 0; c < dim; ++c) W(1, c) = normal(rng);
    // Gram-Schmidt, done twice for a clean second row.
    W.row(0).normalize();
    for (int pass = 0; pass < 2; ++pass) {
      W.row(1) -= W.row(1).dot(W.row(0)) * W.row(0);
    }
    const double norm = W.row(1).norm();
    if (norm > 1e-8) {
      W.row(1) /= norm;
      return W;
    }
  }
}

void validate(const GaussianCircleSpec& spec) {
  if (spec.n_per_cluster.empty()) throw ParameterError("need at least one cluster");
  if (spec.sigma2.size() != spec.n_per_cluster.size()) {
    throw DimensionError("sigma2 needs one variance per cluster");
  }
  for (double v : spec.sigma2) {
    if (!(v > 0.0)) throw ParameterError("cluster variances must be > 0");
  }
  for (int n : spec.n_per_cluster) {
    if (n < 1) throw ParameterError("cluster sizes must be positive");
  }
  if (spec.p_in < 2 || spec.p_in > spec.p) {
    throw ParameterError("need 2 <= p_in <= p");
  }
  if (spec.noise_sigma2 && !(*spec.noise_sigma2 > 0.0)) {
    throw ParameterError("noise variance must be > 0");
  }
}

std::vector<double> positive_normal_draws(std::size_t count, Engine& rng) {
  std::normal_distribution<double> normal(1.0, 1.0);
  std::vector<double> out;
  while (out.size() < count) {
    const double v = normal(rng);
    if (v > 0.0) out.push_back(v);
  }
  return out;
}

}  // namespace

Matrix random_orthonormal_rows(int dim, std::uint64_t seed) {
  Engine rng(seed);
  return orthonormal_rows(dim, rng);
}

GaussianCircleSpec setting1_spec(std::uint64_t seed, double scale) {
  GaussianCircleSpec spec;
  spec.n_per_cluster = scaled_sizes(std::vector<int>(6, 200), scale);
  spec.radius = 4.0;
  spec.sigma2.assign(6, 0.5);
  spec.p = 200;
  spec.p_in = 20;
  spec.seed = seed;
  return spec;
}

GaussianCircleSpec setting2_spec(std::uint64_t seed, double scale) {
  GaussianCircleSpec spec;
  spec.n_per_cluster = scaled_sizes({20, 60, 120, 100, 300, 400}, scale);
  spec.radius = 4.0;
  // The variances come from their own stream so that the data stream of
  // gen_gaussian_circle stays a function of the seed alone.
  Engine rng(seed ^ 0x9e3779b97f4a7c15ULL);
  spec.sigma2 = positive_normal_draws(6, rng);
  spec.p = 200;
  spec.p_in = 20;
  spec.seed = seed;
  return spec;
}

GaussianCircleSpec setting4_spec(std::uint64_t seed, double scale) {
  GaussianCircleSpec spec = setting2_spec(seed, 1.0);
  spec.n_per_cluster = scaled_sizes({200, 600, 1200, 1000, 3000, 4000}, scale);
  spec.p = 500;
  spec.p_in = 100;
  return spec;
}

HalfMoonSpec setting3_spec(std::uint64_t seed, double scale) {
  HalfMoonSpec spec;
  spec.n_per_moon = scaled_sizes({500}, scale).front();
  spec.seed = seed;
  return spec;
}

SyntheticData gen_gaussian_circle(const GaussianCircleSpec& spec) {
  validate(spec);
  Engine rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto K = spec.n_per_cluster.size();
  Index n = 0;
  for (int size : spec.n_per_cluster) n += size;

  Matrix cloud(2, n);
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n));
  Index col = 0;
  for (std::size_t c = 0; c < K; ++c) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(c) / static_cast<double>(K);
    const double cx = spec.radius * std::cos(angle);
    const double cy = spec.radius * std::sin(angle);
    const double sd = std::sqrt(spec.sigma2[c]);
    for (int m = 0; m < spec.n_per_cluster[c]; ++m, ++col) {
      cloud(0, col) = cx + sd * normal(rng);
      cloud(1, col) = cy + sd * normal(rng);
      labels.push_back(static_cast<int>(c));
    }
  }

  const Matrix W = orthonormal_rows(spec.p_in, rng);
  Matrix values(spec.p, n);
  values.topRows(spec.p_in) = W.transpose() * cloud;
  for (Index i = 0; i < n; ++i) {
    const double variance = spec.noise_sigma2
                                ? *spec.noise_sigma2
                                : spec.sigma2[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])] / 2.0;
    const double sd = std::sqrt(variance);
    for (Index k = spec.p_in; k < spec.p; ++k) values(k, i) = sd * normal(rng);
  }

  std::vector<bool> informative(static_cast<std::size_t>(spec.p), false);
  for (int k = 0; k < spec.p_in; ++k) informative[static_cast<std::size_t>(k)] = true;
  return {DataMatrix(std::move(values)), std::move(labels), std::move(informative)};
}

SyntheticData gen_half_moons(const HalfMoonSpec& spec) {
  if (spec.p < 2) throw ParameterError("half moons need p >= 2");
  if (spec.n_per_moon < 1) throw ParameterError("need at least one point per moon");
  if (!(spec.sigma2 >= 0.0) || !(spec.noise_sigma2 >= 0.0)) {
    throw ParameterError("variances must be >= 0");
  }
  Engine rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  const Index n = 2 * static_cast<Index>(spec.n_per_moon);
  const double sd = std::sqrt(spec.sigma2);
  Matrix values(spec.p, n);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const bool second = i >= spec.n_per_moon;
    const double theta = angle(rng);
    const double x = std::abs(spec.r * std::cos(theta));
    const double y = spec.r * std::sin(theta);
    values(0, i) = (second ? spec.a - x : x) + sd * normal(rng);
    values(1, i) = (second ? spec.b - y : y) + sd * normal(rng);
    labels[static_cast<std::size_t>(i)] = second ? 1 : 0;
  }
  const double noise_sd = std::sqrt(spec.noise_sigma2);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 2; k < spec.p; ++k) values(k, i) = noise_sd * normal(rng);
  }
  std::vector<bool> informative(static_cast<std::size_t>(spec.p), false);
  informative[0] = informative[1] = true;
  return {DataMatrix(std::move(values)), std::move(labels), std::move(informative)};
}

SyntheticData gen_setting4(std::uint64_t seed, double scale) {
  return gen_gaussian_circle(setting4_spec(seed, scale));
}

}  // namespace sproga
