#include "sproga/model_selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sproga/errors.hpp"

namespace sproga {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LambdaRange lambda_range(const DataMatrix& X, const EdgeGraph& G) {
  if (G.empty()) throw ParameterError("lambda range needs a nonempty graph");
  if (G.nodes() != X.samples()) throw DimensionError("graph and data sizes differ");
  LambdaRange range;
  range.lambda_min = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < G.size(); ++l) {
    const Edge& e = G.edge(l);
    const double ratio = (X.sample(e.i) - X.sample(e.j)).norm() / (2.0 * G.weight(l));
    range.lambda_min = std::min(range.lambda_min, ratio);
    range.lambda_max = std::max(range.lambda_max, ratio);
  }
  range.degenerate = range.lambda_max == 0.0;
  return range;
}

double gamma_max(const DataMatrix& X, const Vector& nu) {
  if (nu.size() != X.features()) throw DimensionError("nu length differs from p");
  if ((nu.array() <= 0.0).any()) throw ParameterError("nu must be positive");
  return (X.values().rowwise().norm().array() / nu.array()).maxCoeff();
}

ParamRange param_range(const DataMatrix& X, const EdgeGraph& G, const Vector& nu) {
  const LambdaRange lr = lambda_range(X, G);
  return {lr.lambda_min, lr.lambda_max, gamma_max(X, nu), lr.degenerate};
}

std::vector<double> geometric_grid(double upper, double lower_bound, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw ParameterError("rho must lie in (0, 1)");
  if (!(upper > 0.0)) throw ParameterError("grid upper end must be > 0");
  std::vector<double> grid{upper};
  if (upper <= lower_bound) return grid;
  // Powers are taken directly so that consecutive ratios are rho up to one
  // rounding, with no drift along long grids.
  for (int i = 1;; ++i) {
    const double value = upper * std::pow(rho, i);
    if (value < lower_bound || value <= 0.0) break;
    grid.push_back(value);
  }
  return grid;
}

std::vector<double> geometric_grid_n(double upper, double rho, std::size_t count) {
  if (!(rho > 0.0 && rho < 1.0)) throw ParameterError("rho must lie in (0, 1)");
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid.push_back(upper * std::pow(rho, static_cast<double>(i)));
  }
  return grid;
}

double max_edge_length(const DataMatrix& X, const EdgeGraph& G) {
  double longest = 0.0;
  for (const Edge& e : G.edges()) {
    longest = std::max(longest, (X.sample(e.i) - X.sample(e.j)).norm());
  }
  return longest;
}

namespace {

template <typename Fused>
ClusterLabels components(const Matrix& U, const EdgeGraph& G, double tol, Fused&& fused) {
  if (!(tol >= 0.0)) throw ParameterError("cluster tolerance must be >= 0");
  if (U.cols() != G.nodes()) throw DimensionError("centers and graph sizes differ");
  const auto n = static_cast<std::size_t>(U.cols());
  DisjointSets sets(n);
  Vector diff(U.rows());
  for (std::size_t l = 0; l < G.size(); ++l) {
    const Edge& e = G.edge(l);
    diff = U.col(e.i) - U.col(e.j);
    if (fused(diff, l)) {
      sets.unite(static_cast<std::size_t>(e.i), static_cast<std::size_t>(e.j));
    }
  }
  ClusterLabels out;
  out.labels.assign(n, -1);
  std::vector<int> label_of_root(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (label_of_root[root] < 0) label_of_root[root] = out.num_clusters++;
    out.labels[v] = label_of_root[root];
  }
  return out;
}

}  // namespace

ClusterLabels extract_clusters(const Matrix& U, const EdgeGraph& G, double tol,
                               double scale) {
  const double threshold = tol * scale;
  return components(U, G, tol,
                    [&](const Vector& d, std::size_t) { return d.norm() <= threshold; });
}

ClusterLabels extract_clusters(const Matrix& U, const EdgeGraph& G, double tol,
                               double scale, SmoothedFusion smoothing) {
  if (!(smoothing.mu >= 0.0)) throw ParameterError("mu must be >= 0");
  if (!(smoothing.lambda >= 0.0)) throw ParameterError("lambda must be >= 0");
  const double threshold = tol * scale;
  const Norm dual = dual_of(smoothing.q);
  return components(U, G, tol, [&](const Vector& d, std::size_t l) {
    if (d.norm() <= threshold) return true;
    const bool stiff = 2.0 * smoothing.lambda * G.weight(l) >= smoothing.mu;
    return stiff && norm_of(d, dual) <= smoothing.mu;
  });
}

std::vector<bool> selected_features(const CenterMatrix& centers, double tolerance) {
  std::vector<bool> mask(static_cast<std::size_t>(centers.features()));
  for (Index k = 0; k < centers.features(); ++k) {
    mask[static_cast<std::size_t>(k)] = centers.values().row(k).norm() > tolerance;
  }
  return mask;
}

std::vector<bool> selected_features(const ClusterResult& result) {
  return result.selected_features;
}

std::vector<PathPoint> path_sweep(const DataMatrix& X, const EdgeGraph& G,
                                  const SolverConfig& base,
                                  const std::vector<double>& lambda_grid,
                                  const std::vector<double>& gamma_grid,
                                  const FitOptions& options) {
  if (lambda_grid.empty() || gamma_grid.empty()) {
    throw ParameterError("path sweep needs nonempty lambda and gamma grids");
  }
  const std::size_t n_gamma = gamma_grid.size();
  std::vector<PathPoint> path;
  path.reserve(lambda_grid.size() * n_gamma);
  for (std::size_t a = 0; a < lambda_grid.size(); ++a) {
    for (std::size_t b = 0; b < n_gamma; ++b) {
      PathPoint point{lambda_grid[a], gamma_grid[b], std::nullopt, base.nu, {}};
      SolverConfig cfg = base;
      cfg.lambda = point.lambda;
      cfg.gamma = point.gamma;
      FitOptions cell = options;
      const PathPoint* previous = nullptr;
      if (a > 0) {
        previous = &path[(a - 1) * n_gamma + b];
      } else if (b > 0) {
        previous = &path[b - 1];
      }
      if (previous != nullptr && previous->result) {
        cell.initial_centers = previous->result->centers.values();
      }
      try {
        point.result = sproga_fit(X, G, cfg, cell);
      } catch (const NumericalDivergence& e) {
        point.error = e.what();
        point.diverged = true;
      } catch (const Error& e) {
        point.error = e.what();
      }
      path.push_back(std::move(point));
    }
  }
  return path;
}

std::vector<PathPoint> adaptive_path_sweep(const DataMatrix& X, const EdgeGraph& G,
                                           const SolverConfig& base,
                                           const std::vector<double>& lambda_grid,
                                           const std::vector<double>& gamma_fractions,
                                           const FitOptions& options) {
  if (lambda_grid.empty()) throw ParameterError("adaptive sweep needs a nonempty lambda grid");
  for (double f : gamma_fractions) {
    if (!(f > 0.0)) throw ParameterError("gamma fractions must be > 0");
  }
  std::vector<PathPoint> path;
  path.reserve(lambda_grid.size() * (gamma_fractions.size() + 1));
  std::optional<Matrix> plain_warm;
  for (double lambda : lambda_grid) {
    SolverConfig cfg = base;
    cfg.lambda = lambda;
    cfg.gamma = 0.0;
    cfg.nu.reset();
    PathPoint plain{lambda, 0.0, std::nullopt, std::nullopt, {}};
    FitOptions cell = options;
    cell.initial_centers = plain_warm;
    try {
      plain.result = sproga_fit(X, G, cfg, cell);
    } catch (const NumericalDivergence& e) {
      plain.error = e.what();
      plain.diverged = true;
    } catch (const Error& e) {
      plain.error = e.what();
    }
    if (!plain.result) {
      // Without the gamma = 0 solution there are no weights; the whole row
      // is reported as failed.
      for (std::size_t b = 0; b < gamma_fractions.size(); ++b) {
        path.push_back({lambda, std::numeric_limits<double>::quiet_NaN(), std::nullopt,
                        std::nullopt, "gamma = 0 fit failed: " + plain.error, plain.diverged});
      }
      path.push_back(std::move(plain));
      continue;
    }
    plain_warm = plain.result->centers.values();
    const Vector nu = feature_weights_from(X, plain.result->centers);
    const double top = gamma_max(X, nu);
    std::optional<Matrix> warm = plain_warm;
    cfg.nu = nu;
    for (double fraction : gamma_fractions) {
      cfg.gamma = fraction * top;
      PathPoint point{lambda, cfg.gamma, std::nullopt, nu, {}};
      FitOptions next = options;
      next.initial_centers = warm;
      try {
        point.result = sproga_fit(X, G, cfg, next);
        warm = point.result->centers.values();
      } catch (const NumericalDivergence& e) {
        point.error = e.what();
        point.diverged = true;
      } catch (const Error& e) {
        point.error = e.what();
      }
      path.push_back(std::move(point));
    }
    path.push_back(std::move(plain));
  }
  return path;
}

}  // namespace sproga
