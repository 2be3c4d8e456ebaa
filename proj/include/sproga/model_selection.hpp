#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sproga/solver.hpp"
#include "sproga/types.hpp"

namespace sproga {

struct LambdaRange {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  /// Every edge joins coincident samples, so lambda_min = 0.
  bool degenerate = false;
};

struct ParamRange {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double gamma_max = 0.0;
  bool degenerate = false;
};

/// min and max over edges of |x_i - x_j|_2 / (2 w_ij). Below the first no
/// pair of a two-point problem fuses; at or above the second every pair of a
/// two-point problem fuses.
LambdaRange lambda_range(const DataMatrix& X, const EdgeGraph& G);

/// max_k |X_{k,.}|_2 / nu_k: the smallest gamma at which U = 0 is optimal.
double gamma_max(const DataMatrix& X, const Vector& nu);

ParamRange param_range(const DataMatrix& X, const EdgeGraph& G, const Vector& nu);

/// upper, upper rho, upper rho^2, ... while the value stays >= lower_bound.
/// Returns {upper} when upper <= lower_bound.
std::vector<double> geometric_grid(double upper, double lower_bound, double rho);

/// Fixed-length variant: upper rho^i for i = 0 .. count - 1.
std::vector<double> geometric_grid_n(double upper, double rho, std::size_t count);

struct ClusterLabels {
  std::vector<int> labels;
  int num_clusters = 0;
};

/// Largest |x_i - x_j|_2 over the edges of G.
double max_edge_length(const DataMatrix& X, const EdgeGraph& G);

/// Connected components of the subgraph of G whose edges satisfy
/// |u_i - u_j|_2 <= tol * scale. Components are numbered in order of their
/// smallest member.
ClusterLabels extract_clusters(const Matrix& U, const EdgeGraph& G, double tol,
                               double scale);

/// Smoothing parameters of a fit, used to recognize edges whose dual block
/// is unsaturated.
struct SmoothedFusion {
  double mu = 0.0;
  Norm q = Norm::l2;
  /// Fusion strength of the fit. An unsaturated edge acts as a spring of
  /// stiffness lambda w / mu; below 2 lambda w = mu it is too soft to mean
  /// fusion. Infinity skips the check.
  double lambda = std::numeric_limits<double>::infinity();
};

/// As above, and additionally fuses every edge with |u_i - u_j|_s <= mu and
/// 2 lambda w_ij >= mu, where s is the dual exponent of q.
ClusterLabels extract_clusters(const Matrix& U, const EdgeGraph& G, double tol,
                               double scale, SmoothedFusion smoothing);

/// Rows of the centers whose l2 norm exceeds the tolerance.
std::vector<bool> selected_features(const CenterMatrix& centers, double tolerance);
std::vector<bool> selected_features(const ClusterResult& result);

struct PathPoint {
  double lambda = 0.0;
  double gamma = 0.0;
  std::optional<ClusterResult> result;
  /// Feature weights used for this cell; absent means all ones.
  std::optional<Vector> nu;
  /// Set when the fit of this cell failed; the sweep carries on.
  std::string error;
  /// The failure was a non-finite iterate.
  bool diverged = false;
};

/// Fits every (lambda, gamma) cell, lambdas outermost. Both grids are used in
/// the order given (descending is the intended use). Each non-first cell is
/// warm started from the previous lambda at the same gamma, or for the first
/// lambda from the previous gamma.
std::vector<PathPoint> path_sweep(const DataMatrix& X, const EdgeGraph& G,
                                  const SolverConfig& base,
                                  const std::vector<double>& lambda_grid,
                                  const std::vector<double>& gamma_grid,
                                  const FitOptions& options = {});

/// Sweep with data-driven feature weights. For each lambda the gamma = 0
/// problem is solved first, nu is set to 1 / |a_k| of that solution, and the
/// remaining cells use gamma = fraction * gamma_max(X, nu) for each fraction
/// in the order given. The gamma = 0 fit is emitted as the last cell of its
/// lambda row, so descending fractions give descending gamma throughout.
/// The gamma = 0 fits warm start from the previous lambda, every other cell
/// from the fit before it.
std::vector<PathPoint> adaptive_path_sweep(const DataMatrix& X, const EdgeGraph& G,
                                           const SolverConfig& base,
                                           const std::vector<double>& lambda_grid,
                                           const std::vector<double>& gamma_fractions,
                                           const FitOptions& options = {});

}  // namespace sproga
