#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sproga/types.hpp"

namespace sproga {

struct SmoothingConstants {
  double mu = 0.0;
  double lipschitz = 0.0;
};

/// mu = 2 eps / (lambda sum(w)) and L = 1 + 2 lambda sum(w) / mu.
/// Throws ParameterError unless lambda, eps and sum(w) are positive.
SmoothingConstants smoothing_constants(const SolverConfig& cfg, const EdgeGraph& G);

/// Lipschitz constant of the smooth-part gradient under cfg.lipschitz.
double lipschitz_constant(const SolverConfig& cfg, const EdgeGraph& G, double mu);

/// grad h(V) = V - X + lambda A C^T, where column l of A is
/// w_l P_s((v_i - v_j) / mu).
Matrix smoothed_gradient(const Matrix& V, const DataMatrix& X, const EdgeGraph& G,
                         double lambda, double mu, Norm q);

/// Unweighted dual blocks alpha_l = P_s((v_i - v_j) / mu), one column per edge.
Matrix dual_blocks(const Matrix& V, const EdgeGraph& G, double mu, Norm q);

struct IterationInfo {
  int iteration = 0;
  /// Raw objective f(U^t); NaN when the trace is disabled.
  double objective = 0.0;
  double relative_change = 0.0;
};

using IterationCallback = std::function<void(const IterationInfo&)>;

struct FitOptions {
  /// Warm start. Defaults to U = V = 0.
  std::optional<Matrix> initial_centers;
  IterationCallback on_iteration;
  /// Record f(U^t) for every iteration. Costs one extra pass over the edges.
  bool record_trace = true;
  /// Relative fusion tolerance used to read labels off the centers.
  double cluster_tol = 1e-3;
  /// Also treat an edge as fused when its smoothed dual block is inside the
  /// dual ball, i.e. |u_i - u_j|_s <= mu, and 2 lambda w_ij >= mu. At the
  /// smoothed optimum such pairs differ only by the smoothing, not by the
  /// fit. The second condition drops the rule at tiny lambda, where mu
  /// exceeds the data spacing and every edge is unsaturated.
  bool smoothing_fusion = true;
};

struct SolverState {
  Matrix U;
  Matrix V;
  double tau = 1.0;
  int t = 0;
  double mu = 0.0;
  double lipschitz = 0.0;
};

/// The accelerated smoothing proximal gradient iteration, one step at a time.
/// Holds its own copies of the data and the graph.
class SprogaSolver {
 public:
  SprogaSolver(const DataMatrix& X, const EdgeGraph& G, SolverConfig cfg,
               std::optional<Matrix> initial_centers = std::nullopt);

  /// One gradient step from V, the row-wise group prox, and the momentum
  /// update. Returns |U^{t+1} - U^t|_F / (1 + |U^t|_F) and throws
  /// NumericalDivergence on a non-finite iterate.
  double step();

  const SolverState& state() const noexcept { return state_; }
  const SolverConfig& config() const noexcept { return cfg_; }

  /// Unweighted dual blocks at the current extrapolated point V (the ones
  /// the next step will use).
  Matrix duals() const;

 private:
  DataMatrix X_;
  EdgeGraph G_;
  SolverConfig cfg_;
  SolverState state_;
  Matrix gradient_;
  Matrix next_;
  Vector diff_;
  std::vector<double> scratch_;
};

/// Runs the iteration until the relative change drops to eta or maxit steps
/// have been taken.
ClusterResult sproga_fit(const DataMatrix& X, const EdgeGraph& G,
                         const SolverConfig& cfg, const FitOptions& options = {});

/// eps = fraction * f(0) = fraction * |X|_F^2 / 2, which ties the
/// smoothing error to the scale of the data.
double relative_epsilon(const DataMatrix& X, double fraction);

/// nu_k = 1 / max(|a_k|, floor) from the gamma = 0 solution, with
/// floor = 1e-8 |X|_F / sqrt(p).
Vector presolve_feature_weights(const DataMatrix& X, const EdgeGraph& G,
                                const SolverConfig& cfg,
                                const FitOptions& options = {});

/// The same weights computed from an existing gamma = 0 solution.
Vector feature_weights_from(const DataMatrix& X, const CenterMatrix& plain);

}  // namespace sproga
