#include "sproga/solver.hpp"

#include <cmath>
#include <limits>

#include "sproga/errors.hpp"
#include "sproga/model_selection.hpp"
#include "sproga/objective.hpp"
#include "sproga/projections.hpp"

namespace sproga {
namespace {

void check_inputs(const DataMatrix& X, const EdgeGraph& G) {
  if (G.nodes() != X.samples()) {
    throw DimensionError("graph has " + std::to_string(G.nodes()) +
                         " nodes, data has " + std::to_string(X.samples()) +
                         " samples");
  }
}

// Adds lambda A C^T to out, one edge at a time in edge order.
void add_fusion_gradient(const Matrix& V, const EdgeGraph& G, double lambda,
                         double mu, Norm q, Matrix& out, Vector& diff,
                         std::vector<double>& scratch) {
  const double inv_mu = 1.0 / mu;
  for (std::size_t l = 0; l < G.size(); ++l) {
    const Edge& e = G.edge(l);
    diff.noalias() = (V.col(e.i) - V.col(e.j)) * inv_mu;
    project_dual_ball(q, diff, scratch);
    const double scale = lambda * G.weight(l);
    out.col(e.i) += scale * diff;
    out.col(e.j) -= scale * diff;
  }
}

}  // namespace

SmoothingConstants smoothing_constants(const SolverConfig& cfg, const EdgeGraph& G) {
  if (!(cfg.lambda > 0.0)) {
    throw ParameterError("lambda must be > 0; at lambda = 0 the solution is U = X");
  }
  if (!(cfg.epsilon > 0.0)) throw ParameterError("epsilon must be > 0");
  const double total = G.total_weight();
  if (!(total > 0.0)) throw ParameterError("graph has no weighted edges");
  const double mu = 2.0 * cfg.epsilon / (cfg.lambda * total);
  return {mu, 1.0 + 2.0 * cfg.lambda * total / mu};
}

double lipschitz_constant(const SolverConfig& cfg, const EdgeGraph& G, double mu) {
  switch (cfg.lipschitz) {
    case LipschitzRule::total_weight:
      return 1.0 + 2.0 * cfg.lambda * G.total_weight() / mu;
    case LipschitzRule::degree_bound: {
      // Column sums of W C^T C bound the spectral norm of the weighted
      // Laplacian C W C^T: column l sums to d_i + d_j.
      const Vector degree = G.weighted_degrees();
      double bound = 0.0;
      for (const Edge& e : G.edges()) bound = std::max(bound, degree[e.i] + degree[e.j]);
      return 1.0 + cfg.lambda * bound / mu;
    }
  }
  throw ParameterError("unknown Lipschitz rule");
}

Matrix smoothed_gradient(const Matrix& V, const DataMatrix& X, const EdgeGraph& G,
                         double lambda, double mu, Norm q) {
  if (!(mu > 0.0)) throw DomainError("smoothing constant mu must be > 0");
  check_inputs(X, G);
  if (V.rows() != X.features() || V.cols() != X.samples()) {
    throw DimensionError("iterate shape differs from the data shape");
  }
  Matrix grad = V - X.values();
  if (lambda != 0.0) {
    Vector diff(V.rows());
    std::vector<double> scratch;
    add_fusion_gradient(V, G, lambda, mu, q, grad, diff, scratch);
  }
  return grad;
}

Matrix dual_blocks(const Matrix& V, const EdgeGraph& G, double mu, Norm q) {
  if (!(mu > 0.0)) throw DomainError("smoothing constant mu must be > 0");
  Matrix alpha(V.rows(), static_cast<Index>(G.size()));
  std::vector<double> scratch;
  for (std::size_t l = 0; l < G.size(); ++l) {
    const Edge& e = G.edge(l);
    Vector z = (V.col(e.i) - V.col(e.j)) / mu;
    project_dual_ball(q, z, scratch);
    alpha.col(static_cast<Index>(l)) = z;
  }
  return alpha;
}

SprogaSolver::SprogaSolver(const DataMatrix& X, const EdgeGraph& G, SolverConfig cfg,
                           std::optional<Matrix> initial_centers)
    : X_(X), G_(G), cfg_(std::move(cfg)) {
  check_inputs(X_, G_);
  cfg_.validate_for_fit(X_.features());
  if (G_.empty()) throw ParameterError("graph has no edges");
  const Index p = X_.features();
  const Index n = X_.samples();
  state_.mu = smoothing_constants(cfg_, G_).mu;
  state_.lipschitz = lipschitz_constant(cfg_, G_, state_.mu);
  if (initial_centers) {
    if (initial_centers->rows() != p || initial_centers->cols() != n) {
      throw DimensionError("initial centers have the wrong shape");
    }
    state_.U = std::move(*initial_centers);
  } else {
    state_.U = Matrix::Zero(p, n);
  }
  state_.V = state_.U;
  gradient_.resize(p, n);
  next_.resize(p, n);
  diff_.resize(p);
}

double SprogaSolver::step() {
  SolverState& s = state_;
  gradient_.noalias() = s.V - X_.values();
  add_fusion_gradient(s.V, G_, cfg_.lambda, s.mu, cfg_.q, gradient_, diff_, scratch_);
  next_.noalias() = s.V - gradient_ / s.lipschitz;

  if (cfg_.gamma > 0.0) {
    for (Index k = 0; k < next_.rows(); ++k) {
      const double shrink = cfg_.gamma * cfg_.nu_at(k) / s.lipschitz;
      const double factor = group_shrink_factor(next_.row(k).norm(), shrink);
      if (factor == 0.0) {
        next_.row(k).setZero();
      } else {
        next_.row(k) *= factor;
      }
    }
  }

  const double change = (next_ - s.U).norm() / (1.0 + s.U.norm());
  ++s.t;
  if (!std::isfinite(change) || !next_.allFinite()) throw NumericalDivergence(s.t);

  const double tau_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * s.tau * s.tau));
  const double momentum = (s.tau - 1.0) / tau_next;
  // V^{t+1} = U^{t+1} + momentum (U^{t+1} - U^t), reusing gradient_ as
  // storage for the old iterate.
  gradient_.swap(s.U);
  s.U.swap(next_);
  s.V.noalias() = s.U + momentum * (s.U - gradient_);
  s.tau = tau_next;
  return change;
}

Matrix SprogaSolver::duals() const {
  return dual_blocks(state_.V, G_, state_.mu, cfg_.q);
}

ClusterResult sproga_fit(const DataMatrix& X, const EdgeGraph& G,
                         const SolverConfig& cfg, const FitOptions& options) {
  SprogaSolver solver(X, G, cfg, options.initial_centers);
  ClusterResult result;
  const bool want_objective = options.record_trace;
  for (int it = 0; it < cfg.maxit; ++it) {
    const double change = solver.step();
    IterationInfo info{solver.state().t, std::numeric_limits<double>::quiet_NaN(), change};
    if (want_objective) {
      info.objective = objective_raw(X, solver.state().U, G, cfg);
      result.objective_trace.push_back(info.objective);
    }
    if (options.on_iteration) options.on_iteration(info);
    if (change <= cfg.eta) {
      result.converged = true;
      break;
    }
  }
  const SolverState& s = solver.state();
  result.iterations = s.t;
  result.mu = s.mu;
  result.lipschitz = s.lipschitz;
  result.centers = CenterMatrix(s.U);
  const double scale = max_edge_length(X, G);
  const ClusterLabels clusters =
      options.smoothing_fusion
          ? extract_clusters(s.U, G, options.cluster_tol, scale, SmoothedFusion{s.mu, cfg.q, cfg.lambda})
          : extract_clusters(s.U, G, options.cluster_tol, scale);
  result.labels = clusters.labels;
  result.num_clusters = clusters.num_clusters;
  result.selected_features = selected_features(result.centers, feature_zero_tolerance(X));
  return result;
}

Vector presolve_feature_weights(const DataMatrix& X, const EdgeGraph& G,
                                const SolverConfig& cfg, const FitOptions& options) {
  SolverConfig plain = cfg;
  plain.gamma = 0.0;
  plain.nu.reset();
  FitOptions quiet = options;
  quiet.record_trace = false;
  return feature_weights_from(X, sproga_fit(X, G, plain, quiet).centers);
}

Vector feature_weights_from(const DataMatrix& X, const CenterMatrix& plain) {
  if (plain.features() != X.features()) throw DimensionError("centers and data differ in p");
  const double floor = std::max(
      1e-8 * X.values().norm() / std::sqrt(static_cast<double>(X.features())),
      std::numeric_limits<double>::min());
  const Vector norms = plain.values().rowwise().norm();
  Vector nu(X.features());
  for (Index k = 0; k < nu.size(); ++k) nu[k] = 1.0 / std::max(norms[k], floor);
  return nu;
}

double relative_epsilon(const DataMatrix& X, double fraction) {
  if (!(fraction > 0.0)) throw ParameterError("relative epsilon must be > 0");
  const double f0 = 0.5 * X.values().squaredNorm();
  if (!(f0 > 0.0)) throw DataError("X is identically zero, so f(0) = 0");
  return fraction * f0;
}

}  // namespace sproga
