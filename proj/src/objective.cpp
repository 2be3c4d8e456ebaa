#include "sproga/objective.hpp"

#include <cmath>

#include "sproga/errors.hpp"
#include "sproga/projections.hpp"

namespace sproga {
namespace {

void check_shapes(const DataMatrix& X, const Matrix& U, const EdgeGraph& G) {
  if (U.rows() != X.features() || U.cols() != X.samples()) {
    throw DimensionError("center matrix is " + std::to_string(U.rows()) + "x" +
                         std::to_string(U.cols()) + ", data is " +
                         std::to_string(X.features()) + "x" +
                         std::to_string(X.samples()));
  }
  if (G.nodes() != X.samples()) {
    throw DimensionError("graph has " + std::to_string(G.nodes()) +
                         " nodes, data has " + std::to_string(X.samples()) +
                         " samples");
  }
}

double group_penalty(const Matrix& U, const SolverConfig& cfg) {
  if (cfg.gamma == 0.0) return 0.0;
  double sum = 0.0;
  for (Index k = 0; k < U.rows(); ++k) sum += cfg.nu_at(k) * U.row(k).norm();
  return cfg.gamma * sum;
}

}  // namespace

double objective_raw(const DataMatrix& X, const Matrix& U, const EdgeGraph& G,
                     const SolverConfig& cfg) {
  check_shapes(X, U, G);
  cfg.validate_penalties(X.features());
  const double fit = 0.5 * (X.values() - U).squaredNorm();
  double fusion = 0.0;
  if (cfg.lambda != 0.0) {
    Vector diff(U.rows());
    for (std::size_t l = 0; l < G.size(); ++l) {
      const Edge& e = G.edge(l);
      diff = U.col(e.i) - U.col(e.j);
      fusion += G.weight(l) * norm_of(diff, cfg.q);
    }
  }
  return fit + cfg.lambda * fusion + group_penalty(U, cfg);
}

double smooth_part(const DataMatrix& X, const Matrix& U, const EdgeGraph& G,
                   double lambda, double mu, Norm q) {
  if (!(mu > 0.0)) throw DomainError("smoothing constant mu must be > 0");
  check_shapes(X, U, G);
  const double fit = 0.5 * (X.values() - U).squaredNorm();
  double smoothed = 0.0;
  if (lambda != 0.0) {
    Vector diff(U.rows());
    Vector alpha(U.rows());
    std::vector<double> scratch;
    for (std::size_t l = 0; l < G.size(); ++l) {
      const Edge& e = G.edge(l);
      diff = U.col(e.i) - U.col(e.j);
      alpha = diff / mu;
      project_dual_ball(q, alpha, scratch);
      smoothed += G.weight(l) * (alpha.dot(diff) - 0.5 * mu * alpha.squaredNorm());
    }
  }
  return fit + lambda * smoothed;
}

double objective_smoothed(const DataMatrix& X, const Matrix& U,
                          const EdgeGraph& G, const SolverConfig& cfg, double mu) {
  if (!(mu > 0.0)) throw DomainError("smoothing constant mu must be > 0");
  cfg.validate_penalties(X.features());
  return smooth_part(X, U, G, cfg.lambda, mu, cfg.q) + group_penalty(U, cfg);
}

double dual_ball_radius_sq(Norm q, Index features) {
  // max |alpha|_2^2 over the dual ball: l2 and l1 balls reach 1 at a vertex,
  // the l-infinity ball (dual of q = 1) reaches p at a corner.
  return q == Norm::l1 ? static_cast<double>(features) : 1.0;
}

}  // namespace sproga
