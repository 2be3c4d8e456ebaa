#include "sproga/oracles.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "sproga/errors.hpp"
#include "sproga/objective.hpp"

namespace sproga::oracles {
namespace {

// A subgradient of |d|_q.
void norm_subgradient(const Vector& d, Norm q, Vector& out) {
  out.setZero(d.size());
  switch (q) {
    case Norm::l2: {
      const double norm = d.norm();
      if (norm > 0.0) out = d / norm;
      break;
    }
    case Norm::l1:
      for (Index k = 0; k < d.size(); ++k) out[k] = d[k] > 0.0 ? 1.0 : (d[k] < 0.0 ? -1.0 : 0.0);
      break;
    case Norm::linf: {
      Index arg = 0;
      const double top = d.cwiseAbs().maxCoeff(&arg);
      if (top > 0.0) out[arg] = d[arg] > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
}

Matrix raw_subgradient(const DataMatrix& X, const Matrix& U, const EdgeGraph& G,
                       const SolverConfig& cfg) {
  Matrix g = U - X.values();
  Vector d(U.rows());
  Vector s(U.rows());
  for (std::size_t l = 0; l < G.size(); ++l) {
    const Edge& e = G.edge(l);
    d = U.col(e.i) - U.col(e.j);
    norm_subgradient(d, cfg.q, s);
    g.col(e.i) += cfg.lambda * G.weight(l) * s;
    g.col(e.j) -= cfg.lambda * G.weight(l) * s;
  }
  if (cfg.gamma > 0.0) {
    for (Index k = 0; k < U.rows(); ++k) {
      const double norm = U.row(k).norm();
      if (norm > 0.0) g.row(k) += cfg.gamma * cfg.nu_at(k) * U.row(k) / norm;
    }
  }
  return g;
}

template <typename Visit>
Matrix run_subgradient(const DataMatrix& X, const EdgeGraph& G, const SolverConfig& cfg,
                       int iters, Visit&& visit) {
  cfg.validate_penalties(X.features());
  Matrix U = X.values();
  Matrix best = U;
  double best_value = objective_raw(X, U, G, cfg);
  const Vector mean = X.values().rowwise().mean();
  const double spread = (X.values().colwise() - mean).norm();
  const double radius = 0.5 * std::max(spread, 1e-12);
  for (int t = 1; t <= iters; ++t) {
    const Matrix g = raw_subgradient(X, U, G, cfg);
    const double gnorm = g.norm();
    if (gnorm == 0.0) {
      visit(best_value);
      continue;
    }
    U -= (radius / std::sqrt(static_cast<double>(t))) * g / gnorm;
    const double value = objective_raw(X, U, G, cfg);
    if (value < best_value) {
      best_value = value;
      best = U;
    }
    visit(best_value);
  }
  return best;
}

}  // namespace

std::pair<Vector, Vector> two_point_solution(const Vector& x1, const Vector& x2,
                                             double lambda, double omega) {
  if (x1.size() != x2.size()) throw DimensionError("points have different lengths");
  if (!(lambda >= 0.0) || !(omega >= 0.0)) {
    throw ParameterError("lambda and omega must be >= 0");
  }
  const double strength = lambda * omega;
  const Vector diff = x1 - x2;
  const double dist = diff.norm();
  if (strength == 0.0) return {x1, x2};
  if (dist / 2.0 <= strength) {
    const Vector mid = 0.5 * (x1 + x2);
    return {mid, mid};
  }
  const Vector shift = strength * diff / dist;
  return {x1 - shift, x2 + shift};
}

Matrix subgradient_reference(const DataMatrix& X, const EdgeGraph& G,
                             const SolverConfig& cfg, int iters) {
  return run_subgradient(X, G, cfg, iters, [](double) {});
}

std::vector<double> subgradient_best_trace(const DataMatrix& X, const EdgeGraph& G,
                                           const SolverConfig& cfg, int iters) {
  std::vector<double> trace;
  trace.reserve(static_cast<std::size_t>(std::max(iters, 0)));
  run_subgradient(X, G, cfg, iters, [&](double v) { trace.push_back(v); });
  return trace;
}

Vector l1_ball_qp_oracle(const Vector& z) {
  const auto dim = static_cast<int>(z.size());
  if (dim < 1 || dim > 3) throw DimensionError("the l1 grid oracle supports 1 <= dim <= 3");
  constexpr long kUnits = 10000;  // lattice step 1e-4
  const double h = 1.0 / static_cast<double>(kUnits);

  std::array<long, 3> best{0, 0, 0};
  double best_cost = std::numeric_limits<double>::infinity();
  const auto cost_of = [&](const std::array<long, 3>& m) {
    double c = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double diff = static_cast<double>(m[k]) * h - z[k];
      c += diff * diff;
    }
    return c;
  };

  // Level 0 scans the whole box; later levels scan a window of +-4 steps
  // around the incumbent with a 4x finer step, ending at one lattice unit.
  long step = 500;
  std::array<long, 3> center{0, 0, 0};
  long half_width = kUnits / step;
  for (;;) {
    std::array<long, 3> lo{0, 0, 0};
    std::array<long, 3> hi{0, 0, 0};
    for (int k = 0; k < dim; ++k) {
      lo[k] = -half_width;
      hi[k] = half_width;
    }
    std::array<long, 3> idx{0, 0, 0};
    for (idx[0] = lo[0]; idx[0] <= hi[0]; ++idx[0]) {
      for (idx[1] = lo[1]; idx[1] <= hi[1]; ++idx[1]) {
        for (idx[2] = lo[2]; idx[2] <= hi[2]; ++idx[2]) {
          std::array<long, 3> m{0, 0, 0};
          long l1 = 0;
          for (int k = 0; k < dim; ++k) {
            m[k] = center[k] + idx[k] * step;
            l1 += std::labs(m[k]);
          }
          if (l1 > kUnits) continue;
          const double c = cost_of(m);
          if (c < best_cost) {
            best_cost = c;
            best = m;
          }
        }
      }
    }
    if (step == 1) break;
    center = best;
    step = std::max(1L, step / 4);
    half_width = 4;
  }
  Vector out(dim);
  for (int k = 0; k < dim; ++k) out[k] = static_cast<double>(best[k]) * h;
  return out;
}

}  // namespace sproga::oracles
