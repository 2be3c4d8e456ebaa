#pragma once

#include <utility>

#include "sproga/types.hpp"

namespace sproga::oracles {

/// Reference solutions that share no code path with the solver. They are
/// slow and only meant for tiny instances in tests.

/// Closed-form minimizer of
///   1/2 |x1 - u1|^2 + 1/2 |x2 - u2|^2 + lambda w |u1 - u2|_2.
/// Both centers sit at the midpoint when |x1 - x2| / 2 <= lambda w;
/// otherwise each moves lambda w towards the other along x1 - x2.
std::pair<Vector, Vector> two_point_solution(const Vector& x1, const Vector& x2,
                                             double lambda, double omega);

/// Subgradient descent on the raw objective with normalized steps
/// radius / sqrt(t), started from U = X. Returns the best iterate seen.
/// Intended for n <= 12, p <= 4.
Matrix subgradient_reference(const DataMatrix& X, const EdgeGraph& G,
                             const SolverConfig& cfg, int iters);

/// Objective values of the best-so-far sequence of subgradient_reference,
/// one per iteration.
std::vector<double> subgradient_best_trace(const DataMatrix& X, const EdgeGraph& G,
                                           const SolverConfig& cfg, int iters);

/// Grid search for argmin |x - z|^2 over the unit l1 ball of dimension <= 3.
/// Points are taken on the lattice of step 1e-4 (integer coordinates, so
/// points on the boundary faces are exactly feasible), searched coarse to
/// fine.
Vector l1_ball_qp_oracle(const Vector& z);

}  // namespace sproga::oracles
