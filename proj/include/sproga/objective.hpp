#pragma once

#include "sproga/types.hpp"

namespace sproga {

/// f(U) = 1/2 sum_i |x_i - u_i|^2 + lambda sum_l w_l |u_i - u_j|_q
///        + gamma sum_k nu_k |a_k|_2
double objective_raw(const DataMatrix& X, const Matrix& U, const EdgeGraph& G,
                     const SolverConfig& cfg);

/// Smoothed objective: every fusion norm is replaced by
///   g_l(U) = max_{|alpha|_s <= 1} alpha^T (u_i - u_j) - mu/2 |alpha|^2,
/// evaluated in closed form at the maximizer alpha = P_s((u_i - u_j) / mu).
/// Throws DomainError for mu <= 0.
double objective_smoothed(const DataMatrix& X, const Matrix& U,
                          const EdgeGraph& G, const SolverConfig& cfg,
                          double mu);

/// Smooth part h(U) of the smoothed objective (no group penalty).
double smooth_part(const DataMatrix& X, const Matrix& U, const EdgeGraph& G,
                   double lambda, double mu, Norm q);

/// Upper bound max_{|alpha|_s <= 1} |alpha|_2^2 of the dual ball; the
/// smoothing gap satisfies 0 <= f - f_mu <= lambda mu sum(w) / 2 times this.
double dual_ball_radius_sq(Norm q, Index features);

}  // namespace sproga
