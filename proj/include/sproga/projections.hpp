#pragma once

#include <vector>

#include "sproga/types.hpp"

namespace sproga {

/// Euclidean projections onto the unit balls of the dual norms, and the
/// proximal operator of sigma |.|_2. The in-place forms do not allocate,
/// except project_l1_ball which needs a sort buffer (pass one to reuse it).

void project_l2_ball(Eigen::Ref<Vector> z);
void project_linf_ball(Eigen::Ref<Vector> z);
void project_l1_ball(Eigen::Ref<Vector> z, std::vector<double>& scratch);
void project_l1_ball(Eigen::Ref<Vector> z);

/// Projection onto the unit ball of the dual norm of q.
void project_dual_ball(Norm q, Eigen::Ref<Vector> z,
                       std::vector<double>& scratch);

Vector project_l2_ball(const Vector& z);
Vector project_linf_ball(const Vector& z);
Vector project_l1_ball(const Vector& z);

/// Soft-threshold level lambda* of the l1-ball projection, i.e. the root of
/// sum_i (|z_i| - lambda)_+ = 1. Returns 0 when |z|_1 <= 1.
double l1_ball_threshold(const Eigen::Ref<const Vector>& z,
                         std::vector<double>& scratch);

/// prox of shrink * |.|_2: (1 - shrink / |u|_2)_+ u. Exactly zero when
/// |u|_2 <= shrink.
void prox_group_row(Eigen::Ref<Vector> u, double shrink);
/// The scalar (1 - shrink / norm)_+ applied by prox_group_row to a vector of
/// the given l2 norm.
double group_shrink_factor(double norm, double shrink);
Vector prox_group_row(const Vector& u, double shrink);

}  // namespace sproga
