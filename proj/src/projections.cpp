#include "sproga/projections.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace sproga {

void project_l2_ball(Eigen::Ref<Vector> z) {
  const double norm = z.norm();
  if (norm > 1.0) z /= norm;
}

void project_linf_ball(Eigen::Ref<Vector> z) {
  z = z.cwiseMax(-1.0).cwiseMin(1.0);
}

double l1_ball_threshold(const Eigen::Ref<const Vector>& z,
                         std::vector<double>& scratch) {
  const Index dim = z.size();
  if (z.lpNorm<1>() <= 1.0) return 0.0;
  scratch.resize(static_cast<std::size_t>(dim));
  for (Index i = 0; i < dim; ++i) scratch[static_cast<std::size_t>(i)] = std::abs(z[i]);
  // Ties are harmless: the threshold does not depend on their order.
  std::stable_sort(scratch.begin(), scratch.end(), std::greater<>());
  double cumulative = 0.0;
  double threshold = 0.0;
  for (std::size_t m = 0; m < scratch.size(); ++m) {
    cumulative += scratch[m];
    const double candidate = (cumulative - 1.0) / static_cast<double>(m + 1);
    if (scratch[m] > candidate) {
      threshold = candidate;
    } else {
      break;
    }
  }
  return threshold;
}

void project_l1_ball(Eigen::Ref<Vector> z, std::vector<double>& scratch) {
  const double threshold = l1_ball_threshold(z, scratch);
  if (threshold <= 0.0) return;
  for (Index i = 0; i < z.size(); ++i) {
    const double magnitude = std::abs(z[i]) - threshold;
    z[i] = magnitude > 0.0 ? std::copysign(magnitude, z[i]) : 0.0;
  }
}

void project_l1_ball(Eigen::Ref<Vector> z) {
  std::vector<double> scratch;
  project_l1_ball(z, scratch);
}

void project_dual_ball(Norm q, Eigen::Ref<Vector> z, std::vector<double>& scratch) {
  switch (q) {
    case Norm::l2: project_l2_ball(z); break;
    case Norm::l1: project_linf_ball(z); break;
    case Norm::linf: project_l1_ball(z, scratch); break;
  }
}

Vector project_l2_ball(const Vector& z) {
  Vector out = z;
  project_l2_ball(Eigen::Ref<Vector>(out));
  return out;
}

Vector project_linf_ball(const Vector& z) {
  Vector out = z;
  project_linf_ball(Eigen::Ref<Vector>(out));
  return out;
}

Vector project_l1_ball(const Vector& z) {
  Vector out = z;
  project_l1_ball(Eigen::Ref<Vector>(out));
  return out;
}

double group_shrink_factor(double norm, double shrink) {
  if (norm <= shrink || norm == 0.0) return 0.0;
  return 1.0 - shrink / norm;
}

void prox_group_row(Eigen::Ref<Vector> u, double shrink) {
  const double factor = group_shrink_factor(u.norm(), shrink);
  if (factor == 0.0) {
    u.setZero();
  } else {
    u *= factor;
  }
}

Vector prox_group_row(const Vector& u, double shrink) {
  Vector out = u;
  prox_group_row(Eigen::Ref<Vector>(out), shrink);
  return out;
}

}  // namespace sproga
