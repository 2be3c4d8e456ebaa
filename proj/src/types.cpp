#include "sproga/types.hpp"

#include <algorithm>
#include <cmath>

#include "sproga/errors.hpp"

namespace sproga {

DataMatrix::DataMatrix(Matrix values) : values_(std::move(values)) {
  if (values_.cols() < 2 || values_.rows() < 1) {
    throw DimensionError("data matrix needs n >= 2 samples and p >= 1 features");
  }
  if (!values_.allFinite()) {
    throw DataError("data matrix contains non-finite entries");
  }
}

DataMatrix DataMatrix::from_sample_rows(const Matrix& rows) {
  return DataMatrix(rows.transpose());
}

CenterMatrix::CenterMatrix(Matrix values) : values_(std::move(values)) {
  if (!values_.allFinite()) {
    throw DomainError("center matrix contains non-finite entries");
  }
}

CenterMatrix CenterMatrix::zeros(Index features, Index samples) {
  return CenterMatrix(Matrix::Zero(features, samples));
}

EdgeGraph::EdgeGraph(Index nodes, std::vector<Edge> edges,
                     std::vector<double> weights)
    : nodes_(nodes), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (nodes_ < 0) throw ParameterError("negative node count");
  if (weights_.size() != edges_.size()) {
    throw DimensionError("edge and weight counts differ");
  }
  for (std::size_t l = 0; l < edges_.size(); ++l) {
    const Edge& e = edges_[l];
    if (e.i < 0 || e.i >= e.j || e.j >= nodes_) {
      throw ParameterError("edge (" + std::to_string(e.i) + ", " +
                           std::to_string(e.j) + ") is not a valid pair i < j < n");
    }
    if (l > 0 && !(edges_[l - 1] < e)) {
      throw ParameterError("edges must be sorted and duplicate free");
    }
    if (!(weights_[l] > 0.0) || !std::isfinite(weights_[l])) {
      throw ParameterError("edge weights must be positive and finite");
    }
    total_weight_ += weights_[l];
  }
  build_incidence();
}

EdgeGraph EdgeGraph::from_pairs(Index nodes, std::vector<Edge> pairs,
                                std::vector<double> weights) {
  if (weights.empty()) weights.assign(pairs.size(), 1.0);
  if (weights.size() != pairs.size()) {
    throw DimensionError("edge and weight counts differ");
  }
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t l = 0; l < pairs.size(); ++l) {
    if (pairs[l].i > pairs[l].j) std::swap(pairs[l].i, pairs[l].j);
    if (pairs[l].i == pairs[l].j) throw ParameterError("self loop in edge list");
    order[l] = l;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pairs[a] < pairs[b];
  });
  std::vector<Edge> edges;
  std::vector<double> w;
  edges.reserve(pairs.size());
  w.reserve(pairs.size());
  for (std::size_t l : order) {
    if (!edges.empty() && edges.back() == pairs[l]) {
      throw ParameterError("duplicate edge in edge list");
    }
    edges.push_back(pairs[l]);
    w.push_back(weights[l]);
  }
  return EdgeGraph(nodes, std::move(edges), std::move(w));
}

void EdgeGraph::build_incidence() {
  std::vector<std::size_t> counts(static_cast<std::size_t>(nodes_) + 1, 0);
  for (const Edge& e : edges_) {
    ++counts[static_cast<std::size_t>(e.i) + 1];
    ++counts[static_cast<std::size_t>(e.j) + 1];
  }
  for (std::size_t v = 1; v < counts.size(); ++v) counts[v] += counts[v - 1];
  offsets_ = counts;
  incidence_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
  // Edges are visited in increasing l, so each node's list is sorted by edge
  // index and the gather order is fixed.
  for (std::size_t l = 0; l < edges_.size(); ++l) {
    const Edge& e = edges_[l];
    incidence_[cursor[static_cast<std::size_t>(e.i)]++] = {static_cast<Index>(l), 1.0};
    incidence_[cursor[static_cast<std::size_t>(e.j)]++] = {static_cast<Index>(l), -1.0};
  }
}

Vector EdgeGraph::weighted_degrees() const {
  Vector d = Vector::Zero(nodes_);
  for (std::size_t l = 0; l < edges_.size(); ++l) {
    d[edges_[l].i] += weights_[l];
    d[edges_[l].j] += weights_[l];
  }
  return d;
}

EdgeGraph EdgeGraph::with_weights(std::vector<double> weights) const {
  return EdgeGraph(nodes_, edges_, std::move(weights));
}

Norm parse_norm(std::string_view text) {
  if (text == "1" || text == "l1") return Norm::l1;
  if (text == "2" || text == "l2") return Norm::l2;
  if (text == "inf" || text == "linf" || text == "Inf") return Norm::linf;
  throw ParameterError("unknown norm '" + std::string(text) + "' (expected 1, 2 or inf)");
}

std::string to_string(Norm q) {
  switch (q) {
    case Norm::l1: return "1";
    case Norm::l2: return "2";
    case Norm::linf: return "inf";
  }
  return "?";
}

Norm dual_of(Norm q) {
  switch (q) {
    case Norm::l1: return Norm::linf;
    case Norm::l2: return Norm::l2;
    case Norm::linf: return Norm::l1;
  }
  return Norm::l2;
}

double norm_of(const Eigen::Ref<const Vector>& v, Norm q) {
  switch (q) {
    case Norm::l1: return v.lpNorm<1>();
    case Norm::l2: return v.norm();
    case Norm::linf: return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
  }
  return 0.0;
}

LipschitzRule parse_lipschitz_rule(std::string_view text) {
  if (text == "total" || text == "total_weight") return LipschitzRule::total_weight;
  if (text == "degree" || text == "degree_bound") return LipschitzRule::degree_bound;
  throw ParameterError("unknown Lipschitz rule '" + std::string(text) +
                       "' (expected total or degree)");
}

std::string to_string(LipschitzRule rule) {
  return rule == LipschitzRule::total_weight ? "total" : "degree";
}

void SolverConfig::validate_penalties(Index features) const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be finite and >= 0");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw ParameterError("gamma must be finite and >= 0");
  }
  if (nu) {
    if (nu->size() != features) {
      throw DimensionError("nu has " + std::to_string(nu->size()) +
                           " entries, expected " + std::to_string(features));
    }
    if (!nu->allFinite() || (nu->array() <= 0.0).any()) {
      throw ParameterError("feature weights nu must be positive and finite");
    }
  }
}

void SolverConfig::validate_for_fit(Index features) const {
  validate_penalties(features);
  if (!(lambda > 0.0)) {
    throw ParameterError("lambda must be > 0 to run the solver (mu is undefined at 0)");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ParameterError("epsilon must be > 0");
  }
  if (!(eta > 0.0)) throw ParameterError("eta must be > 0");
  if (maxit < 1) throw ParameterError("maxit must be a positive integer");
}

double feature_zero_tolerance(const DataMatrix& X) {
  return 1e-8 * X.values().rowwise().norm().maxCoeff();
}

}  // namespace sproga
