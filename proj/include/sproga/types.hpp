#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace sproga {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Observation matrix X, p features (rows) by n samples (columns).
///
/// Column-major storage makes each sample a contiguous column, which is the
/// access pattern of every per-edge computation.
class DataMatrix {
 public:
  /// Takes ownership of a p x n matrix. Requires n >= 2, p >= 1 and finite
  /// entries.
  explicit DataMatrix(Matrix values);

  /// Builds X from the conventional tabular layout (samples as rows).
  static DataMatrix from_sample_rows(const Matrix& rows);

  const Matrix& values() const noexcept { return values_; }
  Index features() const noexcept { return values_.rows(); }
  Index samples() const noexcept { return values_.cols(); }
  auto sample(Index i) const { return values_.col(i); }

 private:
  Matrix values_;
};

/// Center matrix U. Column i is the center u_i, row k is the feature
/// vector a_k.
class CenterMatrix {
 public:
  CenterMatrix() = default;
  explicit CenterMatrix(Matrix values);
  static CenterMatrix zeros(Index features, Index samples);

  const Matrix& values() const noexcept { return values_; }
  Index features() const noexcept { return values_.rows(); }
  Index samples() const noexcept { return values_.cols(); }

 private:
  Matrix values_;
};

struct Edge {
  Index i = 0;
  Index j = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Weighted edge set with the implicit incidence matrix C.
///
/// Edge l = (i, j) with i < j corresponds to column l of C holding +1 in row
/// i and -1 in row j. Edges are kept sorted by (i, j), so C is fully
/// determined by the edge list. C is never formed; instead every node keeps
/// the list of incident edges with their sign, which turns A C^T into a
/// per-node gather.
class EdgeGraph {
 public:
  struct Incidence {
    Index edge;
    double sign;
  };

  EdgeGraph() = default;

  /// Strict constructor: edges must already be canonical (i < j < nodes,
  /// strictly increasing) and every weight positive.
  EdgeGraph(Index nodes, std::vector<Edge> edges, std::vector<double> weights);

  /// Canonicalizes arbitrary pairs: orders each pair, sorts the list and
  /// rejects duplicates and self loops. Missing weights default to 1.
  static EdgeGraph from_pairs(Index nodes, std::vector<Edge> pairs,
                              std::vector<double> weights = {});

  Index nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const double> weights() const noexcept { return weights_; }
  const Edge& edge(std::size_t l) const { return edges_[l]; }
  double weight(std::size_t l) const { return weights_[l]; }

  double total_weight() const noexcept { return total_weight_; }
  /// Sum of the weights of the edges incident to each node.
  Vector weighted_degrees() const;

  std::span<const Incidence> incident(Index node) const {
    const auto begin = offsets_[static_cast<std::size_t>(node)];
    const auto end = offsets_[static_cast<std::size_t>(node) + 1];
    return {incidence_.data() + begin, end - begin};
  }

  /// Same edges, new weights.
  EdgeGraph with_weights(std::vector<double> weights) const;

 private:
  void build_incidence();

  Index nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  double total_weight_ = 0.0;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidence_;
};

/// q of the fusion norm. The dual exponent s satisfies 1/s + 1/q = 1, so
/// the dual ball for l1 is the l-infinity ball and vice versa.
enum class Norm { l1, l2, linf };

Norm parse_norm(std::string_view text);
std::string to_string(Norm q);
Norm dual_of(Norm q);
double norm_of(const Eigen::Ref<const Vector>& v, Norm q);

/// Bound used for the gradient Lipschitz constant of the smooth part.
///
/// total_weight:  L = 1 + 2 lambda sum(w) / mu.
/// degree_bound:  L = 1 + lambda max_{(i,j)} (d_i + d_j) / mu, with d the
///                weighted degrees. This bounds the spectral norm of the
///                weighted graph Laplacian and never exceeds total_weight.
enum class LipschitzRule { total_weight, degree_bound };

LipschitzRule parse_lipschitz_rule(std::string_view text);
std::string to_string(LipschitzRule rule);

struct SolverConfig {
  double lambda = 1.0;
  double gamma = 0.0;
  Norm q = Norm::l2;
  double epsilon = 1e-3;
  double eta = 1e-6;
  int maxit = 20000;
  /// Per-feature group weights. Absent means all ones.
  std::optional<Vector> nu;
  LipschitzRule lipschitz = LipschitzRule::degree_bound;

  /// Checks the ranges needed by objective evaluation (lambda, gamma >= 0,
  /// nu length and positivity).
  void validate_penalties(Index features) const;
  /// Additionally requires lambda > 0 and positive epsilon, eta, maxit.
  void validate_for_fit(Index features) const;

  double nu_at(Index k) const { return nu ? (*nu)[k] : 1.0; }
};

struct ClusterResult {
  CenterMatrix centers;
  std::vector<int> labels;
  int num_clusters = 0;
  std::vector<bool> selected_features;
  int iterations = 0;
  std::vector<double> objective_trace;
  bool converged = false;
  double mu = 0.0;
  double lipschitz = 0.0;
};

/// Rows of U with l2 norm at or below this are treated as removed features:
/// 1e-8 times the largest row norm of X.
double feature_zero_tolerance(const DataMatrix& X);

}  // namespace sproga
