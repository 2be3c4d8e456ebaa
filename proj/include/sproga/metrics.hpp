#pragma once

#include <span>
#include <vector>

namespace sproga {

/// Hubert-Arabie adjusted Rand index. Labels are arbitrary integers; only
/// the induced partitions matter. Returns 1 when the denominator vanishes
/// (both partitions trivial in the same way).
double adjusted_rand_index(std::span<const int> a, std::span<const int> b);

struct NmiResult {
  double value = 0.0;
  /// One of the partitions has a single cluster, so its entropy is zero.
  bool degenerate = false;
};

/// I(a; b) / sqrt(H(a) H(b)) with natural logarithms. A degenerate input
/// yields 0, or 1 when both partitions are identical.
NmiResult normalized_mutual_info(std::span<const int> a, std::span<const int> b);

struct FeatureAccuracy {
  double pd = 0.0;
  double fdr = 0.0;
  /// No truly informative feature, so pd is undefined (reported as 0).
  bool degenerate = false;
};

/// Power of detection |S and T| / |T| and false discovery rate
/// |S and not T| / max(|S|, 1).
FeatureAccuracy feature_pd_fdr(const std::vector<bool>& selected,
                               const std::vector<bool>& truth);

}  // namespace sproga
