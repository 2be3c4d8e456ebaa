#include "sproga/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sproga/errors.hpp"

namespace sproga {
namespace {

// Cluster sizes of each partition and the nonzero cells of the contingency
// table, all as counts.
struct Contingency {
  std::vector<double> rows;
  std::vector<double> cols;
  std::vector<double> cells;
  double n = 0.0;
};

std::vector<double> run_lengths(std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  std::vector<double> counts;
  for (std::size_t i = 0; i < labels.size();) {
    std::size_t j = i;
    while (j < labels.size() && labels[j] == labels[i]) ++j;
    counts.push_back(static_cast<double>(j - i));
    i = j;
  }
  return counts;
}

Contingency contingency(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw DimensionError("label vectors have lengths " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
  }
  if (a.size() < 2) throw DimensionError("need at least two labels");
  Contingency c;
  c.n = static_cast<double>(a.size());
  c.rows = run_lengths({a.begin(), a.end()});
  c.cols = run_lengths({b.begin(), b.end()});
  std::vector<std::pair<int, int>> pairs(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) pairs[i] = {a[i], b[i]};
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    c.cells.push_back(static_cast<double>(j - i));
    i = j;
  }
  return c;
}

double pairs_of(double m) { return 0.5 * m * (m - 1.0); }

double entropy(const std::vector<double>& counts, double n) {
  double h = 0.0;
  for (double c : counts) h -= (c / n) * std::log(c / n);
  return h;
}

}  // namespace

double adjusted_rand_index(std::span<const int> a, std::span<const int> b) {
  const Contingency c = contingency(a, b);
  double index = 0.0;
  for (double v : c.cells) index += pairs_of(v);
  double sum_a = 0.0;
  for (double v : c.rows) sum_a += pairs_of(v);
  double sum_b = 0.0;
  for (double v : c.cols) sum_b += pairs_of(v);
  const double expected = sum_a * sum_b / pairs_of(c.n);
  const double max_index = 0.5 * (sum_a + sum_b);
  const double denom = max_index - expected;
  if (denom == 0.0) return 1.0;
  return (index - expected) / denom;
}

NmiResult normalized_mutual_info(std::span<const int> a, std::span<const int> b) {
  const Contingency c = contingency(a, b);
  const double ha = entropy(c.rows, c.n);
  const double hb = entropy(c.cols, c.n);
  if (c.rows.size() == 1 || c.cols.size() == 1) {
    // Identical partitions means the table is diagonal: one cell per row.
    const bool identical = c.rows.size() == c.cols.size() && c.cells.size() == c.rows.size();
    return {identical ? 1.0 : 0.0, true};
  }
  // I = H(a) + H(b) - H(a, b)
  const double mutual = ha + hb - entropy(c.cells, c.n);
  const double value = mutual / std::sqrt(ha * hb);
  return {std::clamp(value, 0.0, 1.0), false};
}

FeatureAccuracy feature_pd_fdr(const std::vector<bool>& selected,
                               const std::vector<bool>& truth) {
  if (selected.size() != truth.size()) {
    throw DimensionError("selected and truth masks have different lengths");
  }
  double hits = 0.0;
  double false_hits = 0.0;
  double truths = 0.0;
  double chosen = 0.0;
  for (std::size_t k = 0; k < selected.size(); ++k) {
    if (truth[k]) truths += 1.0;
    if (selected[k]) {
      chosen += 1.0;
      if (truth[k]) {
        hits += 1.0;
      } else {
        false_hits += 1.0;
      }
    }
  }
  FeatureAccuracy out;
  out.degenerate = truths == 0.0;
  out.pd = out.degenerate ? 0.0 : hits / truths;
  out.fdr = false_hits / std::max(chosen, 1.0);
  return out;
}

}  // namespace sproga
