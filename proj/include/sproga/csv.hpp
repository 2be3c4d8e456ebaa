#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "sproga/types.hpp"

namespace sproga::csv {

enum class HeaderMode { detect, present, absent };

struct ReadOptions {
  HeaderMode header = HeaderMode::detect;
  /// Column holding the class of each sample, by header name or 0-based
  /// index. It is removed from the feature block.
  std::optional<std::string> label_column;
};

/// Samples-as-rows table, already transposed to p x n.
struct Dataset {
  DataMatrix X;
  std::vector<std::string> feature_names;
  std::optional<std::vector<int>> labels;
};

/// Comma separated values, one sample per row. Lines starting with '#' and
/// blank lines are skipped. With HeaderMode::detect the first row is a
/// header when any of its fields is not a number. Integer labels keep their
/// value; any other token gets a negative code (-1, -2, ...) in order of
/// first appearance. Throws DataError naming the offending line for ragged
/// rows and non-numeric fields.
Dataset read_samples(const std::filesystem::path& path, const ReadOptions& options = {});

/// Reads the last column of a label file such as the assignments or truth
/// output (sample_id, cluster), with the same coding of non-integer tokens.
/// The first row is skipped as a header when one of its fields is text
/// above a number.
std::vector<int> read_labels(const std::filesystem::path& path);

/// Reads the last column of a feature mask file; nonzero means informative.
std::vector<bool> read_mask(const std::filesystem::path& path);

/// Output file that only appears under its final name once commit() has
/// succeeded. Until then everything goes to a sibling temporary, which is
/// removed if the writer is destroyed without committing.
class AtomicFile {
 public:
  explicit AtomicFile(std::filesystem::path target);
  AtomicFile(const AtomicFile&) = delete;
  AtomicFile& operator=(const AtomicFile&) = delete;
  ~AtomicFile();

  std::ostream& stream() { return out_; }
  void commit();

 private:
  std::filesystem::path target_;
  std::filesystem::path temp_;
  std::ofstream out_;
  bool committed_ = false;
};

/// Fixed-point formatting with the given number of decimals.
std::string format(double value, int precision);

}  // namespace sproga::csv
