#include "sproga/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "sproga/errors.hpp"

namespace sproga::csv {
namespace {

struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<Row> read_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<Row> rows;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::string stripped = trim(text);
    if (stripped.empty() || stripped.front() == '#') continue;
    Row row{line, {}};
    std::size_t start = 0;
    for (;;) {
      const auto comma = stripped.find(',', start);
      row.fields.push_back(trim(std::string_view(stripped).substr(
          start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw DataError("read error in " + path.string());
  return rows;
}

std::optional<double> parse_number(const std::string& field) {
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

bool looks_like_header(const Row& row) {
  for (const auto& f : row.fields) {
    if (!parse_number(f)) return true;
  }
  return false;
}

std::string where(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line) + ": ";
}

// Maps arbitrary tokens to 0, 1, 2, ... by first appearance; integer tokens
// keep their value so that label files round-trip.
class LabelCoder {
 public:
  int code(const std::string& token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc() && ptr == token.data() + token.size()) return value;
    const auto [it, inserted] = codes_.try_emplace(token, next_);
    if (inserted) --next_;
    return it->second;
  }

 private:
  // Textual labels get negative codes so they never collide with integers.
  std::map<std::string, int> codes_;
  int next_ = -1;
};

std::vector<std::string> last_column(const std::filesystem::path& path) {
  std::vector<Row> rows = read_rows(path);
  if (rows.empty()) throw DataError(path.string() + ": no rows");
  const std::size_t width = rows.front().fields.size();
  for (const Row& r : rows) {
    if (r.fields.size() != width) {
      throw DataError(where(path, r.line) + "expected " + std::to_string(width) +
                      " fields, found " + std::to_string(r.fields.size()));
    }
  }
  // The first row is a header when some column is text there and numeric
  // in the next row.
  std::size_t first = 0;
  if (rows.size() > 1) {
    for (std::size_t c = 0; c < width; ++c) {
      if (!parse_number(rows[0].fields[c]) && parse_number(rows[1].fields[c])) first = 1;
    }
  }
  std::vector<std::string> out;
  out.reserve(rows.size() - first);
  for (std::size_t r = first; r < rows.size(); ++r) {
    if (rows[r].fields.back().empty()) throw DataError(where(path, rows[r].line) + "empty field");
    out.push_back(rows[r].fields.back());
  }
  return out;
}

}  // namespace

Dataset read_samples(const std::filesystem::path& path, const ReadOptions& options) {
  std::vector<Row> rows = read_rows(path);
  if (rows.empty()) throw DataError(path.string() + ": no data rows");
  const std::size_t width = rows.front().fields.size();
  for (const Row& r : rows) {
    if (r.fields.size() != width) {
      throw DataError(where(path, r.line) + "expected " + std::to_string(width) +
                      " fields, found " + std::to_string(r.fields.size()));
    }
  }

  bool has_header = false;
  switch (options.header) {
    case HeaderMode::present: has_header = true; break;
    case HeaderMode::absent: has_header = false; break;
    case HeaderMode::detect: has_header = looks_like_header(rows.front()); break;
  }
  std::vector<std::string> names;
  if (has_header) {
    names = rows.front().fields;
  } else {
    for (std::size_t c = 0; c < width; ++c) names.push_back("f" + std::to_string(c));
  }

  std::optional<std::size_t> label_col;
  if (options.label_column) {
    const std::string& key = *options.label_column;
    for (std::size_t c = 0; c < names.size() && has_header; ++c) {
      if (names[c] == key) label_col = c;
    }
    if (!label_col) {
      std::size_t index = 0;
      const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
      if (ec != std::errc() || ptr != key.data() + key.size() || index >= width) {
        throw DataError(path.string() + ": no label column '" + key + "'");
      }
      label_col = index;
    }
  }

  const std::size_t first = has_header ? 1 : 0;
  const auto n = static_cast<Index>(rows.size() - first);
  const auto p = static_cast<Index>(width - (label_col ? 1 : 0));
  if (n < 2) throw DataError(path.string() + ": need at least two samples");
  if (p < 1) throw DataError(path.string() + ": no feature columns");

  Matrix values(p, n);
  std::vector<int> labels;
  LabelCoder coder;
  for (std::size_t r = first; r < rows.size(); ++r) {
    const Row& row = rows[r];
    const auto col = static_cast<Index>(r - first);
    Index k = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (label_col && c == *label_col) {
        if (row.fields[c].empty()) throw DataError(where(path, row.line) + "empty label");
        labels.push_back(coder.code(row.fields[c]));
        continue;
      }
      const auto v = parse_number(row.fields[c]);
      if (!v) {
        throw DataError(where(path, row.line) + "field " + std::to_string(c + 1) +
                        " is not a number: '" + row.fields[c] + "'");
      }
      if (!std::isfinite(*v)) {
        throw DataError(where(path, row.line) + "field " + std::to_string(c + 1) +
                        " is not finite");
      }
      values(k++, col) = *v;
    }
  }
  if (label_col) names.erase(names.begin() + static_cast<std::ptrdiff_t>(*label_col));

  Dataset out{DataMatrix(std::move(values)), std::move(names), std::nullopt};
  if (label_col) out.labels = std::move(labels);
  return out;
}

std::vector<int> read_labels(const std::filesystem::path& path) {
  LabelCoder coder;
  std::vector<int> out;
  for (const auto& token : last_column(path)) out.push_back(coder.code(token));
  return out;
}

std::vector<bool> read_mask(const std::filesystem::path& path) {
  const auto tokens = last_column(path);
  std::vector<bool> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    const auto v = parse_number(token);
    if (!v) throw DataError(path.string() + ": mask entry '" + token + "' is not a number");
    out.push_back(*v != 0.0);
  }
  return out;
}

AtomicFile::AtomicFile(std::filesystem::path target) : target_(std::move(target)) {
  temp_ = target_;
  temp_ += ".partial";
  out_.open(temp_, std::ios::out | std::ios::trunc);
  if (!out_) throw DataError("cannot write " + temp_.string());
}

AtomicFile::~AtomicFile() {
  if (!committed_) {
    out_.close();
    std::error_code ignored;
    std::filesystem::remove(temp_, ignored);
  }
}

void AtomicFile::commit() {
  out_.flush();
  if (!out_) throw DataError("write failed for " + temp_.string());
  out_.close();
  std::error_code ec;
  std::filesystem::rename(temp_, target_, ec);
  if (ec) throw DataError("cannot rename " + temp_.string() + ": " + ec.message());
  committed_ = true;
}

std::string format(double value, int precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", precision, value);
  std::string s = buffer;
  if (s.front() == '-' && s.find_first_not_of("0.", 1) == std::string::npos) {
    s.erase(0, 1);  // no negative zero in output
  }
  return s;
}

}  // namespace sproga::csv
