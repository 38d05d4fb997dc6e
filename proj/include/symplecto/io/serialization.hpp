#pragma once

// Text formats.
//
// TrigPolynomial JSON: either a bare list of terms or an object
// {"q": 1, "terms": [...]}. Each term is
//   {"n": [1], "m": [0], "phase": "cos", "coeff": 0.5}
// with integer vectors n, m of common length q and phase "cos" or "sin".
// Terms are canonicalised and summed on input, so duplicates are allowed.
//
// CSV: comma-separated, one header line, doubles printed with %.17g so
// that values round-trip exactly.

#include <filesystem>
#include <string>
#include <vector>

#include "symplecto/trig/trig_polynomial.hpp"

namespace symplecto::io {

/// Throws std::invalid_argument with a description of the first bad field.
trig::TrigPolynomial parse_trig_json(const std::string& text);
/// Throws std::runtime_error when the file cannot be read.
trig::TrigPolynomial load_trig_json(const std::filesystem::path& path);
/// Object form, terms in canonical order.
std::string to_trig_json(const trig::TrigPolynomial& f);

std::string format_double(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(std::vector<std::string> cells);
  /// Sorts rows lexicographically by cell text (header stays first).
  void sort_rows();
  std::string str() const;
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes atomically enough for our purposes: to path.tmp, then renames.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace symplecto::io
