#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "insitu/matrix.hpp"

namespace insitu {

/// Shortest decimal string that parses back to exactly `x`.
std::string format_real(double x);
/// "re im" pair, both round-trippable.
std::string format_pair(Complex z);

// Parses one complex token of the dense text format: "3", "-2.5e-3", "1+2i",
// "1-2i", "2i", "-i", "0.5-1e-3i". 'j' is accepted in place of 'i'.
// Throws ParseError (line 0) on anything else or on non-finite values.
Complex parse_complex(std::string_view token);

// Matrix Market reader. Supports the `matrix` object in `array` and
// `coordinate` formats with `real`, `integer` or `complex` fields and
// `general`, `symmetric`, `hermitian` or `skew-symmetric` symmetry. Coordinate
// entries are scattered into a dense zero matrix; duplicates are summed.
Matrix parse_matrix_market(std::istream& in);
Matrix parse_matrix_market(std::string_view text);

/// Writes `array complex general` (or `array real general` when every
/// imaginary part is zero) with round-trippable numbers.
void write_matrix_market(std::ostream& out, const Matrix& a);
std::string to_matrix_market(const Matrix& a);

// Whitespace-separated dense text: one matrix row per line, complex entries as
// parse_complex tokens. Blank lines and lines starting with '#' or '%' are
// skipped.
Matrix parse_dense_text(std::istream& in);

/// Matrix Market if the first line starts with "%%MatrixMarket", dense text otherwise.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);

/// A single-column or single-row matrix as a vector.
Vector as_vector(const Matrix& a);

// Line-framed vector stream: one vector per line (parse_complex tokens). A
// line "#end" finishes the stream; other '#' lines and blank lines are skipped.
class VectorStreamReader {
 public:
  explicit VectorStreamReader(std::istream& in) : in_(in) {}

  /// Next vector, or nullopt at "#end" or end of input.
  std::optional<std::vector<Complex>> next();

  /// 1-based number of the last line read.
  std::size_t line() const noexcept { return line_; }
  /// True once "#end" was seen (as opposed to plain end of input).
  bool saw_end_marker() const noexcept { return end_marker_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  bool end_marker_ = false;
  bool done_ = false;
};

}  // namespace insitu
