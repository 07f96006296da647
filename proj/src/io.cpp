#include "insitu/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "insitu/errors.hpp"

namespace insitu {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Strict decimal parse; a leading '+' is allowed.
std::optional<double> parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty() || s.front() == '+') return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

double parse_real_or_throw(std::string_view s, std::size_t line) {
  const auto v = parse_real(s);
  if (!v) throw ParseError(line, "invalid number '" + std::string(s) + "'");
  if (!std::isfinite(*v)) throw ParseError(line, "non-finite number '" + std::string(s) + "'");
  return *v;
}

std::size_t parse_index(const std::string& s, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + s + "'");
  }
  return value;
}

enum class Field { Real, Complex };
enum class Symmetry { General, Symmetric, Hermitian, Skew };

// Next non-comment, non-blank line. Returns false at end of input.
bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '%') continue;
    return true;
  }
  return false;
}

}  // namespace

std::string format_real(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string format_pair(Complex z) { return format_real(z.real()) + " " + format_real(z.imag()); }

Complex parse_complex(std::string_view token) {
  const std::string_view t = trim(token);
  const auto fail = [&]() -> Complex {
    throw ParseError(0, "invalid complex number '" + std::string(token) + "'");
  };
  if (t.empty()) return fail();

  const char last = t.back();
  if (last != 'i' && last != 'j' && last != 'I' && last != 'J') {
    const auto re = parse_real(t);
    if (!re || !std::isfinite(*re)) return fail();
    return {*re, 0.0};
  }

  const std::string_view body = t.substr(0, t.size() - 1);
  // Split at the last sign that is not at the start and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_text = split == std::string_view::npos ? "" : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

  double re = 0.0;
  if (!re_text.empty()) {
    const auto v = parse_real(re_text);
    if (!v) return fail();
    re = *v;
  }
  double im = 0.0;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    const auto v = parse_real(im_text);
    if (!v) return fail();
    im = *v;
  }
  if (!std::isfinite(re) || !std::isfinite(im)) return fail();
  return {re, im};
}

Matrix parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty input, expected %%MatrixMarket header");
  ++line_no;

  const std::vector<std::string> header = split_ws(line);
  if (header.empty() || header[0] != "%%MatrixMarket") {
    throw ParseError(line_no, "missing %%MatrixMarket banner");
  }
  if (header.size() != 5) throw ParseError(line_no, "header needs 4 fields after the banner");
  if (lower(header[1]) != "matrix") throw ParseError(line_no, "object must be 'matrix'");

  const std::string format = lower(header[2]);
  if (format != "array" && format != "coordinate") {
    throw ParseError(line_no, "format must be 'array' or 'coordinate', got '" + header[2] + "'");
  }
  const bool coordinate = format == "coordinate";

  const std::string field_name = lower(header[3]);
  Field field;
  if (field_name == "real" || field_name == "integer" || field_name == "double") {
    field = Field::Real;
  } else if (field_name == "complex") {
    field = Field::Complex;
  } else {
    throw ParseError(line_no, "unsupported field type '" + header[3] + "'");
  }

  const std::string sym_name = lower(header[4]);
  Symmetry sym;
  if (sym_name == "general") {
    sym = Symmetry::General;
  } else if (sym_name == "symmetric") {
    sym = Symmetry::Symmetric;
  } else if (sym_name == "hermitian") {
    sym = Symmetry::Hermitian;
  } else if (sym_name == "skew-symmetric") {
    sym = Symmetry::Skew;
  } else {
    throw ParseError(line_no, "unsupported symmetry '" + header[4] + "'");
  }
  if (sym == Symmetry::Hermitian && field != Field::Complex) {
    throw ParseError(line_no, "hermitian symmetry requires a complex field");
  }

  if (!next_data_line(in, line, line_no)) throw ParseError(line_no, "missing size line");
  const std::vector<std::string> size_tok = split_ws(line);
  if (size_tok.size() != (coordinate ? 3u : 2u)) throw ParseError(line_no, "malformed size line");
  const std::size_t rows = parse_index(size_tok[0], line_no, "row count");
  const std::size_t cols = parse_index(size_tok[1], line_no, "column count");
  if (rows == 0 || cols == 0) throw ParseError(line_no, "matrix dimensions must be >= 1");
  if (sym != Symmetry::General && rows != cols) {
    throw ParseError(line_no, "symmetric storage requires a square matrix");
  }

  Matrix a(rows, cols);
  const std::size_t value_tokens = field == Field::Complex ? 2 : 1;
  const auto read_value = [&](const std::vector<std::string>& tok, std::size_t first) {
    const double re = parse_real_or_throw(tok[first], line_no);
    const double im = field == Field::Complex ? parse_real_or_throw(tok[first + 1], line_no) : 0.0;
    return Complex{re, im};
  };
  const auto place = [&](std::size_t i, std::size_t j, Complex v, bool accumulate) {
    if (accumulate) {
      a(i, j) += v;
    } else {
      a(i, j) = v;
    }
    if (i == j) {
      if (sym == Symmetry::Skew && v != Complex{0.0}) {
        throw ParseError(line_no, "skew-symmetric matrix has a nonzero diagonal entry");
      }
      return;
    }
    if (sym == Symmetry::General) return;
    const Complex mirrored = sym == Symmetry::Symmetric   ? v
                             : sym == Symmetry::Hermitian ? std::conj(v)
                                                          : -v;
    if (accumulate) {
      a(j, i) += mirrored;
    } else {
      a(j, i) = mirrored;
    }
  };

  if (coordinate) {
    const std::size_t nnz = parse_index(size_tok[2], line_no, "entry count");
    for (std::size_t k = 0; k < nnz; ++k) {
      if (!next_data_line(in, line, line_no)) {
        throw ParseError(line_no, "expected " + std::to_string(nnz) + " entries, found " +
                                      std::to_string(k));
      }
      const std::vector<std::string> tok = split_ws(line);
      if (tok.size() != 2 + value_tokens) {
        throw ParseError(line_no, "expected " + std::to_string(2 + value_tokens) +
                                      " fields in coordinate entry");
      }
      const std::size_t i = parse_index(tok[0], line_no, "row index");
      const std::size_t j = parse_index(tok[1], line_no, "column index");
      if (i < 1 || i > rows || j < 1 || j > cols) {
        throw ParseError(line_no, "index (" + tok[0] + "," + tok[1] + ") out of bounds");
      }
      if (sym != Symmetry::General && j > i) {
        throw ParseError(line_no, "symmetric storage expects lower-triangle entries only");
      }
      place(i - 1, j - 1, read_value(tok, 2), true);
    }
  } else {
    // Column-major; symmetric variants store the lower triangle only.
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t first_row =
          sym == Symmetry::General ? 0 : (sym == Symmetry::Skew ? j + 1 : j);
      for (std::size_t i = first_row; i < rows; ++i) {
        if (!next_data_line(in, line, line_no)) {
          throw ParseError(line_no, "array data ended early at entry (" + std::to_string(i + 1) +
                                        "," + std::to_string(j + 1) + ")");
        }
        const std::vector<std::string> tok = split_ws(line);
        if (tok.size() != value_tokens) {
          throw ParseError(line_no, "expected " + std::to_string(value_tokens) +
                                        " value(s) per array entry");
        }
        place(i, j, read_value(tok, 0), false);
      }
    }
  }
  if (next_data_line(in, line, line_no)) throw ParseError(line_no, "unexpected trailing data");
  return a;
}

Matrix parse_matrix_market(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const Matrix& a) {
  const bool real = std::all_of(a.data().begin(), a.data().end(),
                                [](Complex z) { return z.imag() == 0.0; });
  out << "%%MatrixMarket matrix array " << (real ? "real" : "complex") << " general\n";
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      out << (real ? format_real(a(i, j).real()) : format_pair(a(i, j))) << '\n';
    }
  }
}

std::string to_matrix_market(const Matrix& a) {
  std::ostringstream out;
  write_matrix_market(out, a);
  return out.str();
}

Matrix parse_dense_text(std::istream& in) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#' || t.front() == '%') continue;
    std::vector<Complex> row;
    for (const std::string& tok : split_ws(line)) {
      try {
        row.push_back(parse_complex(tok));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(line_no, "row has " + std::to_string(row.size()) + " entries, expected " +
                                    std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(line_no, "no matrix rows found");
  return Matrix::from_rows(rows);
}

Matrix read_matrix(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream ss(text);
  if (trim(text).rfind("%%MatrixMarket", 0) == 0) return parse_matrix_market(ss);
  return parse_dense_text(ss);
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_matrix(in);
}

Vector as_vector(const Matrix& a) {
  if (a.cols() == 1) return a.col(0);
  if (a.rows() == 1) return Vector(std::vector<Complex>(a.row(0).begin(), a.row(0).end()));
  throw ArgumentError("expected a vector, got a " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " matrix");
}

std::optional<std::vector<Complex>> VectorStreamReader::next() {
  if (done_) return std::nullopt;
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    const std::string_view t = trim(line);
    if (t == "#end") {
      end_marker_ = true;
      done_ = true;
      return std::nullopt;
    }
    if (t.empty() || t.front() == '#' || t.front() == '%') continue;
    std::vector<Complex> v;
    for (const std::string& tok : split_ws(line)) {
      try {
        v.push_back(parse_complex(tok));
      } catch (const ParseError& e) {
        throw ParseError(line_, e.what());
      }
    }
    return v;
  }
  done_ = true;
  return std::nullopt;
}

}  // namespace insitu
