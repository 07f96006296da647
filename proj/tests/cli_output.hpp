#pragma once

// Readers for the text the insitu CLI prints, shared by the CLI tests and the
// acceptance run.

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "insitu/io.hpp"
#include "insitu/matrix.hpp"

namespace insitu::testing {

/// Entries of a "# name N" block of "re im" lines; empty if the block is absent.
inline std::vector<Complex> read_block(const std::string& out, const std::string& header) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line) && line.rfind(header, 0) != 0) {
  }
  if (line.rfind(header, 0) != 0) return {};
  const std::size_t count = std::stoul(line.substr(header.size()));
  std::vector<Complex> v;
  for (std::size_t k = 0; k < count && std::getline(in, line); ++k) {
    std::istringstream fields(line);
    double re = 0, im = 0;
    fields >> re >> im;
    v.emplace_back(re, im);
  }
  return v;
}

/// "key value" lines following "# summary" or "# penrose".
inline std::map<std::string, std::string> summary(const std::string& out) {
  std::map<std::string, std::string> kv;
  std::istringstream in(out);
  std::string line;
  bool on = false;
  while (std::getline(in, line)) {
    if (line == "# summary" || line == "# penrose") {
      on = true;
      continue;
    }
    if (!on || line.empty() || line[0] == '#') continue;
    const auto sp = line.find(' ');
    kv[line.substr(0, sp)] = sp == std::string::npos ? "" : line.substr(sp + 1);
  }
  return kv;
}

struct WatchLine {
  std::size_t step = 0;
  bool dependent = false;
  double norm = 0.0;
  std::vector<Complex> increment;
};

/// "step i independent|dependent norm X ops K [inconsistent] increment re im ..."
inline std::vector<WatchLine> watch_lines(const std::string& out) {
  std::vector<WatchLine> lines;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("step ", 0) != 0) continue;
    std::istringstream f(line);
    WatchLine w;
    std::string word, kind;
    f >> word >> w.step >> kind >> word >> w.norm;
    w.dependent = kind == "dependent";
    while (f >> word && word != "increment") {
    }
    double re = 0, im = 0;
    while (f >> re >> im) w.increment.emplace_back(re, im);
    lines.push_back(std::move(w));
  }
  return lines;
}

/// One dense-text token for z, e.g. "1.5-2i".
inline std::string token(Complex z) {
  return format_real(z.real()) + (std::signbit(z.imag()) ? "" : "+") + format_real(z.imag()) + "i";
}

/// Row stream text: each line holds a row of A followed by b_i.
inline std::string row_stream_text(const Matrix& a, const Vector& b) {
  std::ostringstream s;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s << token(a(i, j)) << ' ';
    s << token(b[i]) << '\n';
  }
  s << "#end\n";
  return s.str();
}

/// Column stream text: b on the first line, then one column of A per line.
inline std::string col_stream_text(const Matrix& a, const Vector& b) {
  std::ostringstream s;
  for (std::size_t i = 0; i < b.dim(); ++i) s << token(b[i]) << ' ';
  s << '\n';
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) s << token(a(i, j)) << ' ';
    s << '\n';
  }
  return s.str();
}

}  // namespace insitu::testing
