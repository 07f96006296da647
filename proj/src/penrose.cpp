#include "insitu/penrose.hpp"

#include <algorithm>
#include <string>

#include "insitu/errors.hpp"
#include "insitu/factorize.hpp"
#include "insitu/solve.hpp"

namespace insitu {

namespace {

double nonzero_or_one(double x) { return x > 0.0 ? x : 1.0; }

}  // namespace

bool PenroseReport::satisfies(const std::string& conditions) const {
  for (char c : conditions) {
    if (c < '1' || c > '4') throw ArgumentError("PenroseReport: conditions are digits 1-4");
    if (!holds[c - '1']) return false;
  }
  return true;
}

double default_penrose_tol(const Matrix& a) noexcept {
  return 1e-8 * static_cast<double>(std::max(a.rows(), a.cols()));
}

PenroseReport penrose_check(const Matrix& a, const Matrix& g, std::optional<double> tol) {
  if (g.rows() != a.cols() || g.cols() != a.rows()) {
    throw ArgumentError("penrose_check: G is " + std::to_string(g.rows()) + "x" +
                        std::to_string(g.cols()) + ", expected " + std::to_string(a.cols()) +
                        "x" + std::to_string(a.rows()));
  }
  PenroseReport r;
  r.tol = tol.value_or(default_penrose_tol(a));
  if (!(r.tol > 0.0)) throw ArgumentError("penrose_check: tol must be > 0");

  const Matrix ag = matmul(a, g);
  const Matrix ga = matmul(g, a);
  r.defects[0] = frobenius_norm(matmul(ag, a) - a) / nonzero_or_one(frobenius_norm(a));
  r.defects[1] = frobenius_norm(matmul(ga, g) - g) / nonzero_or_one(frobenius_norm(g));
  r.defects[2] = frobenius_norm(ag - conj_transpose(ag)) / std::max(1.0, frobenius_norm(ag));
  r.defects[3] = frobenius_norm(ga - conj_transpose(ga)) / std::max(1.0, frobenius_norm(ga));

  r.class_label = "{";
  for (std::size_t k = 0; k < 4; ++k) {
    r.holds[k] = r.defects[k] <= r.tol;
    if (r.holds[k]) r.class_label += static_cast<char>('1' + k);
  }
  r.class_label += "}";
  return r;
}

PenroseReport classify_row_method(const Matrix& a, std::optional<double> tol) {
  return penrose_check(a, gen_inverse_row(row_orthonormalize(a)), tol);
}

PenroseReport classify_col_method(const Matrix& a, std::optional<double> tol) {
  return penrose_check(a, gen_inverse_col(col_orthonormalize(a)), tol);
}

}  // namespace insitu
