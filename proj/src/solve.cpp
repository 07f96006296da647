#include "insitu/solve.hpp"

#include <algorithm>
#include <string>

#include "insitu/errors.hpp"

namespace insitu {

namespace {

void require_orientation(const Factorization& f, Orientation o, const char* op) {
  if (f.orientation != o) {
    throw ArgumentError(std::string(op) + ": expected a " + to_string(o) +
                        "-form factorization, got " + to_string(f.orientation));
  }
}

void require_rhs(const Matrix& a, std::size_t b_rows, const char* op) {
  if (b_rows != a.rows()) {
    throw ArgumentError(std::string(op) + ": right-hand side has " + std::to_string(b_rows) +
                        " rows, A has " + std::to_string(a.rows()));
  }
}

void require_factorization_of(const Factorization& f, const Matrix& a, const char* op) {
  if (f.a_prime.rows() != a.rows() || f.a_prime.cols() != a.cols()) {
    throw ArgumentError(std::string(op) + ": factorization shape does not match A");
  }
}

}  // namespace

const char* to_string(Mode m) noexcept { return m == Mode::Row ? "row" : "col"; }

Mode parse_mode(const std::string& text) {
  if (text == "row") return Mode::Row;
  if (text == "col" || text == "column") return Mode::Column;
  throw ArgumentError("unknown mode '" + text + "' (expected row or col)");
}

SolveResult solve_row_minnorm(const Matrix& a, const Vector& b, const SolveOptions& opts) {
  require_rhs(a, b.dim(), "solve_row_minnorm");
  return solve_row_minnorm(row_orthonormalize(a, opts.tol), a, b, opts);
}

SolveResult solve_row_minnorm(const Factorization& f, const Matrix& a, const Vector& b,
                              const SolveOptions& opts) {
  require_orientation(f, Orientation::Row, "solve_row_minnorm");
  require_factorization_of(f, a, "solve_row_minnorm");
  require_rhs(a, b.dim(), "solve_row_minnorm");

  const Matrix a_prime_h = conj_transpose(f.a_prime);
  const Vector b_prime = matvec(f.m, b);
  SolveResult out{matvec(a_prime_h, b_prime)};
  check_finite(out.x_p, "solve_row_minnorm");

  if (opts.want_g) {
    out.g = matmul(a_prime_h, f.m);
    if (opts.want_p) out.p = null_projector(*out.g, a);
  } else if (opts.want_p) {
    out.p = Matrix::identity(a.cols()) - matmul(a_prime_h, f.a_prime);
  }

  out.rank = f.rank();
  out.residual_norm = norm(matvec(a, out.x_p) - b);
  out.inconsistent = out.residual_norm > opts.verify_tol * std::max(1.0, norm(b));
  out.tol = f.tol;
  out.verify_tol = opts.verify_tol;
  return out;
}

SolveResult solve_col_lsq(const Matrix& a, const Vector& b, const SolveOptions& opts) {
  require_rhs(a, b.dim(), "solve_col_lsq");
  return solve_col_lsq(col_orthonormalize(a, opts.tol), a, b, opts);
}

SolveResult solve_col_lsq(const Factorization& f, const Matrix& a, const Vector& b,
                          const SolveOptions& opts) {
  require_orientation(f, Orientation::Column, "solve_col_lsq");
  require_factorization_of(f, a, "solve_col_lsq");
  require_rhs(a, b.dim(), "solve_col_lsq");

  const Vector coeffs = matvec(conj_transpose(f.a_prime), b);
  SolveResult out{matvec(f.m, coeffs)};
  check_finite(out.x_p, "solve_col_lsq");

  if (opts.want_g || opts.want_p) {
    Matrix g = gen_inverse_col(f);
    if (opts.want_p) out.p = null_projector(g, a);
    if (opts.want_g) out.g = std::move(g);
  }

  const Vector b_c = matvec(f.a_prime, coeffs);
  out.rank = f.rank();
  out.residual_norm = norm(matvec(a, out.x_p) - b_c);
  out.b_projected_norm = norm(b - b_c);
  out.inconsistent = *out.b_projected_norm > opts.verify_tol * std::max(1.0, norm(b));
  out.tol = f.tol;
  out.verify_tol = opts.verify_tol;
  return out;
}

Vector project_column_space(const Factorization& f, const Vector& b) {
  require_orientation(f, Orientation::Column, "project_column_space");
  require_rhs(f.a_prime, b.dim(), "project_column_space");
  return matvec(f.a_prime, matvec(conj_transpose(f.a_prime), b));
}

Matrix gen_inverse_row(const Factorization& f) {
  require_orientation(f, Orientation::Row, "gen_inverse_row");
  return matmul(conj_transpose(f.a_prime), f.m);
}

Matrix gen_inverse_col(const Factorization& f) {
  require_orientation(f, Orientation::Column, "gen_inverse_col");
  return matmul(f.m, conj_transpose(f.a_prime));
}

Matrix null_projector(const Matrix& g, const Matrix& a) {
  if (g.rows() != a.cols() || g.cols() != a.rows()) {
    throw ArgumentError("null_projector: G must be " + std::to_string(a.cols()) + "x" +
                        std::to_string(a.rows()) + " for this A");
  }
  return Matrix::identity(a.cols()) - matmul(g, a);
}

Vector homogeneous_sample(const Matrix& p, const Vector& y) {
  if (p.rows() != p.cols()) throw ArgumentError("homogeneous_sample: P must be square");
  return matvec(p, y);
}

MatrixSolveResult solve_matrix_rhs(const Matrix& a, const Matrix& b, Mode mode,
                                   std::optional<double> tol) {
  require_rhs(a, b.rows(), "solve_matrix_rhs");
  if (mode == Mode::Row) {
    const Factorization f = row_orthonormalize(a, tol);
    const Matrix a_prime_h = conj_transpose(f.a_prime);
    Matrix g = matmul(a_prime_h, f.m);
    Matrix p = null_projector(g, a);
    // (A')^* (M B) rather than G B: same value, and each column then matches
    // the single-RHS path bit for bit.
    return {matmul(a_prime_h, matmul(f.m, b)), std::move(g), std::move(p), f.rank(), mode};
  }
  const Factorization f = col_orthonormalize(a, tol);
  Matrix g = gen_inverse_col(f);
  Matrix p = null_projector(g, a);
  return {matmul(f.m, matmul(conj_transpose(f.a_prime), b)), std::move(g), std::move(p), f.rank(),
          mode};
}

}  // namespace insitu
