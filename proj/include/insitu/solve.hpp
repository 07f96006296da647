#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "insitu/factorize.hpp"
#include "insitu/matrix.hpp"

namespace insitu {

enum class Mode { Row, Column };

const char* to_string(Mode m) noexcept;
/// Parses "row" / "col" / "column"; throws ArgumentError otherwise.
Mode parse_mode(const std::string& text);

/// Default relative threshold for residual checks (distinct from the
/// factorization's zero-vector tolerance).
inline constexpr double kDefaultVerifyTol = 1e-8;

struct SolveOptions {
  std::optional<double> tol;  // factorization tolerance; default_tolerance() if unset
  bool want_g = false;
  bool want_p = false;
  double verify_tol = kDefaultVerifyTol;
};

struct SolveResult {
  explicit SolveResult(Vector particular) : x_p(std::move(particular)) {}

  Vector x_p;
  std::optional<Matrix> g;
  std::optional<Matrix> p;
  std::size_t rank = 0;
  /// |A x_p - b| in row mode, |A x_p - b_c| in column mode.
  double residual_norm = 0.0;
  /// Column mode only: |b - b_c|, the least-squares residual of b.
  std::optional<double> b_projected_norm;
  /// b has a component outside the column space: residual_norm (row mode) or
  /// b_projected_norm (column mode) exceeds verify_tol * max(1, |b|).
  bool inconsistent = false;
  double tol = 0.0;
  double verify_tol = kDefaultVerifyTol;
};

struct MatrixSolveResult {
  Matrix x_p;
  Matrix g;
  Matrix p;
  std::size_t rank = 0;
  Mode mode = Mode::Row;
};

// Minimum-norm solution x_p = (A')^* b' with b' = M b, from the row form M A = A'.
// With want_g, G = (A')^* M and P = 1 - G A; with only want_p, P = 1 - (A')^* A'.
SolveResult solve_row_minnorm(const Matrix& a, const Vector& b, const SolveOptions& opts = {});
SolveResult solve_row_minnorm(const Factorization& f, const Matrix& a, const Vector& b,
                              const SolveOptions& opts = {});

// Least-squares solution x_p = M (A')^* b from the column form A M = A'.
// Solves A x = b_c exactly, where b_c = A' (A')^* b. Not minimum norm unless A
// has full column rank.
SolveResult solve_col_lsq(const Matrix& a, const Vector& b, const SolveOptions& opts = {});
SolveResult solve_col_lsq(const Factorization& f, const Matrix& a, const Vector& b,
                          const SolveOptions& opts = {});

/// b_c = A' (A')^* b, the orthogonal projection of b onto the column space.
Vector project_column_space(const Factorization& f, const Vector& b);

/// G = (A')^* M. A {1,2,4}-inverse.
Matrix gen_inverse_row(const Factorization& f);
/// G = M (A')^*. A {1,2,3}-inverse.
Matrix gen_inverse_col(const Factorization& f);

/// P = 1_n - G A.
Matrix null_projector(const Matrix& g, const Matrix& a);
/// x_h = P y. Any y gives a null-space vector when P comes from a {1}-inverse.
Vector homogeneous_sample(const Matrix& p, const Vector& y);

// A X = B for p right-hand sides. The factorization is computed once; column k
// of x_p is bitwise equal to the single-RHS solve on column k of B.
MatrixSolveResult solve_matrix_rhs(const Matrix& a, const Matrix& b, Mode mode,
                                   std::optional<double> tol = std::nullopt);

}  // namespace insitu
