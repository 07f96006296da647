#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "insitu/matrix.hpp"
#include "insitu/op_counter.hpp"

namespace insitu {

enum class Orientation { Row, Column };

const char* to_string(Orientation o) noexcept;

// Quasi-orthonormal factorization of A.
//
//   Row form:    M * A = A'   (M is m-by-m, lower triangular)
//   Column form: A * M = A'   (M is n-by-n, upper triangular)
//
// The rows (columns) of A' listed in `s` have unit norm and are mutually
// orthogonal; all other rows (columns) are exactly zero. M is nonsingular.
struct Factorization {
  Matrix a_prime;
  Matrix m;
  IndexSet s;
  Orientation orientation;
  double tol;

  std::size_t rank() const noexcept { return s.size(); }
};

/// Default zero-vector threshold: 1e-10 * max(rows, cols).
double default_tolerance(std::size_t rows, std::size_t cols) noexcept;

/// Below this fraction of its original norm, a projected vector gets a second
/// Gram-Schmidt pass before the zero test.
inline constexpr double kReorthogonalizeRatio = 1e-3;

struct StepOutcome {
  std::size_t index = 0;
  bool dependent = false;
  bool reorthogonalized = false;
};

// Incremental modified Gram-Schmidt on the rows of the augmented block [A|1].
//
// Step i takes row i of A, projects out every earlier nonzero reduced row (in
// order), and applies the same elementary operations to row i of the identity
// block. If what is left has norm <= tol * max(1, |a_i|) the reduced row is set
// to exact zeros and the M row is kept unnormalized; otherwise both are scaled
// by 1/norm. After step i, rows 0..i of A' and M never change again, which is
// what the streaming solvers rely on.
//
// Column form reuses this kernel on conj(column j): (A M)^* = M^* A^*.
class RowStepper {
 public:
  RowStepper(std::size_t width, double tol, OpCounter* counter = nullptr);

  /// Processes row `index`; throws StateError unless index == steps_done().
  StepOutcome step(std::size_t index, std::span<const Complex> row);

  std::size_t steps_done() const noexcept { return transform_.size(); }
  std::size_t width() const noexcept { return width_; }
  double tol() const noexcept { return tol_; }
  const IndexSet& independent() const noexcept { return s_; }

  /// Row i of A' (length width()).
  std::span<const Complex> reduced_row(std::size_t i) const;
  /// Row i of M restricted to its support, entries 0..i.
  std::span<const Complex> transform_row(std::size_t i) const;

  /// steps_done()-by-width() snapshot of A'.
  Matrix reduced_matrix() const;
  /// steps_done()-by-steps_done() snapshot of M.
  Matrix transform_matrix() const;

 private:
  void project(std::vector<Complex>& v, std::vector<Complex>& mrow) const;

  std::size_t width_;
  double tol_;
  OpCounter* counter_;
  IndexSet s_{0};
  std::vector<Complex> reduced_;                 // row-major, steps_done() x width_
  std::vector<std::vector<Complex>> transform_;  // row i has i+1 entries
};

/// Row form of a completed (or partial) stepper.
Factorization row_form(const RowStepper& stepper);
/// Column form of a stepper that was fed conjugated columns.
Factorization column_form(const RowStepper& stepper);

Factorization row_orthonormalize(const Matrix& a, std::optional<double> tol = std::nullopt,
                                 OpCounter* counter = nullptr);
Factorization col_orthonormalize(const Matrix& a, std::optional<double> tol = std::nullopt,
                                 OpCounter* counter = nullptr);

}  // namespace insitu
