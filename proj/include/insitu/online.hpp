#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "insitu/factorize.hpp"
#include "insitu/matrix.hpp"
#include "insitu/op_counter.hpp"
#include "insitu/solve.hpp"

namespace insitu {

struct OnlineOptions {
  /// Zero-vector threshold. Defaults to 1e-10 * (the dimension known up
  /// front): n for row streams, m for column streams.
  std::optional<double> tol;
  /// Accumulate G term by term (memory O(mn)).
  bool accumulate_g = false;
  double verify_tol = kDefaultVerifyTol;
};

struct StepReport {
  std::size_t index = 0;  // 0-based position in the stream
  /// Row mode: x_p^(i), length n. Column mode: x_p^(j), length j+1 (the
  /// coordinates known so far).
  Vector increment;
  bool was_dependent = false;
  /// Row mode: the row zeroed out but its transformed right-hand side did not.
  bool inconsistent = false;
  std::uint64_t ops_used = 0;
};

// Row-at-a-time solver for A x = b: each push delivers one row of [A|b].
//
// After push i, x_p holds sum_{k<=i} conj(A'_k) b'_k, the minimum-norm solution
// of the first i+1 equations. Increments of independent rows are mutually
// orthogonal, so |x_p| never decreases.
class OnlineRowSolver {
 public:
  explicit OnlineRowSolver(std::size_t n, OnlineOptions opts = {});

  StepReport push(std::span<const Complex> a_row, Complex b_i);

  /// Returns the accumulated state (no recomputation). P is 1 - G A when G is
  /// accumulated, 1 - (A')^* A' otherwise. Further pushes throw StateError.
  SolveResult finalize(bool want_p = false);

  std::size_t n() const noexcept { return n_; }
  std::size_t rows_seen() const noexcept { return stepper_.steps_done(); }
  bool finalized() const noexcept { return finalized_; }
  const Vector& x_p() const noexcept { return x_p_; }
  const std::vector<double>& norm_history() const noexcept { return norm_history_; }
  const OpCounter& ops() const noexcept { return *ops_; }
  /// Row-form factorization of the rows seen so far.
  Factorization factorization() const { return row_form(stepper_); }

 private:
  std::size_t n_;
  OnlineOptions opts_;
  std::unique_ptr<OpCounter> ops_ = std::make_unique<OpCounter>();  // stable across moves
  RowStepper stepper_;
  Vector x_p_;
  std::vector<Complex> b_;
  std::vector<Complex> a_rows_;                // row-major copy of A
  std::vector<std::vector<Complex>> g_cols_;   // column k of G, each length n
  std::vector<double> norm_history_;
  bool any_inconsistent_ = false;
  bool finalized_ = false;
};

// Column-at-a-time solver: b is fixed up front, columns of A arrive in order.
//
// The unknown count grows by one per push. After push j, x_p is the column-mode
// least-squares solution for the first j+1 columns.
class OnlineColSolver {
 public:
  explicit OnlineColSolver(Vector b, OnlineOptions opts = {});

  StepReport push(std::span<const Complex> a_col);

  SolveResult finalize(bool want_p = false);

  std::size_t m() const noexcept { return b_.dim(); }
  std::size_t cols_seen() const noexcept { return stepper_.steps_done(); }
  bool finalized() const noexcept { return finalized_; }
  /// Current solution; empty before the first push.
  const std::vector<Complex>& x_p() const noexcept { return x_p_; }
  const OpCounter& ops() const noexcept { return *ops_; }
  /// Column-form factorization of the columns seen so far.
  Factorization factorization() const { return column_form(stepper_); }

 private:
  Vector b_;
  OnlineOptions opts_;
  std::unique_ptr<OpCounter> ops_ = std::make_unique<OpCounter>();  // stable across moves
  RowStepper stepper_;  // fed conj(column)
  std::vector<Complex> x_p_;
  std::vector<std::vector<Complex>> a_cols_;
  std::vector<std::vector<Complex>> g_rows_;  // row k of G, each length m
  bool finalized_ = false;
};

}  // namespace insitu
