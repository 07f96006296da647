#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "insitu/solve.hpp"

namespace insitu {

// Multiplier c in the quadratic total-cost check
//   total ops <= c * 2 m^2 n   (row streams)
//   total ops <= c * 2 m n^2   (column streams)
// in OpCounter units. Square streams of a few dozen rows settle near 0.5 to 0.65
// of the model; the linear-in-width terms push tiny problems higher (2.06 at m = n = 2, the
// worst case over 2..40 in both dimensions).
inline constexpr double kQuadraticBoundConstant = 2.5;

// Accepted window for the fitted per-step slope, as a multiple of the stream
// width (n for rows, m for columns). The reference model is 4 per unit width.
inline constexpr double kSlopeRatioMin = 2.0;
inline constexpr double kSlopeRatioMax = 8.0;

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least-squares line through (x_k, y_k).
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct ComplexityReport {
  Mode mode = Mode::Row;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t trials = 0;
  /// Delta(i): ops per push, identical across trials (checked).
  std::vector<std::uint64_t> per_step;
  /// Fit over the full-rank prefix, steps 1..min(m, n), where every earlier
  /// vector is still an active basis vector. Later pushes are dependent and
  /// their cost stops growing.
  LinearFit per_step_fit;
  std::size_t fit_points = 0;
  double slope_ratio = 0.0;  // slope / width
  double reference_slope = 0.0;  // 4 * width
  /// Work left after the last datum arrives when acquisition is slow: Delta(last).
  std::uint64_t lower_bound_ops = 0;
  /// Work when all data is present at the outset: sum of Delta.
  std::uint64_t upper_bound_ops = 0;
  double lower_model = 0.0;  // 4 m n
  double upper_model = 0.0;  // 2 m^2 n (row) or 2 m n^2 (column)
  double bound_constant = kQuadraticBoundConstant;
  bool deterministic = true;
  bool model_consistent = false;
};

// Streams random full-rank (rank min(m, n)) systems through the online solver
// with op counting and fits Delta against the step index. Seeded, so two calls
// with equal arguments return equal reports.
ComplexityReport profile_row_solver(std::size_t m, std::size_t n, std::size_t trials,
                                    std::uint64_t seed = 1);
ComplexityReport profile_col_solver(std::size_t m, std::size_t n, std::size_t trials,
                                    std::uint64_t seed = 1);

// Solver work still outstanding when the last datum arrives, for data that
// arrives every `tau` op-units: step k cannot start before k*tau nor before step
// k-1 finishes. Ranges from Delta(last) (large tau) to sum(Delta) (tau -> 0).
double added_work(const std::vector<std::uint64_t>& per_step, double tau);

}  // namespace insitu
