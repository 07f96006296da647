#include "insitu/profile.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "insitu/errors.hpp"
#include "insitu/online.hpp"

namespace insitu {

namespace {

Matrix random_gaussian(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  std::vector<Complex> data(rows * cols);
  for (Complex& z : data) {
    const double re = dist(rng);
    const double im = dist(rng);
    z = {re, im};
  }
  return Matrix(rows, cols, std::move(data));
}

void require_profile_args(std::size_t m, std::size_t n, std::size_t trials) {
  if (m < 2 || n < 2) throw ArgumentError("profile: m and n must be >= 2");
  if (trials < 1) throw ArgumentError("profile: trials must be >= 1");
}

ComplexityReport summarize(Mode mode, std::size_t m, std::size_t n, std::size_t trials,
                           std::vector<std::uint64_t> per_step, bool deterministic) {
  ComplexityReport r;
  r.mode = mode;
  r.m = m;
  r.n = n;
  r.trials = trials;
  r.deterministic = deterministic;

  const double width = static_cast<double>(mode == Mode::Row ? n : m);
  r.fit_points = std::min(m, n);
  std::vector<double> x(r.fit_points), y(r.fit_points);
  for (std::size_t k = 0; k < r.fit_points; ++k) {
    x[k] = static_cast<double>(k + 1);
    y[k] = static_cast<double>(per_step[k]);
  }
  r.per_step_fit = fit_line(x, y);
  r.slope_ratio = r.per_step_fit.slope / width;
  r.reference_slope = 4.0 * width;

  r.lower_bound_ops = per_step.back();
  r.upper_bound_ops = std::accumulate(per_step.begin(), per_step.end(), std::uint64_t{0});
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  r.lower_model = 4.0 * md * nd;
  r.upper_model = mode == Mode::Row ? 2.0 * md * md * nd : 2.0 * md * nd * nd;
  r.bound_constant = kQuadraticBoundConstant;
  r.per_step = std::move(per_step);

  r.model_consistent = r.deterministic && r.slope_ratio >= kSlopeRatioMin &&
                       r.slope_ratio <= kSlopeRatioMax &&
                       static_cast<double>(r.upper_bound_ops) <= r.bound_constant * r.upper_model;
  return r;
}

}  // namespace

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ArgumentError("fit_line: need at least two matching points");
  }
  const double count = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / count;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
  }
  if (sxx == 0.0) throw ArgumentError("fit_line: x values are all equal");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

ComplexityReport profile_row_solver(std::size_t m, std::size_t n, std::size_t trials,
                                    std::uint64_t seed) {
  require_profile_args(m, n, trials);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> first;
  bool deterministic = true;
  for (std::size_t t = 0; t < trials; ++t) {
    const Matrix a = random_gaussian(m, n + 1, rng);  // last column is b
    OnlineRowSolver solver(n);
    for (std::size_t i = 0; i < m; ++i) {
      solver.push(a.row(i).first(n), a(i, n));
    }
    if (t == 0) {
      first = solver.ops().per_step();
    } else if (solver.ops().per_step() != first) {
      deterministic = false;
    }
  }
  return summarize(Mode::Row, m, n, trials, std::move(first), deterministic);
}

ComplexityReport profile_col_solver(std::size_t m, std::size_t n, std::size_t trials,
                                    std::uint64_t seed) {
  require_profile_args(m, n, trials);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> first;
  bool deterministic = true;
  for (std::size_t t = 0; t < trials; ++t) {
    const Matrix at = random_gaussian(n + 1, m, rng);  // rows are columns of A; last row is b
    OnlineColSolver solver(Vector(std::vector<Complex>(at.row(n).begin(), at.row(n).end())));
    for (std::size_t j = 0; j < n; ++j) solver.push(at.row(j));
    if (t == 0) {
      first = solver.ops().per_step();
    } else if (solver.ops().per_step() != first) {
      deterministic = false;
    }
  }
  return summarize(Mode::Column, m, n, trials, std::move(first), deterministic);
}

double added_work(const std::vector<std::uint64_t>& per_step, double tau) {
  if (per_step.empty()) throw ArgumentError("added_work: no steps");
  if (!(tau >= 0.0)) throw ArgumentError("added_work: tau must be >= 0");
  double finish = 0.0;
  double arrival = 0.0;
  for (std::size_t k = 0; k < per_step.size(); ++k) {
    arrival = static_cast<double>(k + 1) * tau;
    finish = std::max(arrival, finish) + static_cast<double>(per_step[k]);
  }
  return finish - arrival;
}

}  // namespace insitu
