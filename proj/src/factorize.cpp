#include "insitu/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "insitu/errors.hpp"

namespace insitu {

const char* to_string(Orientation o) noexcept { return o == Orientation::Row ? "row" : "col"; }

double default_tolerance(std::size_t rows, std::size_t cols) noexcept {
  return 1e-10 * static_cast<double>(std::max(rows, cols));
}

RowStepper::RowStepper(std::size_t width, double tol, OpCounter* counter)
    : width_(width), tol_(tol), counter_(counter) {
  if (width == 0) throw ArgumentError("RowStepper: width must be >= 1");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ArgumentError("RowStepper: tol must be > 0");
}

void RowStepper::project(std::vector<Complex>& v, std::vector<Complex>& mrow) const {
  for (std::size_t k : s_.members()) {
    const std::span<const Complex> q = reduced_row(k);
    const Complex c = inner(q, v, counter_);
    for (std::size_t j = 0; j < width_; ++j) v[j] -= c * q[j];
    const std::vector<Complex>& mk = transform_[k];
    for (std::size_t j = 0; j <= k; ++j) mrow[j] -= c * mk[j];
    if (counter_) counter_->add_mul_adds(width_ + k + 1);
  }
}

StepOutcome RowStepper::step(std::size_t index, std::span<const Complex> row) {
  if (index != steps_done()) {
    throw StateError("row_step: expected index " + std::to_string(steps_done() + 1) + ", got " +
                     std::to_string(index + 1));
  }
  if (row.size() != width_) {
    throw ArgumentError("row_step: vector has " + std::to_string(row.size()) +
                        " entries, expected " + std::to_string(width_));
  }
  for (const Complex& z : row) require_finite(z, "row_step");

  std::vector<Complex> v(row.begin(), row.end());
  std::vector<Complex> mrow(index + 1, Complex{0.0});
  mrow[index] = 1.0;

  StepOutcome out{index, false, false};
  const double original = norm(v, counter_);
  if (!std::isfinite(original)) throw ComputationError("row_step: norm overflow");
  const double threshold = tol_ * std::max(1.0, original);

  project(v, mrow);
  double remaining = norm(v, counter_);
  if (remaining > threshold && remaining < kReorthogonalizeRatio * original) {
    project(v, mrow);
    remaining = norm(v, counter_);
    out.reorthogonalized = true;
  }

  for (const Complex& z : mrow) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ComputationError("row_step: non-finite transform entry");
    }
  }

  s_.set_universe(index + 1);
  if (remaining <= threshold) {
    std::fill(v.begin(), v.end(), Complex{0.0});
    out.dependent = true;
  } else {
    const double scale = 1.0 / remaining;
    for (Complex& z : v) z *= scale;
    for (Complex& z : mrow) z *= scale;
    if (counter_) {
      counter_->add_divisions(1);
      counter_->add_mul_adds(width_ + index + 1);
    }
    s_.insert(index);
  }
  reduced_.insert(reduced_.end(), v.begin(), v.end());
  transform_.push_back(std::move(mrow));
  return out;
}

std::span<const Complex> RowStepper::reduced_row(std::size_t i) const {
  return {reduced_.data() + i * width_, width_};
}

std::span<const Complex> RowStepper::transform_row(std::size_t i) const { return transform_[i]; }

Matrix RowStepper::reduced_matrix() const {
  if (steps_done() == 0) throw StateError("RowStepper: no rows processed");
  return Matrix(steps_done(), width_, reduced_);
}

Matrix RowStepper::transform_matrix() const {
  if (steps_done() == 0) throw StateError("RowStepper: no rows processed");
  const std::size_t p = steps_done();
  Matrix m(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    std::copy(transform_[i].begin(), transform_[i].end(), m.row(i).begin());
  }
  return m;
}

Factorization row_form(const RowStepper& stepper) {
  return Factorization{stepper.reduced_matrix(), stepper.transform_matrix(), stepper.independent(),
                       Orientation::Row, stepper.tol()};
}

Factorization column_form(const RowStepper& stepper) {
  return Factorization{conj_transpose(stepper.reduced_matrix()),
                       conj_transpose(stepper.transform_matrix()), stepper.independent(),
                       Orientation::Column, stepper.tol()};
}

Factorization row_orthonormalize(const Matrix& a, std::optional<double> tol, OpCounter* counter) {
  RowStepper stepper(a.cols(), tol.value_or(default_tolerance(a.rows(), a.cols())), counter);
  for (std::size_t i = 0; i < a.rows(); ++i) stepper.step(i, a.row(i));
  return row_form(stepper);
}

Factorization col_orthonormalize(const Matrix& a, std::optional<double> tol, OpCounter* counter) {
  const Matrix ah = conj_transpose(a);
  RowStepper stepper(ah.cols(), tol.value_or(default_tolerance(a.rows(), a.cols())), counter);
  for (std::size_t j = 0; j < ah.rows(); ++j) stepper.step(j, ah.row(j));
  return column_form(stepper);
}

}  // namespace insitu
