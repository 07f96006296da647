#include "insitu/online.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "insitu/errors.hpp"

namespace insitu {

namespace {

void require_open(bool finalized, const char* op) {
  if (finalized) throw StateError(std::string(op) + ": stream already finalized");
}

double norm_of(const std::vector<Complex>& v) { return norm(std::span<const Complex>(v)); }

}  // namespace

// ---------------------------------------------------------------- rows

OnlineRowSolver::OnlineRowSolver(std::size_t n, OnlineOptions opts)
    : n_(n),
      opts_(opts),
      stepper_(n, opts.tol.value_or(default_tolerance(1, n)), ops_.get()),
      x_p_(n) {}

StepReport OnlineRowSolver::push(std::span<const Complex> a_row, Complex b_i) {
  require_open(finalized_, "row_push");
  require_finite(b_i, "row_push");
  const std::size_t i = stepper_.steps_done();
  const StepOutcome outcome = stepper_.step(i, a_row);

  b_.push_back(b_i);
  a_rows_.insert(a_rows_.end(), a_row.begin(), a_row.end());

  // b'_i = Row_i[M] . b; M is lower triangular so only b_0..b_i take part.
  const std::span<const Complex> m_row = stepper_.transform_row(i);
  Complex b_prime = 0.0;
  for (std::size_t k = 0; k <= i; ++k) b_prime += m_row[k] * b_[k];
  ops_->add_mul_adds(i + 1);

  StepReport report{i, Vector(n_), outcome.dependent, false, 0};
  if (outcome.dependent) {
    const double scale = std::max(1.0, norm_of(b_));
    report.inconsistent = std::abs(b_prime) > opts_.verify_tol * scale;
    any_inconsistent_ = any_inconsistent_ || report.inconsistent;
  } else {
    const std::span<const Complex> q = stepper_.reduced_row(i);
    for (std::size_t j = 0; j < n_; ++j) {
      report.increment[j] = std::conj(q[j]) * b_prime;
      x_p_[j] += report.increment[j];
    }
    ops_->add_mul_adds(n_);
  }

  if (opts_.accumulate_g) {
    g_cols_.emplace_back(n_, Complex{0.0});
    if (!outcome.dependent) {
      // G += Col_i[(A')^*] Row_i[M]
      const std::span<const Complex> q = stepper_.reduced_row(i);
      for (std::size_t k = 0; k <= i; ++k) {
        std::vector<Complex>& col = g_cols_[k];
        for (std::size_t j = 0; j < n_; ++j) col[j] += std::conj(q[j]) * m_row[k];
      }
      ops_->add_mul_adds(n_ * (i + 1));
    }
  }

  check_finite(x_p_, "row_push");
  norm_history_.push_back(norm(x_p_));
  report.ops_used = ops_->mark_step();
  return report;
}

SolveResult OnlineRowSolver::finalize(bool want_p) {
  const std::size_t m = rows_seen();
  if (m == 0) throw StateError("row_finalize: no rows were pushed");
  finalized_ = true;

  SolveResult out{x_p_};
  const Matrix a(m, n_, a_rows_);
  const Vector b(b_);
  if (opts_.accumulate_g) {
    Matrix g(n_, m);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < n_; ++j) g(j, k) = g_cols_[k][j];
    }
    if (want_p) out.p = null_projector(g, a);
    out.g = std::move(g);
  } else if (want_p) {
    const Matrix a_prime = stepper_.reduced_matrix();
    out.p = Matrix::identity(n_) - matmul(conj_transpose(a_prime), a_prime);
  }
  out.rank = stepper_.independent().size();
  out.residual_norm = norm(matvec(a, x_p_) - b);
  out.inconsistent =
      any_inconsistent_ || out.residual_norm > opts_.verify_tol * std::max(1.0, norm(b));
  out.tol = stepper_.tol();
  out.verify_tol = opts_.verify_tol;
  return out;
}

// ---------------------------------------------------------------- columns

OnlineColSolver::OnlineColSolver(Vector b, OnlineOptions opts)
    : b_(std::move(b)),
      opts_(opts),
      stepper_(b_.dim(), opts.tol.value_or(default_tolerance(b_.dim(), 1)), ops_.get()) {}

StepReport OnlineColSolver::push(std::span<const Complex> a_col) {
  require_open(finalized_, "col_push");
  const std::size_t j = stepper_.steps_done();
  const std::size_t m = b_.dim();
  if (a_col.size() != m) {
    throw ArgumentError("col_push: column has " + std::to_string(a_col.size()) +
                        " entries, expected " + std::to_string(m));
  }
  std::vector<Complex> conj_col(a_col.begin(), a_col.end());
  for (Complex& z : conj_col) z = std::conj(z);
  const StepOutcome outcome = stepper_.step(j, conj_col);
  a_cols_.emplace_back(a_col.begin(), a_col.end());

  x_p_.push_back(0.0);
  StepReport report{j, Vector(j + 1), outcome.dependent, false, 0};
  // Row j of (A')^* is the stored (conjugated) reduced row; column j of M is
  // the conjugate of the stored transform row, supported on 0..j.
  const std::span<const Complex> a_prime_h_row = stepper_.reduced_row(j);
  const std::span<const Complex> m_col_conj = stepper_.transform_row(j);
  if (!outcome.dependent) {
    Complex coeff = 0.0;
    for (std::size_t i = 0; i < m; ++i) coeff += a_prime_h_row[i] * b_[i];
    for (std::size_t k = 0; k <= j; ++k) {
      report.increment[k] = std::conj(m_col_conj[k]) * coeff;
      x_p_[k] += report.increment[k];
    }
    ops_->add_mul_adds(m + j + 1);
  }

  if (opts_.accumulate_g) {
    g_rows_.emplace_back(m, Complex{0.0});
    if (!outcome.dependent) {
      // G += Col_j[M] Row_j[(A')^*]
      for (std::size_t k = 0; k <= j; ++k) {
        const Complex mk = std::conj(m_col_conj[k]);
        std::vector<Complex>& row = g_rows_[k];
        for (std::size_t i = 0; i < m; ++i) row[i] += mk * a_prime_h_row[i];
      }
      ops_->add_mul_adds(m * (j + 1));
    }
  }

  for (const Complex& z : x_p_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ComputationError("col_push: non-finite result");
    }
  }
  report.ops_used = ops_->mark_step();
  return report;
}

SolveResult OnlineColSolver::finalize(bool want_p) {
  const std::size_t n = cols_seen();
  if (n == 0) throw StateError("col_finalize: no columns were pushed");
  finalized_ = true;

  const Factorization f = column_form(stepper_);
  const Matrix a = Matrix::from_columns(a_cols_);
  SolveResult out{Vector(x_p_)};
  if (opts_.accumulate_g) {
    Matrix g = Matrix::from_rows(g_rows_);
    if (want_p) out.p = null_projector(g, a);
    out.g = std::move(g);
  } else if (want_p) {
    out.p = null_projector(gen_inverse_col(f), a);
  }

  const Vector b_c = matvec(f.a_prime, matvec(conj_transpose(f.a_prime), b_));
  out.rank = f.rank();
  out.residual_norm = norm(matvec(a, out.x_p) - b_c);
  out.b_projected_norm = norm(b_ - b_c);
  out.inconsistent = *out.b_projected_norm > opts_.verify_tol * std::max(1.0, norm(b_));
  out.tol = f.tol;
  out.verify_tol = opts_.verify_tol;
  return out;
}

}  // namespace insitu
