#include "insitu/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "insitu/errors.hpp"

namespace insitu {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ArgumentError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw ArgumentError(std::string(op) + ": dimension mismatch " + std::to_string(a) + " vs " +
                        std::to_string(b));
  }
}

}  // namespace

void require_finite(Complex z, const char* context) {
  if (!finite(z)) throw ArgumentError(std::string(context) + ": non-finite entry");
}

// ---------------------------------------------------------------- Vector

Vector::Vector(std::size_t dim) : data_(dim) {
  if (dim == 0) throw ArgumentError("Vector: dimension must be >= 1");
}

Vector::Vector(std::initializer_list<Complex> entries) : Vector(std::vector<Complex>(entries)) {}

Vector::Vector(std::vector<Complex> entries) : data_(std::move(entries)) {
  if (data_.empty()) throw ArgumentError("Vector: dimension must be >= 1");
  for (const Complex& z : data_) require_finite(z, "Vector");
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw ArgumentError("Matrix: dimensions must be >= 1");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (rows == 0 || cols == 0) throw ArgumentError("Matrix: dimensions must be >= 1");
  if (data_.size() != rows * cols) throw ArgumentError("Matrix: entry count does not match shape");
  for (const Complex& z : data_) require_finite(z, "Matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : Matrix(from_rows(std::vector<std::vector<Complex>>(rows.begin(), rows.end()))) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  if (rows.empty() || rows.front().empty()) throw ArgumentError("Matrix: empty row list");
  const std::size_t n = rows.front().size();
  std::vector<Complex> data;
  data.reserve(rows.size() * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw ArgumentError("Matrix: ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), n, std::move(data));
}

Matrix Matrix::from_columns(const std::vector<std::vector<Complex>>& cols) {
  return transpose(from_rows(cols));
}

Matrix Matrix::column(const Vector& v) { return Matrix(v.dim(), 1, v.entries()); }

Vector Matrix::col(std::size_t j) const {
  std::vector<Complex> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return Vector(std::move(out));
}

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::size_t universe, std::vector<std::size_t> members) : universe_(universe) {
  for (std::size_t i : members) insert(i);
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

void IndexSet::insert(std::size_t i) {
  if (i >= universe_) {
    throw ArgumentError("IndexSet: index " + std::to_string(i + 1) + " exceeds universe " +
                        std::to_string(universe_));
  }
  auto it = std::lower_bound(members_.begin(), members_.end(), i);
  if (it == members_.end() || *it != i) members_.insert(it, i);
}

void IndexSet::set_universe(std::size_t p) {
  if (!members_.empty() && members_.back() >= p) {
    throw ArgumentError("IndexSet: shrinking universe would drop members");
  }
  universe_ = p;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(members_[k] + 1);
  }
  return out + "}";
}

// ---------------------------------------------------------------- arithmetic

Complex inner(std::span<const Complex> u, std::span<const Complex> v, OpCounter* counter) {
  require_same_dim(u.size(), v.size(), "inner");
  Complex acc = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) acc += std::conj(u[j]) * v[j];
  if (counter) counter->add_mul_adds(u.size());
  return acc;
}

Complex inner(const Vector& u, const Vector& v) { return inner(u.span(), v.span()); }

double norm(std::span<const Complex> v, OpCounter* counter) {
  double acc = 0.0;
  for (const Complex& z : v) acc += std::norm(z);
  if (counter) {
    counter->add_mul_adds(v.size());
    counter->add_sqrts(1);
  }
  return std::sqrt(acc);
}

double norm(const Vector& v) { return norm(v.span()); }

double frobenius_norm(const Matrix& a) { return norm(std::span<const Complex>(a.data())); }

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const Complex& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  }
  return m;
}

double max_abs_diff(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

Matrix conj_transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

Matrix index_matrix(std::size_t p, const IndexSet& s) {
  if (s.universe() != p) {
    throw ArgumentError("index_matrix: set universe " + std::to_string(s.universe()) +
                        " does not match p = " + std::to_string(p));
  }
  Matrix out(p, p);
  for (std::size_t i : s.members()) out(i, i) = 1.0;
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b, OpCounter* counter) {
  require_same_dim(a.cols(), b.rows(), "matmul");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  if (counter) counter->add_mul_adds(a.rows() * a.cols() * b.cols());
  return out;
}

Vector matvec(const Matrix& a, const Vector& x, OpCounter* counter) {
  require_same_dim(a.cols(), x.dim(), "matvec");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
    out[i] = acc;
  }
  if (counter) counter->add_mul_adds(a.rows() * a.cols());
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "operator+");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "operator-");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

Matrix operator*(Complex s, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  }
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "operator+");
  Vector out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "operator-");
  Vector out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(Complex s, const Vector& a) {
  Vector out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] *= s;
  return out;
}

void check_finite(const Matrix& a, const char* context) {
  for (const Complex& z : a.data()) {
    if (!finite(z)) throw ComputationError(std::string(context) + ": non-finite result");
  }
}

void check_finite(const Vector& v, const char* context) {
  for (const Complex& z : v.entries()) {
    if (!finite(z)) throw ComputationError(std::string(context) + ": non-finite result");
  }
}

}  // namespace insitu
