#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "insitu/op_counter.hpp"

namespace insitu {

using Complex = std::complex<double>;

/// Throws ArgumentError if either component is NaN or infinite.
void require_finite(Complex z, const char* context);

// Dense column vector over the complex field. dim >= 1.
class Vector {
 public:
  explicit Vector(std::size_t dim);
  Vector(std::initializer_list<Complex> entries);
  explicit Vector(std::vector<Complex> entries);

  std::size_t dim() const noexcept { return data_.size(); }

  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  std::span<Complex> span() noexcept { return data_; }
  std::span<const Complex> span() const noexcept { return data_; }
  const std::vector<Complex>& entries() const noexcept { return data_; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Complex> data_;
};

// Dense m-by-n complex matrix, row-major. m >= 1 and n >= 1.
// Indices are 0-based in the API; anything printed for users is 1-based.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Complex>>& rows);
  static Matrix from_columns(const std::vector<std::vector<Complex>>& cols);
  /// n-by-1 matrix holding v.
  static Matrix column(const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector col(std::size_t j) const;

  const std::vector<Complex>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

// Subset S of {0, ..., p-1}, kept sorted and duplicate-free.
// Printed 1-based, e.g. "{1,3}".
class IndexSet {
 public:
  explicit IndexSet(std::size_t universe) : universe_(universe) {}
  IndexSet(std::size_t universe, std::vector<std::size_t> members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::size_t i) const;
  const std::vector<std::size_t>& members() const noexcept { return members_; }

  /// Inserts i; a no-op if already present.
  void insert(std::size_t i);
  /// Grows the universe, keeping members. Used by streaming factorizations.
  void set_universe(std::size_t p);

  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t universe_;
  std::vector<std::size_t> members_;
};

// Inner product, conjugate-linear in the FIRST argument:
//   inner(u, v) = sum_j conj(u_j) * v_j,   so inner(v, v) = |v|^2.
// Gram-Schmidt coefficients are therefore inner(q, a).
Complex inner(std::span<const Complex> u, std::span<const Complex> v,
              OpCounter* counter = nullptr);
Complex inner(const Vector& u, const Vector& v);

double norm(std::span<const Complex> v, OpCounter* counter = nullptr);
double norm(const Vector& v);
double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const Vector& a, const Vector& b);

Matrix conj_transpose(const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix index_matrix(std::size_t p, const IndexSet& s);

/// Standard product. C(i,j) accumulates A(i,k)*B(k,j) for k = 0, 1, ... in
/// order; matvec uses the same order, so a column of matmul(A, B) is bitwise
/// equal to matvec(A, that column of B).
Matrix matmul(const Matrix& a, const Matrix& b, OpCounter* counter = nullptr);
Vector matvec(const Matrix& a, const Vector& x, OpCounter* counter = nullptr);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, const Matrix& a);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(Complex s, const Vector& a);

/// Throws ComputationError if any entry is non-finite.
void check_finite(const Matrix& a, const char* context);
void check_finite(const Vector& v, const char* context);

}  // namespace insitu
