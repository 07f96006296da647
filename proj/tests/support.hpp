#pragma once

// Test-only helpers: random system generators and an SVD oracle built on
// Eigen. Nothing here goes through the library's factorization code.

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "insitu/matrix.hpp"

namespace insitu::testing {

inline Eigen::MatrixXcd to_eigen(const Matrix& a) {
  Eigen::MatrixXcd e(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) e(i, j) = a(i, j);
  }
  return e;
}

inline Eigen::VectorXcd to_eigen(const Vector& v) {
  Eigen::VectorXcd e(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) e(i) = v[i];
  return e;
}

inline Matrix from_eigen(const Eigen::MatrixXcd& e) {
  Matrix a(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) a(i, j) = e(i, j);
  }
  return a;
}

inline Vector from_eigen_vec(const Eigen::VectorXcd& e) {
  Vector v(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) v[i] = e(i);
  return v;
}

// Singular values at or below rel_cut * sigma_max count as zero.
inline constexpr double kOracleRelCut = 1e-9;

struct SvdOracle {
  Eigen::MatrixXcd pinv;
  std::size_t rank = 0;
  Eigen::VectorXd singular_values;
};

inline SvdOracle svd_oracle(const Matrix& a, double rel_cut = kOracleRelCut) {
  const Eigen::MatrixXcd e = to_eigen(a);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cut = s.size() ? rel_cut * s(0) : 0.0;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > cut && s(k) > 0.0) {
      inv(k) = 1.0 / s(k);
      ++rank;
    }
  }
  SvdOracle out;
  out.pinv = svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
  out.rank = rank;
  out.singular_values = s;
  return out;
}

inline Matrix pinv(const Matrix& a) { return from_eigen(svd_oracle(a).pinv); }
inline std::size_t svd_rank(const Matrix& a) { return svd_oracle(a).rank; }

inline Matrix random_matrix(std::size_t rows, std::size_t cols, bool complex, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = dist(rng);
      const double im = complex ? dist(rng) : 0.0;
      a(i, j) = {re, im};
    }
  }
  return a;
}

/// rows x cols matrix of the given rank (product of Gaussian factors).
inline Matrix random_rank(std::size_t rows, std::size_t cols, std::size_t rank, bool complex,
                          std::mt19937_64& rng) {
  if (rank >= std::min(rows, cols)) return random_matrix(rows, cols, complex, rng);
  return matmul(random_matrix(rows, rank, complex, rng), random_matrix(rank, cols, complex, rng));
}

inline Vector as_column(const Matrix& a) { return a.col(0); }

inline Vector random_vector(std::size_t dim, bool complex, std::mt19937_64& rng) {
  return as_column(random_matrix(dim, 1, complex, rng));
}

enum class RankKind { Full, Half, One };

inline std::string to_string(RankKind k) {
  return k == RankKind::Full ? "full" : k == RankKind::Half ? "half" : "one";
}

struct SuiteCase {
  Matrix a;
  std::size_t rank;
  RankKind kind;
  bool complex;
  std::string label;
};

// Randomized suite: sizes up to max_rows x max_cols, ranks full/half/1, real
// and complex, cycling through the combinations.
inline std::vector<SuiteCase> make_suite(std::size_t count, std::uint64_t seed,
                                         std::size_t max_rows = 30, std::size_t max_cols = 40) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> rows_dist(1, max_rows);
  std::uniform_int_distribution<std::size_t> cols_dist(1, max_cols);
  std::vector<SuiteCase> suite;
  suite.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t m = rows_dist(rng);
    const std::size_t n = cols_dist(rng);
    const RankKind kind = static_cast<RankKind>(k % 3);
    const bool complex = (k / 3) % 2 == 1;
    const std::size_t full = std::min(m, n);
    const std::size_t r = kind == RankKind::Full ? full
                          : kind == RankKind::Half ? std::max<std::size_t>(1, full / 2)
                                                   : 1;
    std::string label = std::to_string(m) + "x" + std::to_string(n) + " rank " +
                        std::to_string(r) + (complex ? " complex" : " real");
    suite.push_back({random_rank(m, n, r, complex, rng), r, kind, complex, std::move(label)});
  }
  return suite;
}

inline double rel_diff(const Vector& got, const Vector& want) {
  return norm(got - want) / std::max(1e-300, norm(want));
}

inline double rel_diff(const Matrix& got, const Matrix& want) {
  return frobenius_norm(got - want) / std::max(1e-300, frobenius_norm(want));
}

}  // namespace insitu::testing
