#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "insitu/errors.hpp"
#include "insitu/matrix.hpp"
#include "support.hpp"

using namespace insitu;
using insitu::testing::random_matrix;

TEST_CASE("conj_transpose") {
  CHECK(conj_transpose(Matrix{{{2, 3}}}) == Matrix{{{2, -3}}});
  CHECK(conj_transpose(Matrix::identity(3)) == Matrix::identity(3));

  const Matrix a{{1, 2, 3}, {4, 5, 6}};
  const Matrix at = conj_transpose(a);
  REQUIRE(at.rows() == 3);
  REQUIRE(at.cols() == 2);
  CHECK(at == Matrix{{1, 4}, {2, 5}, {3, 6}});
}

TEST_CASE("conj_transpose is an exact involution") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = random_matrix(1 + t, 9 - t % 5, true, rng);
    CHECK(conj_transpose(conj_transpose(a)) == a);
  }
}

TEST_CASE("index_matrix") {
  CHECK(index_matrix(3, IndexSet(3, {0, 1, 2})) == Matrix::identity(3));
  CHECK(index_matrix(3, IndexSet(3)) == Matrix(3, 3));
  CHECK(index_matrix(3, IndexSet(3, {1})) == Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  CHECK_THROWS_AS(index_matrix(4, IndexSet(3, {1})), ArgumentError);

  const Matrix i = index_matrix(5, IndexSet(5, {0, 3, 4}));
  CHECK(matmul(i, i) == i);
}

TEST_CASE("IndexSet keeps sorted unique members") {
  IndexSet s(5, {3, 1, 3, 0});
  CHECK(s.members() == std::vector<std::size_t>{0, 1, 3});
  CHECK(s.to_string() == "{1,2,4}");
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK_THROWS_AS(s.insert(5), ArgumentError);
}

TEST_CASE("matmul") {
  std::mt19937_64 rng(11);
  const Matrix a = random_matrix(4, 3, true, rng);
  CHECK(matmul(Matrix::identity(4), a) == a);
  CHECK(matmul(a, Matrix(3, 2)) == Matrix(4, 2));
  CHECK(matmul(Matrix{{1, 2}, {3, 4}}, Matrix{{1}, {1}}) == Matrix{{3}, {7}});
  CHECK_THROWS_AS(matmul(a, a), ArgumentError);

  OpCounter counter;
  matmul(a, Matrix(3, 2), &counter);
  CHECK(counter.mul_adds() == 4 * 3 * 2);
}

TEST_CASE("matmul columns match matvec bitwise") {
  std::mt19937_64 rng(12);
  const Matrix a = random_matrix(6, 5, true, rng);
  const Matrix b = random_matrix(5, 3, true, rng);
  const Matrix c = matmul(a, b);
  for (std::size_t j = 0; j < 3; ++j) CHECK(c.col(j) == matvec(a, b.col(j)));
}

TEST_CASE("matmul is associative to rounding") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = random_matrix(8, 8, true, rng);
    const Matrix b = random_matrix(8, 8, true, rng);
    const Matrix c = random_matrix(8, 8, true, rng);
    const Matrix left = matmul(matmul(a, b), c);
    const Matrix right = matmul(a, matmul(b, c));
    const double scale = max_abs(a) * max_abs(b) * max_abs(c) * 64.0;
    CHECK(max_abs_diff(left, right) <= 1e-12 * scale);
  }
}

TEST_CASE("inner product is conjugate-linear in the first argument") {
  CHECK(inner(Vector{1, 0}, Vector{0, 1}) == Complex{0});
  CHECK(inner(Vector{3, 4}, Vector{3, 4}) == Complex{25});
  CHECK(inner(Vector{Complex{0, 1}, 0}, Vector{Complex{0, 1}, 0}) == Complex{1});
  CHECK(inner(Vector{Complex{0, 1}}, Vector{1}) == Complex{0, -1});
  CHECK_THROWS_AS(inner(Vector{1, 2}, Vector{1}), ArgumentError);

  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const Vector u = random_matrix(7, 1, true, rng).col(0);
    const Vector v = random_matrix(7, 1, true, rng).col(0);
    CHECK(std::abs(inner(u, v) - std::conj(inner(v, u))) <= 1e-14 * norm(u) * norm(v));
  }
}

TEST_CASE("constructors reject non-finite and empty input") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Vector({1.0, nan}), ArgumentError);
  CHECK_THROWS_AS(Matrix({{1.0, Complex{0, inf}}}), ArgumentError);
  CHECK_THROWS_AS(Matrix(0, 3), ArgumentError);
  CHECK_THROWS_AS(Vector(std::size_t{0}), ArgumentError);
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), ArgumentError);
}
