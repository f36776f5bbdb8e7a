#include <doctest.h>

#include <random>

#include "sitor/linalg.hpp"

using namespace sitor;

namespace {

IntMat from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMat m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.front().size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

// Independent oracle: recursive cofactor expansion along the first row.
Int det_cofactor(const IntMat& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  Int acc = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMat minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index col = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, col++) = m(i, j);
      }
    }
    const Int term = m(0, c) * det_cofactor(minor);
    acc += (c % 2 == 0) ? term : Int(-term);
  }
  return acc;
}

IntMat random_matrix(std::mt19937& rng, Eigen::Index n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("determinant matches hand examples") {
  CHECK(det(from_rows({{1}})) == 1);
  CHECK(det(from_rows({{2, 1}, {1, 1}})) == 1);
  CHECK(det(from_rows({{-2, 1}, {1, -3}})) == 5);
  CHECK_THROWS_AS(det(IntMat(2, 3)), DimensionError);
}

TEST_CASE("determinant agrees with the cofactor oracle") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> size_dist(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntMat m = random_matrix(rng, size_dist(rng), -3, 3);
    CHECK(det(m) == det_cofactor(m));
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMat a = random_matrix(rng, 3, -4, 4);
    const IntMat b = random_matrix(rng, 3, -4, 4);
    CHECK(det(mat_mul(a, b)) == det(a) * det(b));
  }
}

TEST_CASE("matrix product examples") {
  const IntMat x = from_rows({{2, 1}, {1, 1}});
  CHECK(same_entries(mat_mul(identity_int(2), x), x));
  CHECK(same_entries(mat_mul(x, x), from_rows({{5, 3}, {3, 2}})));
  const IntMat swap = from_rows({{0, 1}, {1, 0}});
  CHECK(is_identity(mat_mul(swap, swap)));
  CHECK_THROWS_AS(mat_mul(x, IntMat(3, 2)), DimensionError);
}

TEST_CASE("matrix powers") {
  const IntMat x = from_rows({{2, 1}, {1, 1}});
  CHECK(is_identity(mat_pow(x, 0)));
  CHECK(same_entries(mat_pow(x, 2), from_rows({{5, 3}, {3, 2}})));
  CHECK(same_entries(mat_pow(x, 3), from_rows({{13, 8}, {8, 5}})));

  std::mt19937 rng(99);
  std::uniform_int_distribution<unsigned long> e(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMat m = random_matrix(rng, 2, -2, 2);
    const unsigned long i = e(rng), j = e(rng);
    CHECK(same_entries(mat_pow(m, i + j), mat_mul(mat_pow(m, i), mat_pow(m, j))));
  }
}

TEST_CASE("rational inverse") {
  CHECK(is_identity(inverse_rational(identity_int(2))));
  const RatMat inv = inverse_rational(from_rows({{2, 1}, {5, 3}}));
  CHECK(inv(0, 0) == 3);
  CHECK(inv(0, 1) == -1);
  CHECK(inv(1, 0) == -5);
  CHECK(inv(1, 1) == 2);
  const RatMat half = inverse_rational(from_rows({{2, 0}, {0, 2}}));
  CHECK(half(0, 0) == Rat(1, 2));
  CHECK(half(1, 1) == Rat(1, 2));
  CHECK(half(0, 1) == 0);
  CHECK_THROWS_AS(inverse_rational(from_rows({{1, 1}, {1, 1}})), SingularMatrixError);

  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 100) {
    const IntMat m = random_matrix(rng, 3, -5, 5);
    if (det(m) == 0) continue;
    ++checked;
    CHECK(is_identity(RatMat(to_rat(m) * inverse_rational(m))));
  }
}

TEST_CASE("stack_rows") {
  IntRowVec a(2), b(2);
  a << 1, 0;
  b << 0, 1;
  CHECK(is_identity(stack_rows({a, b})));
  a << 2, 1;
  b << 5, 3;
  CHECK(same_entries(stack_rows({a, b}), from_rows({{2, 1}, {5, 3}})));
  IntRowVec c(3);
  c << 1, 2, 3;
  CHECK_THROWS_AS(stack_rows({c, c}), DimensionError);     // 2 rows of dim 3
  CHECK_THROWS_AS(stack_rows({a, b, a}), DimensionError);  // 3 rows of dim 2
  CHECK_THROWS_AS(stack_rows(std::vector<IntRowVec>{}), DimensionError);
}

TEST_CASE("rank over the rationals") {
  CHECK(rank_rational(identity_int(3)) == 3);
  CHECK(rank_rational(from_rows({{1, 0}, {2, 0}})) == 1);
  CHECK(rank_rational(from_rows({{2, 1}, {5, 3}})) == 2);

  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMat m = random_matrix(rng, 3, -3, 3);
    CHECK((rank_rational(m) == m.rows()) == (det(m) != 0));
  }
}
