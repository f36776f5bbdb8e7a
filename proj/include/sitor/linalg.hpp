#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <vector>

#include "sitor/exact.hpp"

namespace sitor {

// Dense exact-arithmetic types. All library operations treat these as
// immutable values; functions below return fresh matrices.
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntRowVec = Eigen::Matrix<Int, 1, Eigen::Dynamic>;
using IntColVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatColVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

template <typename Derived>
void require_nonempty(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() < 1 || m.cols() < 1)
    throw DimensionError("zero-dimensional matrices are not modelled");
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m) {
  require_nonempty(m);
  if (m.rows() != m.cols()) throw DimensionError("operation requires a square matrix");
}

template <typename Derived>
bool same_entries(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// Exact determinant by fraction-free (Bareiss) elimination: every
// intermediate value is an integer and every division is exact.
Int det(const IntMat& m);

IntMat mat_mul(const IntMat& a, const IntMat& b);

// Exponentiation by repeated squaring; j = 0 gives the identity.
IntMat mat_pow(const IntMat& m, unsigned long j);

// Exact rational inverse; throws SingularMatrixError when det = 0.
RatMat inverse_rational(const IntMat& m);

// Square matrix whose i-th row is vectors[i]; count must equal dim.
IntMat stack_rows(const std::vector<IntRowVec>& vectors);

// Exact rank over the rationals.
Eigen::Index rank_rational(const RatMat& m);
Eigen::Index rank_rational(const IntMat& m);

RatMat to_rat(const IntMat& m);
IntMat identity_int(Eigen::Index n);
bool is_identity(const IntMat& m);
bool is_identity(const RatMat& m);

}  // namespace sitor
