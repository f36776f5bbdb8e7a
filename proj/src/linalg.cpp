#include "sitor/linalg.hpp"

namespace sitor {

Int det(const IntMat& m) {
  require_square(m);
  const Eigen::Index n = m.rows();
  IntMat w = m;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = k + 1; r < n; ++r)
        if (w(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      w.row(k).swap(w.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        // Exact by the Bareiss identity: prev divides the numerator.
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  require_nonempty(a);
  require_nonempty(b);
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  return a * b;
}

IntMat mat_pow(const IntMat& m, unsigned long j) {
  require_square(m);
  IntMat result = identity_int(m.rows());
  IntMat base = m;
  while (j > 0) {
    if (j & 1UL) result = (result * base).eval();
    j >>= 1UL;
    if (j > 0) base = (base * base).eval();
  }
  return result;
}

RatMat inverse_rational(const IntMat& m) {
  require_square(m);
  const Eigen::Index n = m.rows();
  RatMat a = to_rat(m);
  RatMat inv = RatMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) inv(i, i) = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularMatrixError("inverse_rational: matrix is singular");
    if (pivot != col) {
      a.row(col).swap(a.row(pivot));
      inv.row(col).swap(inv.row(pivot));
    }
    const Rat p = a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rat f = a(r, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

IntMat stack_rows(const std::vector<IntRowVec>& vectors) {
  if (vectors.empty()) throw DimensionError("stack_rows: no rows given");
  const Eigen::Index dim = vectors.front().cols();
  if (dim < 1) throw DimensionError("stack_rows: zero-dimensional row");
  if (static_cast<Eigen::Index>(vectors.size()) != dim)
    throw DimensionError("stack_rows: row count must equal the dimension");
  IntMat m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (vectors[static_cast<size_t>(i)].cols() != dim)
      throw DimensionError("stack_rows: rows have mixed dimensions");
    m.row(i) = vectors[static_cast<size_t>(i)];
  }
  return m;
}

Eigen::Index rank_rational(const RatMat& m) {
  require_nonempty(m);
  RatMat a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) a.row(rank).swap(a.row(pivot));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (a(r, col) == 0) continue;
      const Rat f = a(r, col) / a(rank, col);
      for (Eigen::Index j = col; j < cols; ++j) a(r, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

Eigen::Index rank_rational(const IntMat& m) { return rank_rational(to_rat(m)); }

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

IntMat identity_int(Eigen::Index n) {
  if (n < 1) throw DimensionError("identity_int: n must be >= 1");
  IntMat m = IntMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool is_identity(const IntMat& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Int(i == j ? 1 : 0)) return false;
  return true;
}

bool is_identity(const RatMat& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace sitor
