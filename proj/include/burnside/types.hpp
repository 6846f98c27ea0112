#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace Eigen {

// Exact arbitrary-precision integer scalar for dense matrices.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace burnside {

using Int = mpz_class;
using Index = Eigen::Index;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using DenseRowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using MatZ = DenseMatrix<Int>;
using VecZ = DenseVector<Int>;
using RowVecZ = DenseRowVector<Int>;

/// A sublattice-relation request whose right side is not contained in the left.
class NotSublatticeError : public std::runtime_error {
 public:
  explicit NotSublatticeError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural self-check failed; indicates a bug, not bad input.
class InternalInconsistencyError : public std::logic_error {
 public:
  explicit InternalInconsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Closed-form labels could not be matched bijectively onto conjugacy classes.
class AlignmentError : public std::runtime_error {
 public:
  explicit AlignmentError(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters outside the range covered by the closed-form results (m < 3).
class UnsupportedParamsError : public std::invalid_argument {
 public:
  explicit UnsupportedParamsError(const std::string& what) : std::invalid_argument(what) {}
};

template <typename Scalar>
bool matrix_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Scalar>
bool vector_equal(const DenseVector<Scalar>& a, const DenseVector<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

/// Floor division, b > 0. Plain '/' truncates toward zero, which breaks
/// reduction of negative entries above HNF pivots.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) q -= 1;
  return q;
}

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace burnside
