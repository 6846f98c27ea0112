#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "burnside/types.hpp"

namespace burnside {

/// Elementary-divisor description of a finitely generated abelian group:
/// direct sum of Z/d_i (d_1 | d_2 | ..., each d_i > 1) and Z^free_rank.
struct AbelianInvariants {
  std::vector<Int> divisors;
  std::int64_t free_rank{0};

  bool trivial() const { return divisors.empty() && free_rank == 0; }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// "C_3^8", "C_2 x C_6", "C_4 x Z^2", or "1" for the trivial group.
inline std::string format_abelian(const AbelianInvariants& inv) {
  if (inv.trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < inv.divisors.size();) {
    std::size_t j = i;
    while (j < inv.divisors.size() && inv.divisors[j] == inv.divisors[i]) ++j;
    if (!first) os << " x ";
    os << "C_" << inv.divisors[i];
    if (j - i > 1) os << "^" << (j - i);
    first = false;
    i = j;
  }
  if (inv.free_rank > 0) {
    if (!first) os << " x ";
    os << "Z";
    if (inv.free_rank > 1) os << "^" << inv.free_rank;
  }
  return os.str();
}

template <typename Scalar>
struct HermiteForm {
  DenseMatrix<Scalar> h;  // row-style HNF of the input, zero rows last
  DenseMatrix<Scalar> u;  // unimodular, u * input = h
  Index rank{0};
};

namespace detail {

template <typename Scalar>
Scalar abs_val(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar>
struct ExtendedGcd {
  Scalar g, x, y;  // g = gcd >= 0, x*a + y*b = g
};

template <typename Scalar>
ExtendedGcd<Scalar> extended_gcd(Scalar a, Scalar b) {
  Scalar x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const Scalar q = a / b;
    Scalar t = a - q * b;
    a = std::move(b);
    b = std::move(t);
    t = x0 - q * x1;
    x0 = std::move(x1);
    x1 = std::move(t);
    t = y0 - q * y1;
    y0 = std::move(y1);
    y1 = std::move(t);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

// Replace rows r1, r2 of m by (c11 r1 + c12 r2, c21 r1 + c22 r2).
template <typename Scalar>
void combine_rows(DenseMatrix<Scalar>& m, Index r1, Index r2, const Scalar& c11,
                  const Scalar& c12, const Scalar& c21, const Scalar& c22) {
  const DenseRowVector<Scalar> a = m.row(r1);
  const DenseRowVector<Scalar> b = m.row(r2);
  m.row(r1) = c11 * a + c12 * b;
  m.row(r2) = c21 * a + c22 * b;
}

}  // namespace detail

/// Row-style Hermite normal form via integer Gaussian elimination with
/// extended-gcd row operations: pivots positive and strictly right-descending,
/// entries above each pivot reduced into [0, pivot), zero rows last.
template <typename Scalar>
HermiteForm<Scalar> hnf(const DenseMatrix<Scalar>& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  HermiteForm<Scalar> res;
  res.h = m;
  res.u = DenseMatrix<Scalar>::Identity(rows, rows);
  auto& h = res.h;
  auto& u = res.u;

  Index pivot_row = 0;
  for (Index col = 0; col < cols && pivot_row < rows; ++col) {
    Index first = -1;
    for (Index i = pivot_row; i < rows; ++i) {
      if (h(i, col) != 0) {
        first = i;
        break;
      }
    }
    if (first < 0) continue;
    if (first != pivot_row) {
      h.row(first).swap(h.row(pivot_row));
      u.row(first).swap(u.row(pivot_row));
    }
    for (Index i = pivot_row + 1; i < rows; ++i) {
      if (h(i, col) == 0) continue;
      const Scalar a = h(pivot_row, col);
      const Scalar b = h(i, col);
      const auto [g, x, y] = detail::extended_gcd<Scalar>(a, b);
      detail::combine_rows(h, pivot_row, i, x, y, Scalar(-(b / g)), Scalar(a / g));
      detail::combine_rows(u, pivot_row, i, x, y, Scalar(-(b / g)), Scalar(a / g));
    }
    if (h(pivot_row, col) < 0) {
      h.row(pivot_row) = -h.row(pivot_row);
      u.row(pivot_row) = -u.row(pivot_row);
    }
    for (Index i = 0; i < pivot_row; ++i) {
      const Scalar q = floor_div<Scalar>(h(i, col), h(pivot_row, col));
      if (q != 0) {
        h.row(i) -= q * h.row(pivot_row);
        u.row(i) -= q * u.row(pivot_row);
      }
    }
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

/// The nonzero rows of hnf(m).h: a canonical basis of the row lattice.
template <typename Scalar>
DenseMatrix<Scalar> hnf_basis(const DenseMatrix<Scalar>& m) {
  auto form = hnf(m);
  return form.h.topRows(form.rank);
}

template <typename Scalar>
struct SmithForm {
  DenseMatrix<Scalar> d;  // diagonal, d_1 | d_2 | ...
  AbelianInvariants invariants;
};

/// Smith normal form via alternating row/column gcd elimination. The
/// invariants read the input as a relation matrix on Z^cols: divisors are the
/// diagonal entries > 1 and free_rank = cols - rank.
template <typename Scalar>
SmithForm<Scalar> snf(const DenseMatrix<Scalar>& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  const Index nmin = std::min(rows, cols);
  SmithForm<Scalar> res;
  res.d = m;
  auto& d = res.d;

  for (Index s = 0; s < nmin; ++s) {
    for (;;) {
      // Smallest nonzero absolute value in the trailing submatrix, ties by
      // lowest (row, col).
      Index pr = -1, pc = -1;
      for (Index i = s; i < rows; ++i) {
        for (Index j = s; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          if (pr < 0 || detail::abs_val<Scalar>(d(i, j)) < detail::abs_val<Scalar>(d(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) break;  // trailing submatrix is zero
      if (pr != s) d.row(pr).swap(d.row(s));
      if (pc != s) d.col(pc).swap(d.col(s));
      if (d(s, s) < 0) d.row(s) = -d.row(s);

      bool reduced = true;
      for (Index i = s + 1; i < rows; ++i) {
        if (d(i, s) == 0) continue;
        const Scalar q = d(i, s) / d(s, s);
        if (q != 0) d.row(i) -= q * d.row(s);
        if (d(i, s) != 0) reduced = false;
      }
      for (Index j = s + 1; j < cols; ++j) {
        if (d(s, j) == 0) continue;
        const Scalar q = d(s, j) / d(s, s);
        if (q != 0) d.col(j) -= q * d.col(s);
        if (d(s, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // Divisibility fix-up: pull in a row holding an entry the pivot does
      // not divide, then keep eliminating.
      bool divides_all = true;
      for (Index i = s + 1; i < rows && divides_all; ++i)
        for (Index j = s + 1; j < cols && divides_all; ++j)
          if (d(i, j) % d(s, s) != 0) {
            d.row(s) += d.row(i);
            divides_all = false;
          }
      if (divides_all) break;
    }
  }

  Index rank = 0;
  for (Index s = 0; s < nmin; ++s) {
    if (d(s, s) != 0) {
      ++rank;
      if (d(s, s) > 1) res.invariants.divisors.push_back(Int(d(s, s)));
    }
  }
  res.invariants.free_rank = cols - rank;
  return res;
}

/// Coordinates c with c * basis = v, where basis is a full-row-rank HNF
/// matrix; nullopt when v is outside the row lattice.
template <typename Scalar>
std::optional<DenseRowVector<Scalar>> express_in_basis(const DenseMatrix<Scalar>& basis,
                                                       const DenseRowVector<Scalar>& v) {
  const Index rows = basis.rows();
  const Index cols = basis.cols();
  DenseRowVector<Scalar> w = v;
  DenseRowVector<Scalar> c = DenseRowVector<Scalar>::Zero(rows);
  for (Index i = 0; i < rows; ++i) {
    Index pivot = -1;
    for (Index j = 0; j < cols; ++j) {
      if (basis(i, j) != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("basis has a zero row");
    if (w(pivot) % basis(i, pivot) != 0) return std::nullopt;
    c(i) = w(pivot) / basis(i, pivot);
    if (c(i) != 0) w -= c(i) * basis.row(i);
  }
  for (Index j = 0; j < cols; ++j)
    if (w(j) != 0) return std::nullopt;
  return c;
}

/// Invariants of lattice(a) / lattice(b) for lattice(b) a finite-index
/// sublattice of lattice(a); rows of both are bases of equal rank.
template <typename Scalar>
AbelianInvariants quotient_invariants(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("quotient_invariants: ambient ranks differ");
  const auto form = hnf(a);
  if (form.rank != a.rows()) throw std::invalid_argument("quotient_invariants: rows of A are not a basis");
  if (b.rows() != a.rows()) throw std::invalid_argument("quotient_invariants: lattice ranks differ");
  const DenseMatrix<Scalar> ha = form.h.topRows(form.rank);

  DenseMatrix<Scalar> rel(b.rows(), a.rows());
  for (Index i = 0; i < b.rows(); ++i) {
    const DenseRowVector<Scalar> row = b.row(i);
    const auto coords = express_in_basis(ha, row);
    if (!coords) {
      std::ostringstream os;
      os << "row " << i << " of B is not in the lattice of A";
      throw NotSublatticeError(os.str());
    }
    rel.row(i) = *coords;
  }
  return snf(rel).invariants;
}

}  // namespace burnside
