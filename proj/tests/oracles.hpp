// Test-only oracles, independent of the library code paths they check.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/subgroups.hpp"
#include "burnside/types.hpp"

namespace burnside::testing {

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int bareiss_det(MatZ m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        if (t % prev != 0) throw std::logic_error("bareiss: inexact division");
        m(i, j) = t / prev;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Fixed-point count of K acting on the cosets G/L, computed by materializing
/// every coset as an element set and checking k-translates literally. Slower
/// than the library's conjugacy test but shares none of its code.
inline long naive_mark(const FiniteGroup& g, const Subgroup& k, const Subgroup& l) {
  std::set<std::vector<Element>> cosets;
  for (const Element x : g.elements()) {
    std::set<Element> coset;
    for (const Element y : l.elements) coset.insert(g.mul(x, y));
    cosets.insert(std::vector<Element>(coset.begin(), coset.end()));
  }
  long fixed = 0;
  for (const auto& coset : cosets) {
    bool all_fixed = true;
    for (const Element kk : k.elements) {
      std::set<Element> image;
      for (const Element x : coset) image.insert(g.mul(kk, x));
      if (std::vector<Element>(image.begin(), image.end()) != coset) {
        all_fixed = false;
        break;
      }
    }
    if (all_fixed) ++fixed;
  }
  return fixed;
}

inline std::int64_t order_of(const FiniteGroup& g, Element x) {
  Element acc = x;
  std::int64_t n = 1;
  while (acc != g.identity()) {
    acc = g.mul(acc, x);
    ++n;
  }
  return n;
}

inline MatZ random_matrix(std::mt19937_64& rng, Index rows, Index cols, int span = 9) {
  std::uniform_int_distribution<int> dist(-span, span);
  MatZ m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

/// One random elementary row operation: swap, negate, or add a small
/// multiple of another row. All are unimodular.
inline void random_row_op(std::mt19937_64& rng, MatZ& m) {
  std::uniform_int_distribution<int> which(0, 2);
  std::uniform_int_distribution<Index> row(0, m.rows() - 1);
  const Index i = row(rng);
  Index j = row(rng);
  switch (which(rng)) {
    case 0:
      m.row(i).swap(m.row(j));
      break;
    case 1:
      m.row(i) = -m.row(i);
      break;
    default: {
      if (i == j) j = (j + 1) % m.rows();
      std::uniform_int_distribution<int> coeff(-3, 3);
      m.row(i) += Int(coeff(rng)) * m.row(j);
      break;
    }
  }
}

inline void random_col_op(std::mt19937_64& rng, MatZ& m) {
  std::uniform_int_distribution<int> which(0, 2);
  std::uniform_int_distribution<Index> col(0, m.cols() - 1);
  const Index i = col(rng);
  Index j = col(rng);
  switch (which(rng)) {
    case 0:
      m.col(i).swap(m.col(j));
      break;
    case 1:
      m.col(i) = -m.col(i);
      break;
    default: {
      if (i == j) j = (j + 1) % m.cols();
      std::uniform_int_distribution<int> coeff(-3, 3);
      m.col(i) += Int(coeff(rng)) * m.col(j);
      break;
    }
  }
}

}  // namespace burnside::testing
