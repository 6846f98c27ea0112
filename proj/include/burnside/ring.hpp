#pragma once

#include <cstdint>
#include <vector>

#include "burnside/lattice.hpp"
#include "burnside/marks.hpp"
#include "burnside/types.hpp"

namespace burnside {

/// Element of the Burnside ring as an integer coefficient vector over the
/// conjugacy-class basis [G/K], classes in canonical order.
struct BurnsideElement {
  VecZ coeffs;

  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return vector_equal(a.coeffs, b.coeffs);
  }
};

/// The transitive basis element [G/K] for class index cls.
BurnsideElement basis_element(const MarksTable& table, Index cls);

/// The ring identity [G/G].
BurnsideElement ring_identity(const MarksTable& table);

/// Vector of marks of x, indexed by classes: the fixed-point counts that
/// embed the ring into Z^s.
VecZ marks_of(const MarksTable& table, const BurnsideElement& x);

/// Ring product via the injective mark homomorphism: componentwise product
/// of mark vectors followed by exact triangular back-substitution.
BurnsideElement multiply(const MarksTable& table, const BurnsideElement& x,
                         const BurnsideElement& y);

/// Fixed points under the full group: the mark at the top class. Ring
/// homomorphism onto Z whose kernel is the augmentation ideal.
Int augmentation(const MarksTable& table, const BurnsideElement& x);

/// Basis of the augmentation ideal: the proper-class unit vectors, in
/// canonical class order.
std::vector<BurnsideElement> delta_basis(const MarksTable& table);

/// Basis of the n-th power of the augmentation ideal, rows in HNF, expressed
/// in the coordinates of delta_basis.
struct IdealLatticeBasis {
  std::int64_t n{};
  MatZ basis;
};

/// HNF bases of delta^1 .. delta^max_n, computed incrementally.
std::vector<MatZ> delta_power_chain(const MarksTable& table, std::int64_t max_n);

IdealLatticeBasis ideal_power(const MarksTable& table, std::int64_t n);

/// Invariants of delta^n / delta^(n+1); always a finite group.
AbelianInvariants quotient_qn(const MarksTable& table, std::int64_t n);

}  // namespace burnside
