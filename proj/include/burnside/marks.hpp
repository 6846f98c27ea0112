#pragma once

#include "burnside/group.hpp"
#include "burnside/subgroups.hpp"
#include "burnside/types.hpp"

namespace burnside {

/// Number of cosets in G/L fixed pointwise by K, i.e. cosets gL with
/// g^-1 K g contained in L. Invariant under conjugation of either argument.
Int mark(const FiniteGroup& group, const Subgroup& k, const Subgroup& l);

/// Square matrix of marks over canonical class representatives: entry
/// (K-row, L-col) = mark(K, L). With classes sorted by ascending subgroup
/// order this is upper triangular with strictly positive diagonal.
struct MarksTable {
  ConjugacyClassTable classes;
  MatZ marks;

  Index size() const { return marks.rows(); }
};

MarksTable table_of_marks(const FiniteGroup& group);

}  // namespace burnside
