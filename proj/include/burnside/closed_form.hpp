#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/lattice.hpp"
#include "burnside/subgroups.hpp"
#include "burnside/types.hpp"

namespace burnside {

/// Symbolic name of a transitive basis class of the modular group:
/// alpha_i = [H/N_i], beta_{k,l} = [H/M_{k,l}], epsilon = [H/H].
/// beta normalizes l mod p on construction and forces l = 0 when k = m,
/// where the M_{m,l} collapse into a single conjugacy class.
struct BasisLabel {
  enum class Kind { alpha, beta, epsilon };

  Kind kind{Kind::epsilon};
  std::int64_t i{};  // alpha subscript, 0..m
  std::int64_t k{};  // beta subscripts
  std::int64_t l{};

  static BasisLabel alpha(const GroupParams& params, std::int64_t i);
  static BasisLabel beta(const GroupParams& params, std::int64_t k, std::int64_t l);
  static BasisLabel epsilon();

  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
  std::string str() const;
};

/// Integer combination of distinct basis labels, kept sorted.
struct LabelCombination {
  std::vector<std::pair<Int, BasisLabel>> terms;

  static LabelCombination of(std::vector<std::pair<Int, BasisLabel>> raw);
  friend bool operator==(const LabelCombination&, const LabelCombination&) = default;
  std::string str() const;
};

/// The cyclic subgroup N_i = <a^(p^i)> of order p^(m-i).
Subgroup subgroup_N(const GroupParams& params, std::int64_t i);

/// M_{k,l}: union over j of (b a^(l p^(k-1)))^j N_k, order p^(m-k+1).
/// Depends only on l mod p.
Subgroup subgroup_M(const GroupParams& params, std::int64_t k, std::int64_t l);

/// All basis labels in listing order: alpha_0..alpha_m, beta_{1,0..p-1}, ...,
/// beta_{m-1,0..p-1}, beta_{m,0}, epsilon.
std::vector<BasisLabel> basis_labels(const GroupParams& params);

/// Product of two basis classes from the closed multiplication table,
/// implemented independently of the marks pipeline.
LabelCombination closed_mul(const GroupParams& params, const BasisLabel& x, const BasisLabel& y);

/// Closed-form basis of the n-th power of the augmentation ideal. Requires
/// m >= 3.
std::vector<LabelCombination> closed_delta_power_basis(const GroupParams& params, std::int64_t n);

/// Closed-form quotient: (C_p)^((m-1)p+2) for n = 1, (C_p)^((m-1)p+m+2) for
/// n >= 2. Requires m >= 3.
AbelianInvariants closed_qn(const GroupParams& params, std::int64_t n);

/// Bijection between basis labels and enumerated conjugacy classes.
class LabelAlignment {
 public:
  Index class_of(const BasisLabel& label) const;
  const BasisLabel& label_of(Index cls) const;
  Index size() const { return static_cast<Index>(label_by_class_.size()); }

  /// Coefficient vector over all classes.
  VecZ vector_of(const LabelCombination& c) const;
  /// Coefficient vector over proper classes only; the combination must not
  /// touch the full-group class.
  RowVecZ ideal_vector_of(const LabelCombination& c) const;

 private:
  friend LabelAlignment label_alignment(const GroupParams&, const ConjugacyClassTable&);
  std::map<BasisLabel, Index> class_by_label_;
  std::vector<BasisLabel> label_by_class_;
};

LabelAlignment label_alignment(const GroupParams& params, const ConjugacyClassTable& classes);

}  // namespace burnside
