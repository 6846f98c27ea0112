#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/types.hpp"

namespace burnside {

/// A subgroup in canonical form: element list sorted by (u, v).
struct Subgroup {
  std::vector<Element> elements;

  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
  bool contains(Element g) const;

  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// Subgroup generated by the given elements (orbit closure over products).
Subgroup generated_subgroup(const FiniteGroup& group, const std::vector<Element>& generators);

/// g K g^-1 in canonical form.
Subgroup conjugate_subgroup(const FiniteGroup& group, const Subgroup& k, Element g);

bool is_subgroup(const FiniteGroup& group, const Subgroup& k);

/// Every subgroup exactly once, canonically sorted. Cyclic subgroups first,
/// then pairwise joins until a fixed point; independent of any structure
/// theory for the group at hand, so it can act as an oracle for one.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& group);

bool is_normal(const FiniteGroup& group, const Subgroup& k);

/// Conjugacy classes of subgroups. Classes are sorted by (subgroup order
/// ascending, canonical representative lexicographic); the representative is
/// the lexicographically least member; members are ordered the same way.
struct ConjugacyClassTable {
  std::vector<std::vector<Subgroup>> classes;
  std::vector<Subgroup> representatives;

  Index size() const { return static_cast<Index>(classes.size()); }
  /// Class index of a subgroup, or -1 when it is not a member of any class.
  Index class_of(const Subgroup& k) const;

 private:
  friend ConjugacyClassTable conjugacy_classes_of_subgroups(const FiniteGroup&,
                                                            const std::vector<Subgroup>&);
  std::map<Subgroup, Index> member_index_;
};

ConjugacyClassTable conjugacy_classes_of_subgroups(const FiniteGroup& group,
                                                   const std::vector<Subgroup>& subgroups);

}  // namespace burnside
