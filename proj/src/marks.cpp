#include "burnside/marks.hpp"

#include <vector>

namespace burnside {

Int mark(const FiniteGroup& group, const Subgroup& k, const Subgroup& l) {
  if (k.order() > l.order()) return 0;
  std::vector<char> covered(static_cast<std::size_t>(group.order()), 0);
  long fixed = 0;
  for (const Element g : group.elements()) {
    if (covered[static_cast<std::size_t>(group.element_index(g))]) continue;
    for (const Element x : l.elements)
      covered[static_cast<std::size_t>(group.element_index(group.mul(g, x)))] = 1;
    const Element gi = group.inverse(g);
    bool fixes = true;
    for (const Element x : k.elements) {
      if (!l.contains(group.mul(group.mul(gi, x), g))) {
        fixes = false;
        break;
      }
    }
    if (fixes) ++fixed;
  }
  return Int(fixed);
}

MarksTable table_of_marks(const FiniteGroup& group) {
  const auto subgroups = enumerate_subgroups(group);
  auto classes = conjugacy_classes_of_subgroups(group, subgroups);
  const Index s = classes.size();
  MatZ marks(s, s);
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j)
      marks(i, j) = mark(group, classes.representatives[static_cast<std::size_t>(i)],
                         classes.representatives[static_cast<std::size_t>(j)]);
  return MarksTable{std::move(classes), std::move(marks)};
}

}  // namespace burnside
