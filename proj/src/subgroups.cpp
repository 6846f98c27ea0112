#include "burnside/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace burnside {

namespace {

std::vector<Element> closure_elements(const FiniteGroup& group,
                                      const std::vector<Element>& generators) {
  // In a finite group the positive words in a generating set already form a
  // subgroup, so a breadth-first sweep by right multiplication suffices.
  std::set<Element> seen{group.identity()};
  std::deque<Element> frontier{group.identity()};
  while (!frontier.empty()) {
    const Element x = frontier.front();
    frontier.pop_front();
    for (const Element g : generators) {
      const Element y = group.mul(x, g);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

bool Subgroup::contains(Element g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup generated_subgroup(const FiniteGroup& group, const std::vector<Element>& generators) {
  return Subgroup{closure_elements(group, generators)};
}

Subgroup conjugate_subgroup(const FiniteGroup& group, const Subgroup& k, Element g) {
  const Element gi = group.inverse(g);
  std::vector<Element> conj;
  conj.reserve(k.elements.size());
  for (const Element x : k.elements) conj.push_back(group.mul(group.mul(g, x), gi));
  std::sort(conj.begin(), conj.end());
  return Subgroup{std::move(conj)};
}

bool is_subgroup(const FiniteGroup& group, const Subgroup& k) {
  if (!std::is_sorted(k.elements.begin(), k.elements.end())) return false;
  if (!k.contains(group.identity())) return false;
  for (const Element x : k.elements) {
    if (!k.contains(group.inverse(x))) return false;
    for (const Element y : k.elements)
      if (!k.contains(group.mul(x, y))) return false;
  }
  return true;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& group) {
  // Subgroups found so far, each carrying a small generating set so joins
  // stay cheap.
  std::map<Subgroup, std::vector<Element>> found;
  for (const Element g : group.elements()) {
    Subgroup cyc = generated_subgroup(group, {g});
    found.emplace(std::move(cyc), std::vector<Element>{g});
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::pair<Subgroup, std::vector<Element>>> snapshot(found.begin(),
                                                                          found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<Element> gens = snapshot[i].second;
        gens.insert(gens.end(), snapshot[j].second.begin(), snapshot[j].second.end());
        Subgroup join = generated_subgroup(group, gens);
        if (found.emplace(std::move(join), std::move(gens)).second) grew = true;
      }
    }
  }
  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (const auto& [sub, gens] : found) result.push_back(sub);
  return result;
}

bool is_normal(const FiniteGroup& group, const Subgroup& k) {
  for (const Element g : group.generators())
    if (conjugate_subgroup(group, k, g) != k) return false;
  return true;
}

Index ConjugacyClassTable::class_of(const Subgroup& k) const {
  const auto it = member_index_.find(k);
  return it == member_index_.end() ? Index{-1} : it->second;
}

ConjugacyClassTable conjugacy_classes_of_subgroups(const FiniteGroup& group,
                                                   const std::vector<Subgroup>& subgroups) {
  std::set<Subgroup> remaining(subgroups.begin(), subgroups.end());
  std::vector<std::vector<Subgroup>> classes;
  while (!remaining.empty()) {
    // Orbit of the least remaining subgroup under conjugation.
    std::set<Subgroup> orbit{*remaining.begin()};
    std::deque<Subgroup> frontier{*remaining.begin()};
    while (!frontier.empty()) {
      const Subgroup k = std::move(frontier.front());
      frontier.pop_front();
      for (const Element g : group.generators()) {
        Subgroup conj = conjugate_subgroup(group, k, g);
        if (orbit.insert(conj).second) frontier.push_back(std::move(conj));
      }
    }
    for (const Subgroup& k : orbit) remaining.erase(k);
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.front().order() != b.front().order()) return a.front().order() < b.front().order();
    return a.front() < b.front();
  });

  ConjugacyClassTable table;
  for (const auto& cls : classes) {
    table.representatives.push_back(cls.front());
    for (const Subgroup& k : cls)
      table.member_index_.emplace(k, static_cast<Index>(table.classes.size()));
    table.classes.push_back(cls);
  }
  return table;
}

}  // namespace burnside
