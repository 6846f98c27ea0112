#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace burnside {

/// Parameters of the modular group of order p^(m+1):
///   < a, b | a^(p^m) = b^p = 1, b^-1 a b = a^(p^(m-1)+1) >
/// p an odd prime, m >= 2. The closed-form results additionally need m >= 3.
struct GroupParams {
  std::int64_t p{};
  std::int64_t m{};

  GroupParams(std::int64_t p_, std::int64_t m_);

  std::int64_t a_order() const;  // p^m
  std::int64_t order() const;    // p^(m+1)
  std::int64_t twist() const;    // p^(m-1) + 1, the conjugation exponent
};

bool is_odd_prime(std::int64_t p);

/// Group element in canonical form b^u a^v, 0 <= u < p, 0 <= v < p^m.
/// The cyclic fixture reuses the representation with u = 0, v a residue mod n.
struct Element {
  std::int64_t u{};
  std::int64_t v{};

  friend auto operator<=>(const Element&, const Element&) = default;
};

Element canonical_element(const GroupParams& params, std::int64_t u, std::int64_t v);

Element mul(const GroupParams& params, Element g1, Element g2);
Element inverse(const GroupParams& params, Element g);
// j-fold product, j >= 0. Uses the closed form b^j a^(w[j(j-1)/2 p^(m-1) + j])
// when u = 1, square-and-multiply otherwise.
Element pow(const GroupParams& params, Element g, std::int64_t j);

/// A concrete finite group the Burnside pipeline can run over: either the
/// modular group above or the cyclic fixture C_n. Immutable after
/// construction; all operations are pure.
class FiniteGroup {
 public:
  static FiniteGroup modular(const GroupParams& params);
  static FiniteGroup cyclic(std::int64_t n);

  Element mul(Element g1, Element g2) const;
  Element inverse(Element g) const;
  Element pow(Element g, std::int64_t j) const;
  Element identity() const { return Element{0, 0}; }

  std::int64_t order() const;
  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<Element>& generators() const { return generators_; }
  /// Position of g in elements(); O(1).
  std::int64_t element_index(Element g) const;

  bool is_modular() const { return kind_ == Kind::modular; }
  const GroupParams& params() const;

  std::string name() const;
  std::string format(Element g) const;

 private:
  enum class Kind { modular, cyclic };

  FiniteGroup(Kind kind, GroupParams params, std::int64_t n);

  Kind kind_;
  GroupParams params_;
  std::int64_t n_;  // cyclic order; unused for modular
  std::vector<Element> elements_;
  std::vector<Element> generators_;
};

}  // namespace burnside
