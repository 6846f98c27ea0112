#include "burnside/group.hpp"

#include <cassert>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace burnside {

namespace {

std::int64_t checked_pow(std::int64_t base, std::int64_t exp, std::int64_t limit) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (r > limit / base) throw std::invalid_argument("group order too large for exact machine arithmetic");
    r *= base;
  }
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

GroupParams::GroupParams(std::int64_t p_, std::int64_t m_) : p(p_), m(m_) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  // p^(m+1) < 2^31 keeps every exponent product below 2^62.
  checked_pow(p, m + 1, std::numeric_limits<std::int32_t>::max());
}

std::int64_t GroupParams::a_order() const {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < m; ++i) r *= p;
  return r;
}

std::int64_t GroupParams::order() const { return a_order() * p; }

std::int64_t GroupParams::twist() const { return a_order() / p + 1; }

Element canonical_element(const GroupParams& params, std::int64_t u, std::int64_t v) {
  return Element{mod(u, params.p), mod(v, params.a_order())};
}

Element mul(const GroupParams& params, Element g1, Element g2) {
  const std::int64_t q = params.a_order();
  // a^v b = b a^(tv) with t = p^(m-1)+1, so t^u = 1 + u p^(m-1) mod p^m.
  const std::int64_t tu = mod(1 + g2.u * (params.twist() - 1), q);
  return Element{mod(g1.u + g2.u, params.p), mod(g1.v % q * tu + g2.v, q)};
}

Element inverse(const GroupParams& params, Element g) {
  const std::int64_t q = params.a_order();
  const std::int64_t uu = mod(-g.u, params.p);
  const std::int64_t tu = mod(1 + uu * (params.twist() - 1), q);
  return Element{uu, mod(-(g.v % q) * tu, q)};
}

Element pow(const GroupParams& params, Element g, std::int64_t j) {
  if (j < 0) throw std::invalid_argument("pow exponent must be nonnegative");
  const std::int64_t q = params.a_order();
  if (g.u == 1) {
    // (b a^w)^j = b^j a^(w [j(j-1)/2 p^(m-1) + j]); only j(j-1)/2 mod p and
    // j mod p^m matter in the exponent.
    const std::int64_t twop = 2 * params.p;
    const std::int64_t half = mod(j, twop) * mod(j - 1, twop) % twop / 2;
    const std::int64_t e = mod(g.v % q * mod(half * (params.twist() - 1) + mod(j, q), q), q);
    return Element{mod(j, params.p), e};
  }
  Element acc{0, 0};
  Element base = g;
  std::int64_t e = j;
  while (e > 0) {
    if (e & 1) acc = mul(params, acc, base);
    base = mul(params, base, base);
    e >>= 1;
  }
  return acc;
}

FiniteGroup::FiniteGroup(Kind kind, GroupParams params, std::int64_t n)
    : kind_(kind), params_(params), n_(n) {
  if (kind_ == Kind::modular) {
    elements_.reserve(static_cast<std::size_t>(params_.order()));
    for (std::int64_t u = 0; u < params_.p; ++u)
      for (std::int64_t v = 0; v < params_.a_order(); ++v) elements_.push_back(Element{u, v});
    generators_ = {Element{0, 1}, Element{1, 0}};
  } else {
    elements_.reserve(static_cast<std::size_t>(n_));
    for (std::int64_t v = 0; v < n_; ++v) elements_.push_back(Element{0, v});
    generators_ = {Element{0, 1}};
  }
}

FiniteGroup FiniteGroup::modular(const GroupParams& params) {
  return FiniteGroup(Kind::modular, params, 0);
}

FiniteGroup FiniteGroup::cyclic(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("cyclic fixture needs n >= 2");
  return FiniteGroup(Kind::cyclic, GroupParams(3, 2), n);
}

Element FiniteGroup::mul(Element g1, Element g2) const {
  if (kind_ == Kind::modular) return burnside::mul(params_, g1, g2);
  return Element{0, (g1.v + g2.v) % n_};
}

Element FiniteGroup::inverse(Element g) const {
  if (kind_ == Kind::modular) return burnside::inverse(params_, g);
  return Element{0, g.v == 0 ? 0 : n_ - g.v};
}

Element FiniteGroup::pow(Element g, std::int64_t j) const {
  if (kind_ == Kind::modular) return burnside::pow(params_, g, j);
  if (j < 0) throw std::invalid_argument("pow exponent must be nonnegative");
  return Element{0, (g.v % n_) * (j % n_) % n_};
}

std::int64_t FiniteGroup::order() const {
  return static_cast<std::int64_t>(elements_.size());
}

std::int64_t FiniteGroup::element_index(Element g) const {
  if (kind_ == Kind::modular) return g.u * params_.a_order() + g.v;
  return g.v;
}

const GroupParams& FiniteGroup::params() const {
  if (kind_ != Kind::modular) throw std::logic_error("cyclic fixture has no (p, m) parameters");
  return params_;
}

std::string FiniteGroup::name() const {
  std::ostringstream os;
  if (kind_ == Kind::modular)
    os << "H(" << params_.p << "," << params_.m << ")";
  else
    os << "C_" << n_;
  return os.str();
}

std::string FiniteGroup::format(Element g) const {
  std::ostringstream os;
  if (kind_ == Kind::cyclic) {
    if (g.v == 0) return "e";
    os << "g";
    if (g.v != 1) os << "^" << g.v;
    return os.str();
  }
  if (g.u == 0 && g.v == 0) return "e";
  if (g.u != 0) {
    os << "b";
    if (g.u != 1) os << "^" << g.u;
  }
  if (g.v != 0) {
    if (g.u != 0) os << "*";
    os << "a";
    if (g.v != 1) os << "^" << g.v;
  }
  return os.str();
}

}  // namespace burnside
