#include "burnside/closed_form.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace burnside {

namespace {

std::int64_t pow_i64(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_closed_form_range(const GroupParams& params) {
  if (params.m < 3)
    throw UnsupportedParamsError("closed-form results cover m >= 3 only");
}

}  // namespace

BasisLabel BasisLabel::alpha(const GroupParams& params, std::int64_t i) {
  if (i < 0 || i > params.m) throw std::out_of_range("alpha index must lie in 0..m");
  BasisLabel label;
  label.kind = Kind::alpha;
  label.i = i;
  return label;
}

BasisLabel BasisLabel::beta(const GroupParams& params, std::int64_t k, std::int64_t l) {
  if (k < 1 || k > params.m) throw std::out_of_range("beta index k must lie in 1..m");
  if (l < 0) throw std::out_of_range("beta index l must be nonnegative");
  BasisLabel label;
  label.kind = Kind::beta;
  label.k = k;
  label.l = k == params.m ? 0 : l % params.p;
  return label;
}

BasisLabel BasisLabel::epsilon() { return BasisLabel{}; }

std::string BasisLabel::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::alpha:
      os << "alpha_" << i;
      break;
    case Kind::beta:
      os << "beta_{" << k << "," << l << "}";
      break;
    case Kind::epsilon:
      os << "epsilon";
      break;
  }
  return os.str();
}

LabelCombination LabelCombination::of(std::vector<std::pair<Int, BasisLabel>> raw) {
  std::map<BasisLabel, Int> merged;
  for (auto& [coeff, label] : raw) merged[label] += coeff;
  LabelCombination c;
  for (auto& [label, coeff] : merged)
    if (coeff != 0) c.terms.emplace_back(coeff, label);
  return c;
}

std::string LabelCombination::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [coeff, label] : terms) {
    if (!first) os << " + ";
    if (coeff != 1) os << coeff.get_str() << "*";
    os << label.str();
    first = false;
  }
  return os.str();
}

Subgroup subgroup_N(const GroupParams& params, std::int64_t i) {
  if (i < 0 || i > params.m) throw std::out_of_range("subgroup index must lie in 0..m");
  const std::int64_t step = pow_i64(params.p, i);
  const std::int64_t count = params.a_order() / step;
  std::vector<Element> elements;
  elements.reserve(static_cast<std::size_t>(count));
  for (std::int64_t c = 0; c < count; ++c) elements.push_back(Element{0, c * step});
  return Subgroup{std::move(elements)};
}

Subgroup subgroup_M(const GroupParams& params, std::int64_t k, std::int64_t l) {
  if (k < 1 || k > params.m) throw std::out_of_range("subgroup index k must lie in 1..m");
  if (l < 0) throw std::out_of_range("subgroup index l must be nonnegative");
  const Subgroup nk = subgroup_N(params, k);
  const Element gen = canonical_element(params, 1, (l % params.p) * pow_i64(params.p, k - 1));
  std::set<Element> elements;
  for (std::int64_t j = 0; j < params.p; ++j) {
    const Element base = pow(params, gen, j);
    for (const Element x : nk.elements) elements.insert(mul(params, base, x));
  }
  Subgroup sub{{elements.begin(), elements.end()}};
  if (sub.order() != pow_i64(params.p, params.m - k + 1))
    throw InternalInconsistencyError("M_{k,l} has unexpected order");
  return sub;
}

std::vector<BasisLabel> basis_labels(const GroupParams& params) {
  std::vector<BasisLabel> labels;
  for (std::int64_t i = 0; i <= params.m; ++i) labels.push_back(BasisLabel::alpha(params, i));
  for (std::int64_t k = 1; k < params.m; ++k)
    for (std::int64_t l = 0; l < params.p; ++l) labels.push_back(BasisLabel::beta(params, k, l));
  labels.push_back(BasisLabel::beta(params, params.m, 0));
  labels.push_back(BasisLabel::epsilon());
  return labels;
}

LabelCombination closed_mul(const GroupParams& params, const BasisLabel& x, const BasisLabel& y) {
  using Kind = BasisLabel::Kind;
  const Int p(params.p);
  if (x.kind == Kind::epsilon) return LabelCombination::of({{Int(1), y}});
  if (y.kind == Kind::epsilon) return LabelCombination::of({{Int(1), x}});

  if (x.kind == Kind::alpha && y.kind == Kind::alpha) {
    const std::int64_t lo = std::min(x.i, y.i);
    const std::int64_t hi = std::max(x.i, y.i);
    return LabelCombination::of(
        {{int_pow(p, static_cast<unsigned long>(lo + 1)), BasisLabel::alpha(params, hi)}});
  }

  if (x.kind != y.kind) {
    const BasisLabel& a = x.kind == Kind::alpha ? x : y;
    const BasisLabel& b = x.kind == Kind::beta ? x : y;
    const std::int64_t lo = std::min(a.i, b.k);
    const std::int64_t hi = std::max(a.i, b.k);
    return LabelCombination::of(
        {{int_pow(p, static_cast<unsigned long>(lo)), BasisLabel::alpha(params, hi)}});
  }

  // Both beta. The self-product of beta_{m,0} is the one non-transitive case;
  // every other pair routes through the k >= r table with (k,l) the larger
  // first index.
  if (x.k == params.m && y.k == params.m) {
    const Int lead = int_pow(p, static_cast<unsigned long>(params.m - 1));
    const Int tail = lead - int_pow(p, static_cast<unsigned long>(params.m - 2));
    return LabelCombination::of(
        {{lead, BasisLabel::beta(params, params.m, 0)}, {tail, BasisLabel::alpha(params, params.m)}});
  }
  const BasisLabel& big = x.k >= y.k ? x : y;
  const BasisLabel& small = x.k >= y.k ? y : x;
  const std::int64_t k = big.k;
  const std::int64_t l = big.l;
  const std::int64_t r = small.k;
  const std::int64_t s = small.l;
  const bool transitive = k > r ? s == 0 : l == s;
  if (transitive)
    return LabelCombination::of(
        {{int_pow(p, static_cast<unsigned long>(r)), BasisLabel::beta(params, k, l)}});
  return LabelCombination::of(
      {{int_pow(p, static_cast<unsigned long>(r - 1)), BasisLabel::alpha(params, k)}});
}

std::vector<LabelCombination> closed_delta_power_basis(const GroupParams& params, std::int64_t n) {
  require_closed_form_range(params);
  if (n < 1) throw std::invalid_argument("power index must be at least 1");
  const Int p(params.p);
  std::vector<LabelCombination> basis;
  const auto scaled = [&](const Int& coeff, const BasisLabel& label) {
    basis.push_back(LabelCombination::of({{coeff, label}}));
  };
  const Int alpha0_coeff = n == 1 ? Int(1) : int_pow(p, static_cast<unsigned long>(n - 1));
  const Int alpha_coeff = n == 1 ? Int(1) : int_pow(p, static_cast<unsigned long>(n - 2));
  const Int beta_coeff = n == 1 ? Int(1) : int_pow(p, static_cast<unsigned long>(n - 1));
  scaled(alpha0_coeff, BasisLabel::alpha(params, 0));
  for (std::int64_t i = 1; i <= params.m; ++i) scaled(alpha_coeff, BasisLabel::alpha(params, i));
  for (std::int64_t k = 1; k < params.m; ++k)
    for (std::int64_t l = 0; l < params.p; ++l) scaled(beta_coeff, BasisLabel::beta(params, k, l));
  scaled(beta_coeff, BasisLabel::beta(params, params.m, 0));
  return basis;
}

AbelianInvariants closed_qn(const GroupParams& params, std::int64_t n) {
  require_closed_form_range(params);
  if (n < 1) throw std::invalid_argument("power index must be at least 1");
  const std::int64_t count =
      n == 1 ? (params.m - 1) * params.p + 2 : (params.m - 1) * params.p + params.m + 2;
  AbelianInvariants inv;
  inv.divisors.assign(static_cast<std::size_t>(count), Int(params.p));
  return inv;
}

Index LabelAlignment::class_of(const BasisLabel& label) const {
  const auto it = class_by_label_.find(label);
  if (it == class_by_label_.end()) throw AlignmentError("label has no aligned class: " + label.str());
  return it->second;
}

const BasisLabel& LabelAlignment::label_of(Index cls) const {
  if (cls < 0 || cls >= size()) throw std::out_of_range("class index out of range");
  return label_by_class_[static_cast<std::size_t>(cls)];
}

VecZ LabelAlignment::vector_of(const LabelCombination& c) const {
  VecZ v = VecZ::Zero(size());
  for (const auto& [coeff, label] : c.terms) v(class_of(label)) += coeff;
  return v;
}

RowVecZ LabelAlignment::ideal_vector_of(const LabelCombination& c) const {
  const VecZ v = vector_of(c);
  if (v(size() - 1) != 0)
    throw InternalInconsistencyError("ideal combination touches the full-group class");
  return v.head(size() - 1).transpose();
}

LabelAlignment label_alignment(const GroupParams& params, const ConjugacyClassTable& classes) {
  const FiniteGroup group = FiniteGroup::modular(params);
  LabelAlignment alignment;
  alignment.label_by_class_.assign(static_cast<std::size_t>(classes.size()),
                                   BasisLabel::epsilon());
  std::set<Index> hit;
  for (const BasisLabel& label : basis_labels(params)) {
    Subgroup sub;
    switch (label.kind) {
      case BasisLabel::Kind::alpha:
        sub = subgroup_N(params, label.i);
        break;
      case BasisLabel::Kind::beta:
        sub = subgroup_M(params, label.k, label.l);
        break;
      case BasisLabel::Kind::epsilon:
        sub = Subgroup{group.elements()};
        break;
    }
    const Index cls = classes.class_of(sub);
    if (cls < 0) throw AlignmentError("no conjugacy class found for " + label.str());
    if (!hit.insert(cls).second)
      throw AlignmentError("two labels landed in one conjugacy class: " + label.str());
    alignment.class_by_label_.emplace(label, cls);
    alignment.label_by_class_[static_cast<std::size_t>(cls)] = label;
  }
  if (static_cast<Index>(hit.size()) != classes.size())
    throw AlignmentError("some conjugacy classes carry no label");
  return alignment;
}

}  // namespace burnside
