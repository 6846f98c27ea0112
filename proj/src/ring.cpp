#include "burnside/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace burnside {

BurnsideElement basis_element(const MarksTable& table, Index cls) {
  if (cls < 0 || cls >= table.size()) throw std::out_of_range("class index out of range");
  VecZ coeffs = VecZ::Zero(table.size());
  coeffs(cls) = 1;
  return BurnsideElement{std::move(coeffs)};
}

BurnsideElement ring_identity(const MarksTable& table) {
  return basis_element(table, table.size() - 1);
}

VecZ marks_of(const MarksTable& table, const BurnsideElement& x) {
  return table.marks * x.coeffs;
}

BurnsideElement multiply(const MarksTable& table, const BurnsideElement& x,
                         const BurnsideElement& y) {
  const Index s = table.size();
  const VecZ mx = marks_of(table, x);
  const VecZ my = marks_of(table, y);
  const VecZ h = mx.cwiseProduct(my);
  // Solve marks * c = h; the matrix is upper triangular with positive
  // diagonal, and integrality of every quotient doubles as a self-check.
  VecZ c = VecZ::Zero(s);
  for (Index i = s - 1; i >= 0; --i) {
    Int acc = h(i);
    for (Index j = i + 1; j < s; ++j) acc -= table.marks(i, j) * c(j);
    if (acc % table.marks(i, i) != 0) {
      std::ostringstream os;
      os << "non-integer coordinate at class " << i << " while inverting the marks matrix";
      throw InternalInconsistencyError(os.str());
    }
    c(i) = acc / table.marks(i, i);
  }
  return BurnsideElement{std::move(c)};
}

Int augmentation(const MarksTable& table, const BurnsideElement& x) {
  const Index top = table.size() - 1;
  Int acc = 0;
  for (Index j = 0; j < table.size(); ++j) acc += table.marks(top, j) * x.coeffs(j);
  return acc;
}

std::vector<BurnsideElement> delta_basis(const MarksTable& table) {
  std::vector<BurnsideElement> basis;
  basis.reserve(static_cast<std::size_t>(table.size() - 1));
  for (Index i = 0; i + 1 < table.size(); ++i) basis.push_back(basis_element(table, i));
  return basis;
}

namespace {

// Structure matrices of the augmentation ideal: product_with[i] has row j
// equal to the proper-class coordinates of [G/K_i][G/K_j]. Products of
// augmentation-zero elements carry no [G/G] term.
std::vector<MatZ> delta_structure_products(const MarksTable& table) {
  const Index r = table.size() - 1;
  std::vector<MatZ> products(static_cast<std::size_t>(r), MatZ::Zero(r, r));
  for (Index i = 0; i < r; ++i) {
    for (Index j = i; j < r; ++j) {
      const BurnsideElement z =
          multiply(table, basis_element(table, i), basis_element(table, j));
      if (z.coeffs(r) != 0)
        throw InternalInconsistencyError("product of ideal elements has a full-group term");
      products[static_cast<std::size_t>(i)].row(j) = z.coeffs.head(r).transpose();
      products[static_cast<std::size_t>(j)].row(i) = z.coeffs.head(r).transpose();
    }
  }
  return products;
}

}  // namespace

std::vector<MatZ> delta_power_chain(const MarksTable& table, std::int64_t max_n) {
  if (max_n < 1) throw std::invalid_argument("power index must be at least 1");
  const Index r = table.size() - 1;
  std::vector<MatZ> chain;
  chain.push_back(MatZ::Identity(r, r));
  if (max_n == 1) return chain;

  const std::vector<MatZ> products = delta_structure_products(table);
  for (std::int64_t n = 2; n <= max_n; ++n) {
    const MatZ& prev = chain.back();
    MatZ generators(r * r, r);
    for (Index i = 0; i < r; ++i)
      generators.middleRows(i * r, r) = prev * products[static_cast<std::size_t>(i)];
    MatZ basis = hnf_basis(generators);
    if (basis.rows() != r)
      throw InternalInconsistencyError("ideal power lost rank during reduction");
    chain.push_back(std::move(basis));
  }
  return chain;
}

IdealLatticeBasis ideal_power(const MarksTable& table, std::int64_t n) {
  auto chain = delta_power_chain(table, n);
  return IdealLatticeBasis{n, std::move(chain.back())};
}

AbelianInvariants quotient_qn(const MarksTable& table, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("power index must be at least 1");
  const auto chain = delta_power_chain(table, n + 1);
  AbelianInvariants inv = quotient_invariants(chain[static_cast<std::size_t>(n - 1)],
                                              chain[static_cast<std::size_t>(n)]);
  if (inv.free_rank != 0)
    throw InternalInconsistencyError("consecutive ideal powers have unequal rank");
  return inv;
}

}  // namespace burnside
