#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "burnside/lattice.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {

MatZ from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  MatZ m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

bool hnf_shape_ok(const MatZ& h, Index rank) {
  Index last_pivot = -1;
  for (Index i = 0; i < h.rows(); ++i) {
    Index pivot = -1;
    for (Index j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        pivot = j;
        break;
      }
    if (i < rank) {
      if (pivot < 0 || pivot <= last_pivot) return false;
      if (h(i, pivot) <= 0) return false;
      for (Index k = 0; k < i; ++k)
        if (h(k, pivot) < 0 || h(k, pivot) >= h(i, pivot)) return false;
      last_pivot = pivot;
    } else if (pivot >= 0) {
      return false;  // zero rows must come last
    }
  }
  return true;
}

bool divisibility_chain_ok(const MatZ& d) {
  const Index n = std::min(d.rows(), d.cols());
  for (Index i = 0; i < d.rows(); ++i)
    for (Index j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  for (Index i = 0; i + 1 < n; ++i) {
    if (d(i, i) < 0 || d(i + 1, i + 1) < 0) return false;
    if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
    if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf of the identity") {
  const MatZ id = MatZ::Identity(4, 4);
  const auto form = hnf(id);
  CHECK(matrix_equal(form.h, id));
  CHECK(matrix_equal(form.u, id));
  CHECK(form.rank == 4);
}

TEST_CASE("hnf of a 2x2 example") {
  const MatZ m = from_rows({{2, 4}, {1, 3}});
  const auto form = hnf(m);
  CHECK(matrix_equal(form.h, from_rows({{1, 1}, {0, 2}})));
  CHECK(matrix_equal(MatZ(form.u * m), form.h));
  const Int det_u = testing::bareiss_det(form.u);
  CHECK((det_u == 1 || det_u == -1));
}

TEST_CASE("hnf postconditions on random matrices") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const Index rows = 1 + static_cast<Index>(trial % 7);
    const Index cols = 1 + static_cast<Index>((trial * 5 + 3) % 7);
    const MatZ m = testing::random_matrix(rng, rows, cols);
    const auto form = hnf(m);
    CHECK(matrix_equal(MatZ(form.u * m), form.h));
    const Int det_u = testing::bareiss_det(form.u);
    CHECK((det_u == 1 || det_u == -1));
    CHECK(hnf_shape_ok(form.h, form.rank));
    // Idempotence: the HNF of an HNF basis is itself.
    const MatZ basis = form.h.topRows(form.rank);
    CHECK(matrix_equal(hnf_basis(basis), basis));
  }
}

TEST_CASE("hnf is invariant under unimodular row operations") {
  std::mt19937_64 rng(202);
  int done = 0;
  while (done < 200) {
    const MatZ m = testing::random_matrix(rng, 4, 5);
    const MatZ canonical = hnf_basis(m);
    MatZ perturbed = m;
    for (int k = 0; k < 6; ++k) testing::random_row_op(rng, perturbed);
    CHECK(matrix_equal(hnf_basis(perturbed), canonical));
    ++done;
  }
}

TEST_CASE("snf of small diagonals") {
  const auto form23 = snf(from_rows({{2, 0}, {0, 3}}));
  CHECK(matrix_equal(form23.d, from_rows({{1, 0}, {0, 6}})));
  CHECK(form23.invariants.divisors == std::vector<Int>{6});
  CHECK(form23.invariants.free_rank == 0);

  const auto formpp = snf(from_rows({{5, 0}, {0, 5}}));
  CHECK(formpp.invariants.divisors == std::vector<Int>{5, 5});
  CHECK(formpp.invariants.free_rank == 0);
}

TEST_CASE("snf divisor product equals the determinant") {
  std::mt19937_64 rng(303);
  int done = 0;
  while (done < 60) {
    const Index n = 2 + static_cast<Index>(done % 4);
    const MatZ m = testing::random_matrix(rng, n, n, 6);
    const Int det = testing::bareiss_det(m);
    if (det == 0) continue;
    const auto form = snf(m);
    CHECK(divisibility_chain_ok(form.d));
    Int prod = 1;
    for (Index i = 0; i < n; ++i) prod *= form.d(i, i);
    CHECK(prod == abs(det));
    CHECK(form.invariants.free_rank == 0);
    ++done;
  }
}

TEST_CASE("snf invariants survive unimodular perturbation on both sides") {
  std::mt19937_64 rng(404);
  int done = 0;
  while (done < 200) {
    const MatZ m = testing::random_matrix(rng, 4, 5, 5);
    const auto reference = snf(m).invariants;
    MatZ perturbed = m;
    for (int k = 0; k < 4; ++k) testing::random_row_op(rng, perturbed);
    for (int k = 0; k < 4; ++k) testing::random_col_op(rng, perturbed);
    CHECK(snf(perturbed).invariants == reference);
    ++done;
  }
}

TEST_CASE("express_in_basis round trip") {
  const MatZ id = MatZ::Identity(3, 3);
  RowVecZ v(3);
  v << 4, -7, 0;
  const auto c = express_in_basis(id, v);
  REQUIRE(c.has_value());
  CHECK(vector_equal(VecZ(c->transpose()), VecZ(v.transpose())));

  std::mt19937_64 rng(505);
  std::uniform_int_distribution<int> coeff(-9, 9);
  int done = 0;
  while (done < 100) {
    const MatZ m = testing::random_matrix(rng, 4, 6);
    const auto form = hnf(m);
    if (form.rank != 4) continue;
    const MatZ basis = form.h.topRows(form.rank);
    RowVecZ coords(4);
    for (Index i = 0; i < 4; ++i) coords(i) = coeff(rng);
    const RowVecZ target = coords * basis;
    const auto back = express_in_basis(basis, target);
    REQUIRE(back.has_value());
    CHECK(vector_equal(VecZ(back->transpose()), VecZ(coords.transpose())));
    ++done;
  }
}

TEST_CASE("express_in_basis signals non-membership") {
  MatZ basis(1, 1);
  basis(0, 0) = 3;
  RowVecZ v(1);
  v(0) = 4;
  CHECK_FALSE(express_in_basis(basis, v).has_value());
  v(0) = 6;
  CHECK(express_in_basis(basis, v).has_value());

  // A vector outside the column span.
  MatZ wide(1, 2);
  wide(0, 0) = 1;
  wide(0, 1) = 0;
  RowVecZ w(2);
  w << 1, 1;
  CHECK_FALSE(express_in_basis(wide, w).has_value());
}

TEST_CASE("quotient_invariants on simple pairs") {
  const MatZ id = MatZ::Identity(2, 2);
  CHECK(quotient_invariants(id, id) == AbelianInvariants{});
  const MatZ diag_pp = from_rows({{5, 0}, {0, 5}});
  const AbelianInvariants expected{{5, 5}, 0};
  CHECK(quotient_invariants(id, diag_pp) == expected);
  CHECK_THROWS_AS(quotient_invariants(diag_pp, id), NotSublatticeError);
}

TEST_CASE("quotient index equals the determinant of the relation matrix") {
  std::mt19937_64 rng(606);
  int done = 0;
  while (done < 50) {
    const MatZ a = testing::random_matrix(rng, 3, 4);
    if (hnf(a).rank != 3) continue;
    const MatZ basis_a = hnf_basis(a);
    // Build a finite-index sublattice with known relation determinant.
    MatZ rel = testing::random_matrix(rng, 3, 3, 4);
    const Int det = testing::bareiss_det(rel);
    if (det == 0) continue;
    const MatZ b = rel * basis_a;
    const AbelianInvariants inv = quotient_invariants(basis_a, b);
    Int prod = 1;
    for (const Int& d : inv.divisors) prod *= d;
    CHECK(prod == abs(det));
    CHECK(inv.free_rank == 0);
    ++done;
  }
}

TEST_CASE("format_abelian") {
  CHECK(format_abelian(AbelianInvariants{}) == "1");
  CHECK(format_abelian(AbelianInvariants{{3, 3, 3}, 0}) == "C_3^3");
  CHECK(format_abelian(AbelianInvariants{{2, 6}, 0}) == "C_2 x C_6");
  CHECK(format_abelian(AbelianInvariants{{4}, 2}) == "C_4 x Z^2");
  CHECK(format_abelian(AbelianInvariants{{}, 1}) == "Z");
}
