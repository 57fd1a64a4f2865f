#include <doctest.h>

#include <random>

#include "imprim/linalg.hpp"

using imprim::CycMatrix;
using imprim::CycNum;
using imprim::CycVector;

namespace {

CycNum zeta(unsigned N, long k = 1) { return CycNum::root_of_unity(N, k); }

CycMatrix random_matrix(std::mt19937& rng, int rows, int cols, unsigned N) {
  std::uniform_int_distribution<int> num(-3, 3);
  CycMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      std::vector<imprim::Rational> c(CycNum::euler_phi(N));
      for (auto& x : c) x = num(rng);
      m(i, j) = CycNum(N, c);
    }
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(imprim::exact_rank(CycMatrix::Identity(5, 5)) == 5);
  CycMatrix m(2, 2);
  m << CycNum(1), zeta(4), zeta(4), CycNum(-1);
  CHECK(imprim::exact_rank(m) == 1);  // second row = zeta_4 * first
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 8; ++trial) {
    int rows = 2 + trial % 4, cols = 2 + (trial * 7) % 5;
    CycMatrix a = random_matrix(rng, rows, cols, trial % 2 ? 4 : 3);
    long rank = imprim::exact_rank(a);
    CycMatrix null = imprim::exact_nullspace(a);
    CHECK(rank + null.cols() == cols);
    if (null.cols() > 0) CHECK(imprim::mat_is_zero(a * null));
    // nullspace columns pairwise independent
    CHECK(imprim::exact_rank(null) == null.cols());
  }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  std::mt19937 rng(99);
  CycMatrix a = random_matrix(rng, 4, 4, 4);
  CycMatrix b = random_matrix(rng, 4, 2, 4);
  auto x = imprim::exact_solve(a, b);
  if (imprim::exact_rank(a) == 4) {
    REQUIRE(x.has_value());
    CHECK(imprim::mat_equal(a * *x, b));
  }

  // an inconsistent system: [1;1] x = [1;2]
  CycMatrix a2(2, 1), b2(2, 1);
  a2 << CycNum(1), CycNum(1);
  b2 << CycNum(1), CycNum(2);
  CHECK(!imprim::exact_solve(a2, b2).has_value());

  CycMatrix bad(3, 1);
  bad << CycNum(1), CycNum(1), CycNum(1);
  CHECK_THROWS_AS(imprim::exact_solve(a2, bad), imprim::Error);
}

TEST_CASE("inverse and determinant") {
  CycMatrix m(2, 2);
  m << CycNum(1), zeta(4), CycNum(0), CycNum(2);
  CycMatrix inv = imprim::exact_inverse(m);
  CHECK(imprim::mat_equal(m * inv, CycMatrix::Identity(2, 2)));
  CHECK(imprim::exact_det(m) == CycNum(2));

  std::mt19937 rng(5);
  CycMatrix a = random_matrix(rng, 3, 3, 3);
  CycMatrix b = random_matrix(rng, 3, 3, 3);
  CHECK(imprim::exact_det(a * b) == imprim::exact_det(a) * imprim::exact_det(b));

  CycMatrix sing(2, 2);
  sing << CycNum(1), CycNum(1), CycNum(1), CycNum(1);
  CHECK(imprim::exact_det(sing) == CycNum(0));
  CHECK_THROWS_AS(imprim::exact_inverse(sing), imprim::Error);
}

TEST_CASE("row basis accumulates spans incrementally") {
  imprim::RowBasis basis(3);
  CycVector v1(3), v2(3), v3(3);
  v1 << CycNum(1), CycNum(2), CycNum(3);
  v2 << CycNum(2), CycNum(4), CycNum(6);
  v3 << CycNum(0), CycNum(1), zeta(4);
  CHECK(basis.add(v1));
  CHECK(!basis.add(v2));  // dependent
  CHECK(basis.contains(v2));
  CHECK(!basis.contains(v3));
  CHECK(basis.add(v3));
  CHECK(basis.rank() == 2);
}

TEST_CASE("tau fixed-point system at (2,2,2) has nullity 4") {
  // tau scales the basis element X^lambda T_w by xi^{|lambda|} with xi = -1;
  // the fixed-point system diag(xi^{|lambda|} - 1) over the 8 labels
  // (lambda in {0,1}^2, w in S_2) has nullspace spanned by the 4 labels of
  // even exponent sum.
  CycMatrix sys = CycMatrix::Constant(8, 8, CycNum(0));
  int idx = 0;
  for (int l1 = 0; l1 < 2; ++l1)
    for (int l2 = 0; l2 < 2; ++l2)
      for (int w = 0; w < 2; ++w, ++idx)
        sys(idx, idx) = CycNum((l1 + l2) % 2 ? -1 : 1) - CycNum(1);
  CHECK(imprim::exact_nullspace(sys).cols() == 4);
}

TEST_CASE("common field order normalization") {
  CycMatrix m(1, 2);
  m << zeta(4), zeta(6);
  CHECK(imprim::mat_field_order(m) == 12);
  CycMatrix lifted = imprim::mat_with_common_order(m);
  CHECK(lifted(0, 0).order() == 12);
  CHECK(lifted(0, 0) == zeta(4));
}
