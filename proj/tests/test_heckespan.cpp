#include <doctest.h>

#include "imprim/heckespan.hpp"

using namespace imprim;

TEST_CASE("lattice membership and the Q + pL decomposition") {
  LatticePoint l{{2, 1, 1}};
  CHECK(l.degree() == 4);
  CHECK(l.in_C_r(3));
  CHECK(!l.in_C_r(2));
  CHECK(l.in_L_p(2));
  CHECK(!l.in_L_p(3));

  // |lambda| = 0 mod p iff lambda decomposes as q + p*m with q in Q
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (unsigned p : {2u, 3u}) {
        LatticePoint x{{a, b}};
        std::vector<int> q, m;
        bool dec = x.decompose_Q_plus_pL(p, q, m);
        CHECK(dec == x.in_L_p(p));
        if (dec) {
          int qs = 0;
          for (size_t i = 0; i < q.size(); ++i) {
            qs += q[i];
            CHECK(q[i] + static_cast<int>(p) * m[i] == x.coords[i]);
          }
          CHECK(qs == 0);
        }
      }
}

TEST_CASE("full basis images are independent") {
  auto res212 = full_basis_images(HeckeParams::defaults(GroupParams(2, 1, 2)));
  CHECK(res212.elements.size() == 8);
  CHECK(res212.rank == 8);

  auto res312 = full_basis_images(HeckeParams::defaults(GroupParams(3, 1, 2)));
  CHECK(res312.elements.size() == 18);
  CHECK(res312.rank == 18);

  // lambda = 0, w = id gives the identity block matrix
  const auto& first = res212.elements.front();
  CHECK(first.lattice.degree() == 0);
  for (const auto& b : first.blocks)
    CHECK(mat_equal(b, CycMatrix::Identity(b.rows(), b.cols())));

  CHECK_THROWS_AS(full_basis_images(HeckeParams::defaults(GroupParams(4, 1, 4))),
                  Error);  // 4^4 * 24 > default cap
}

TEST_CASE("evaluation is multiplicative on random samples") {
  auto hp = HeckeParams::defaults(GroupParams(2, 1, 2));
  HeckeSum pi(hp);
  auto t2 = pi.generator_blocks(2);
  auto t1 = pi.generator_blocks(1);
  auto lhs = HeckeSum::mul(HeckeSum::mul(t1, t2), HeckeSum::mul(t2, t1));
  auto rhs = HeckeSum::mul(t1, HeckeSum::mul(HeckeSum::mul(t2, t2), t1));
  for (size_t b = 0; b < lhs.size(); ++b) CHECK(mat_equal(lhs[b], rhs[b]));
}

TEST_CASE("fixed subspace at (2,2,2)") {
  auto report = fixed_subspace_check(HeckeParams::defaults(GroupParams(2, 2, 2)));
  CHECK(report.expected_dim == 4);
  CHECK(report.dim_weight0 == 4);
  CHECK(report.dim_lp_filter == 4);
  CHECK(report.dim_subalgebra_words == 4);
  CHECK(report.containment_ok);
  CHECK(report.labels_match);
  CHECK(report.pass());
  // each tau-eigenspace has dimension r^n n!/p
  for (long d : report.eigenspace_dims) CHECK(d == 4);
}

TEST_CASE("fixed subspace at (4,2,2) and (3,3,2)") {
  auto r1 = fixed_subspace_check(HeckeParams::defaults(GroupParams(4, 2, 2)));
  CHECK(r1.expected_dim == 16);
  CHECK(r1.pass());

  auto r2 = fixed_subspace_check(HeckeParams::defaults(GroupParams(3, 3, 2)));
  CHECK(r2.expected_dim == 6);
  CHECK(r2.pass());
  for (long d : r2.eigenspace_dims) CHECK(d == 6);
}

TEST_CASE("fixed subspace is everything at p = 1") {
  auto report = fixed_subspace_check(HeckeParams::defaults(GroupParams(3, 1, 2)));
  CHECK(report.expected_dim == 18);
  CHECK(report.pass());
}

TEST_CASE("commutative diagram sample at (2,2,2)") {
  auto report = commutative_diagram_check(HeckeParams::defaults(GroupParams(2, 2, 2)));
  CHECK(report.pass);
  CHECK(report.subalgebra_words_in_fixed_span);
  // the word X^2 T_2 has tau-weight 0 and lands in the fixed span,
  // the word X has weight 1 and stays outside, the empty word has scalar 1
  bool found_x2t2 = false, found_x = false, found_empty = false;
  for (const auto& c : report.checks) {
    if (c.word == AffineWord{1, 1, 2}) {
      found_x2t2 = true;
      CHECK(c.tau_weight == 0);
      CHECK(c.in_fixed_span);
    }
    if (c.word == AffineWord{1}) {
      found_x = true;
      CHECK(c.tau_weight == 1);
      CHECK(!c.in_fixed_span);
    }
    if (c.word.empty()) {
      found_empty = true;
      CHECK(c.tau_weight == 0);
      CHECK(c.scaling_commutes);
    }
  }
  CHECK(found_x2t2);
  CHECK(found_x);
  CHECK(found_empty);
}
