#include <doctest.h>

#include "imprim/clifford.hpp"

using namespace imprim;

TEST_CASE("tau twist basics") {
  GroupParams gp(2, 2, 2);
  auto hp = HeckeParams::make(gp, CycNum(2), {CycNum(1)});
  Rep rep = build_rep(MultiPartition(2, 1, {{1}, {1}}), hp);

  Rep tw = tau_twist(rep);
  CHECK(tw.gens[0](0, 0) == CycNum(-1));  // xi^{-1} * diag(1,-1)
  CHECK(tw.gens[0](1, 1) == CycNum(1));
  CHECK(verify_relations(tw).all_ok());

  // twisting p times restores the original exactly
  Rep twice = tau_twist(tau_twist(rep));
  for (unsigned i = 0; i < 2; ++i)
    CHECK(mat_equal(twice.gens[i], rep.gens[i]));

  // p = 1: identity functor
  auto h1 = HeckeParams::defaults(GroupParams(2, 1, 2));
  Rep r1 = build_rep(MultiPartition(1, 2, {{1}, {1}}), h1);
  Rep t1 = tau_twist(r1);
  CHECK(mat_equal(t1.gens[0], r1.gens[0]));
}

TEST_CASE("tau o shift = 1 with the exact relabeling intertwiner") {
  for (auto cfg : std::vector<std::array<unsigned, 3>>{
           {2, 2, 2}, {4, 2, 2}, {3, 3, 2}, {2, 2, 3}, {4, 4, 2}}) {
    auto hp = HeckeParams::defaults(GroupParams(cfg[0], cfg[1], cfg[2]));
    for (const auto& shape : multipartitions(cfg[0], cfg[1], cfg[2])) {
      auto res = verify_tau_shift_inverse(shape, hp);
      CHECK_MESSAGE(res.ok, shape.to_string(), " witness: ", res.witness);
    }
  }
  // p = 1: R is the identity map
  auto h1 = HeckeParams::defaults(GroupParams(3, 1, 2));
  for (const auto& shape : multipartitions(3, 1, 2)) {
    auto res = verify_tau_shift_inverse(shape, h1);
    CHECK(res.ok);
    CHECK(mat_equal(res.map, CycMatrix::Identity(res.map.rows(), res.map.cols())));
  }
}

TEST_CASE("subalgebra generator images") {
  GroupParams gp(2, 2, 2);
  auto hp = HeckeParams::make(gp, CycNum(2), {CycNum(1)});
  Rep rep = build_rep(MultiPartition(2, 1, {{1}, {1}}), hp);
  auto sub = restrict_to_subalgebra(rep);
  // t_0 = diag(1,-1)^2 = identity
  CHECK(mat_equal(sub.t[0], CycMatrix::Identity(2, 2)));
  // t_i = T_i unchanged for i >= 2
  CHECK(mat_equal(sub.t[2], rep.gens[1]));

  // polynomial inverse of T_1 at r = 4
  auto hp4 = HeckeParams::defaults(GroupParams(4, 2, 2));
  Rep rep4 = build_rep(multipartitions(4, 2, 2)[3], hp4);
  CycMatrix inv = t1_inverse_by_polynomial(rep4);
  CHECK(mat_equal(rep4.gens[0] * inv, CycMatrix::Identity(rep4.dim(), rep4.dim())));
  CHECK(mat_equal(inv * rep4.gens[0], CycMatrix::Identity(rep4.dim(), rep4.dim())));
}

TEST_CASE("clifford decomposition of restricted modules") {
  GroupParams gp(2, 2, 2);
  auto hp = HeckeParams::make(gp, CycNum(2), {CycNum(1)});

  // lambda = ((1),(1)): e = 2, two 1-dimensional summands
  Rep stable = build_rep(MultiPartition(2, 1, {{1}, {1}}), hp);
  auto rpt = decompose_restriction(stable);
  CHECK(rpt.e_lambda == 2);
  REQUIRE(rpt.summands.size() == 2);
  CHECK(rpt.summands[0].dimension == 1);
  CHECK(rpt.summands[1].dimension == 1);
  CHECK(rpt.commutant_dimension == 2);

  // lambda = ((2), -): e = 1, restriction stays irreducible
  Rep moving = build_rep(MultiPartition(2, 1, {{2}, {}}), hp);
  auto rpt2 = decompose_restriction(moving);
  CHECK(rpt2.e_lambda == 1);
  CHECK(rpt2.summands.size() == 1);
  CHECK(rpt2.commutant_dimension == 1);

  // lambda = ((1),(1),(1)) at r = p = 3, n = 3: three summands of dim 2
  auto hp3 = HeckeParams::defaults(GroupParams(3, 3, 3));
  Rep r3 = build_rep(MultiPartition(3, 1, {{1}, {1}, {1}}), hp3);
  REQUIRE(r3.dim() == 6);
  auto rpt3 = decompose_restriction(r3);
  CHECK(rpt3.e_lambda == 3);
  REQUIRE(rpt3.summands.size() == 3);
  for (const auto& s : rpt3.summands) CHECK(s.dimension == 2);
  CHECK(rpt3.commutant_dimension == 3);
}

TEST_CASE("restriction characters agree across a cyclic class") {
  GroupParams gp(2, 2, 3);
  auto hp = HeckeParams::defaults(gp);
  MultiPartition a(2, 1, {{2}, {1}});
  MultiPartition b = a.shifted();
  Rep ra = build_rep(a, hp, false), rb = build_rep(b, hp, false);
  auto sa = restrict_to_subalgebra(ra), sb = restrict_to_subalgebra(rb);
  // traces of a fixed word sample in the subalgebra generators coincide
  std::vector<std::vector<int>> words{{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 0}, {1, 1, 2}};
  for (const auto& w : words) {
    CycMatrix ma = CycMatrix::Identity(ra.dim(), ra.dim());
    CycMatrix mb = CycMatrix::Identity(rb.dim(), rb.dim());
    for (int k : w) {
      ma = ma * sa.t[static_cast<size_t>(k)];
      mb = mb * sb.t[static_cast<size_t>(k)];
    }
    CHECK(ma.trace() == mb.trace());
  }
}

TEST_CASE("tau twist preserves simplicity") {
  GroupParams gp(2, 2, 2);
  auto hp = HeckeParams::defaults(gp);
  for (const auto& shape : multipartitions(2, 2, 2)) {
    Rep rep = build_rep(shape, hp, false);
    Rep tw = tau_twist(rep);
    // commutant of the full generator set is scalars, before and after
    auto full_comm = [](const Rep& r) {
      CycMatrix sys(static_cast<Eigen::Index>(r.gens.size()) * r.dim() * r.dim(),
                    r.dim() * r.dim());
      // assemble [M, T_i] = 0 for all generators by brute force columns
      Eigen::Index d = r.dim(), vars = d * d, row0 = 0;
      for (const auto& g : r.gens) {
        for (Eigen::Index col = 0; col < vars; ++col) {
          CycMatrix m = CycMatrix::Constant(d, d, CycNum(0));
          m(col % d, col / d) = CycNum(1);
          CycMatrix c = m * g - g * m;
          for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
              sys(row0 + j * d + i, col) = c(i, j);
        }
        row0 += vars;
      }
      return exact_nullspace(sys).cols();
    };
    CHECK(full_comm(rep) == 1);
    CHECK(full_comm(tw) == 1);
  }
}

TEST_CASE("smash product census at (2,2,2)") {
  GroupParams gp(2, 2, 2);
  auto hp = HeckeParams::defaults(gp);
  auto census = smash_product_census(hp);
  CHECK(census.simples.size() == 4);
  CHECK(census.sum_dim_sq == 16);
  CHECK(census.expected_sum_dim_sq == 16);
  CHECK(census.ok());
}

TEST_CASE("smash product census at (2,2,3) and (3,3,2)") {
  {
    auto census = smash_product_census(HeckeParams::defaults(GroupParams(2, 2, 3)));
    CHECK(census.simples.size() == 5);
    CHECK(census.sum_dim_sq == 96);
    CHECK(census.ok());
  }
  {
    auto census = smash_product_census(HeckeParams::defaults(GroupParams(3, 3, 2)));
    CHECK(census.simples.size() == 3);
    CHECK(census.sum_dim_sq == 54);
    CHECK(census.ok());
  }
}

TEST_CASE("census at p = 1 reduces to the ordinary simple list") {
  auto census = smash_product_census(HeckeParams::defaults(GroupParams(2, 1, 2)));
  CHECK(census.simples.size() == multipartitions(2, 1, 2).size());
  CHECK(census.sum_dim_sq == 8);
  CHECK(census.ok());
}
