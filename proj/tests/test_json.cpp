#include <doctest.h>

#include <random>

#include "imprim/json_io.hpp"

using namespace imprim;

TEST_CASE("cyclotomic JSON round trip on random elements") {
  std::mt19937 rng(314);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (unsigned N : {1u, 2u, 4u, 6u, 12u}) {
    for (int t = 0; t < 8; ++t) {
      std::vector<Rational> coeffs(CycNum::euler_phi(N));
      for (auto& c : coeffs) c = make_rational(num(rng), den(rng));
      CycNum x(N, coeffs);
      Json j = cyc_to_json(x);
      CHECK(j.at("order") == N);
      CHECK(cyc_from_json(j) == x);
    }
  }
  // the documented shape: {"order": 4, "coeffs": ["0", "1"]} is zeta_4
  Json j{{"order", 4}, {"coeffs", {"0", "1"}}};
  CHECK(cyc_from_json(j) == CycNum::root_of_unity(4, 1));
}

TEST_CASE("group element JSON uses 1-indexed image lists") {
  MonomialMatrix g({1, 0}, {1, 0}, 2);
  Json j = group_element_to_json(g);
  CHECK(j.at("perm") == Json::array({2, 1}));
  CHECK(j.at("exps") == Json::array({1, 0}));
  CHECK(group_element_from_json(j, 2) == g);
}

TEST_CASE("multipartition and tableau JSON") {
  MultiPartition mp(2, 1, {{2, 1}, {1}});
  Json j = multipartition_to_json(mp);
  CHECK(j == Json::array({{2, 1}, {1}}));
  CHECK(multipartition_from_json(j, 2, 1) == mp);

  auto ts = standard_tableaux(mp);
  Json tj = tableau_to_json(ts.front());
  // entries fill the component shapes as row matrices
  REQUIRE(tj.size() == 2);
  CHECK(tj[0].size() == 2);
  CHECK(tj[0][0].size() == 2);
  // every entry 1..n appears exactly once
  std::vector<int> seen;
  for (const auto& comp : tj)
    for (const auto& row : comp)
      for (const auto& e : row) seen.push_back(e.get<int>());
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("rep JSON is deterministic") {
  auto hp = HeckeParams::defaults(GroupParams(2, 2, 2));
  Rep rep = build_rep(MultiPartition(2, 1, {{1}, {1}}), hp);
  std::string a = rep_to_json(rep).dump();
  std::string b = rep_to_json(build_rep(MultiPartition(2, 1, {{1}, {1}}), hp)).dump();
  CHECK(a == b);
  CHECK(a.find("\"generators\"") != std::string::npos);
}
