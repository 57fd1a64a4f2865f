#include <doctest.h>

#include <random>

#include "imprim/cyclotomic.hpp"

using imprim::CycNum;
using imprim::CycOp;
using imprim::Rational;

namespace {

CycNum zeta(unsigned N, long k = 1) { return CycNum::root_of_unity(N, k); }

// deterministic random element of Q(zeta_N) with small coefficients
CycNum random_cyc(std::mt19937& rng, unsigned N) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c(CycNum::euler_phi(N));
  for (auto& x : c) x = imprim::make_rational(num(rng), den(rng));
  return CycNum(N, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  using P = std::vector<Rational>;
  CHECK(CycNum::cyclotomic_polynomial(1) == P{-1, 1});
  CHECK(CycNum::cyclotomic_polynomial(2) == P{1, 1});
  CHECK(CycNum::cyclotomic_polynomial(4) == P{1, 0, 1});
  CHECK(CycNum::cyclotomic_polynomial(6) == P{1, -1, 1});
  CHECK(CycNum::cyclotomic_polynomial(12) == P{1, 0, -1, 0, 1});
  CHECK(CycNum::euler_phi(1) == 1);
  CHECK(CycNum::euler_phi(12) == 4);
}

TEST_CASE("roots of unity") {
  CHECK(zeta(4, 2) == CycNum(-1));
  CHECK(zeta(3, 1) + zeta(3, 2) == CycNum(-1));
  CHECK(zeta(1, 5) == CycNum(1));
  CHECK(zeta(4) * zeta(4) == CycNum(-1));
  CHECK(zeta(5).pow(5) == CycNum(1));
  // k is reduced mod N
  CHECK(zeta(6, 13) == zeta(6, 1));
  CHECK(zeta(6, -1) == zeta(6, 5));
}

TEST_CASE("mixed-order arithmetic lands in the lcm field") {
  CycNum a = zeta(6), b = zeta(4);
  CHECK((a * b).order() == 12);
  CHECK((a + b).order() == 12);
  CHECK(a * b == zeta(12, 2) * zeta(12, 3));
}

TEST_CASE("inverses of roots of unity") {
  CHECK(CycNum(1) / zeta(5) == zeta(5, 4));
  CHECK(zeta(7).inverse() * zeta(7) == CycNum(1));
  CHECK_THROWS_AS(CycNum(1) / CycNum(0), imprim::Error);
}

TEST_CASE("field axioms on sampled triples") {
  std::mt19937 rng(20240811);
  for (unsigned N : {1u, 3u, 4u, 6u, 8u, 12u}) {
    for (int trial = 0; trial < 12; ++trial) {
      CycNum a = random_cyc(rng, N), b = random_cyc(rng, N), c = random_cyc(rng, N);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1));
    }
  }
}

TEST_CASE("arithmetic commutes with field embeddings") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    CycNum a = random_cyc(rng, 6), b = random_cyc(rng, 6);
    for (auto op : {CycOp::Add, CycOp::Sub, CycOp::Mul}) {
      CHECK(cyc_arith(a, b, op).lifted_to(24) ==
            cyc_arith(a.lifted_to(24), b.lifted_to(24), op));
    }
    if (!b.is_zero())
      CHECK((a / b).lifted_to(24) == a.lifted_to(24) / b.lifted_to(24));
  }
}

TEST_CASE("galois action and conjugation") {
  CHECK(zeta(5).conj() == zeta(5, 4));
  CHECK(zeta(8, 3).galois(3) == zeta(8, 9 % 8));
  CycNum x = zeta(12) + CycNum(2);
  CHECK(x.conj().conj() == x);
  CHECK((zeta(5) * zeta(5).conj()) == CycNum(1));
}

TEST_CASE("rationality detection and printing") {
  CHECK(CycNum(Rational(3, 4)).is_rational());
  CHECK(zeta(4, 2).is_rational());
  CHECK(zeta(4, 2).to_rational() == Rational(-1));
  CHECK(!zeta(4).is_rational());
  CHECK(CycNum(0).is_zero());
  CHECK((zeta(3) - zeta(3)).is_zero());
}
