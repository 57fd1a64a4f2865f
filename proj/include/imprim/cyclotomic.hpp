#pragma once

#include <compare>
#include <string>
#include <vector>

#include "imprim/rational.hpp"

namespace imprim {

/// An element of the cyclotomic field Q(zeta_N), stored canonically as a
/// residue in the power basis of Z[x]/(Phi_N(x)).  Two elements of the same
/// order are equal iff their coefficient vectors are equal; elements of
/// different orders are compared after lifting to the lcm field via
/// zeta_N -> zeta_M^(M/N).
class CycNum {
 public:
  CycNum() : order_(1), coeffs_(1, Rational(0)) {}
  CycNum(int v) : order_(1), coeffs_(1, Rational(v)) {}        // NOLINT
  CycNum(long v) : order_(1), coeffs_(1, Rational(v)) {}       // NOLINT
  CycNum(const Rational& v) : order_(1), coeffs_(1, v) {}      // NOLINT
  CycNum(unsigned order, std::vector<Rational> coeffs);

  /// zeta_N^k, reduced mod Phi_N; result has field order N.
  static CycNum root_of_unity(unsigned N, long k);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when the element lies in Q (all power-basis coefficients beyond
  /// the constant term vanish).
  bool is_rational() const;
  Rational to_rational() const;  // throws BadParams if not rational

  /// Number of nonzero power-basis coefficients (pivot heuristic).
  int support() const;

  CycNum lifted_to(unsigned M) const;  // requires order | M

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum inverse() const;  // throws DivisionByZero on 0
  CycNum pow(long e) const;

  /// Galois action zeta_N -> zeta_N^j (gcd(j, N) must be 1).
  CycNum galois(long j) const;
  /// Complex conjugation, i.e. galois(-1).
  CycNum conj() const { return galois(-1); }

  /// Deterministic total order (by lifted coefficient vectors); used only to
  /// sort spectra and map keys, it has no arithmetic meaning.
  static int compare(const CycNum& a, const CycNum& b);

  std::string to_string() const;

  static unsigned euler_phi(unsigned N);
  /// Monic coefficient vector (constant term first) of Phi_N; cached.
  static const std::vector<Rational>& cyclotomic_polynomial(unsigned N);

 private:
  unsigned order_;
  std::vector<Rational> coeffs_;  // length euler_phi(order_)
};

inline bool operator<(const CycNum& a, const CycNum& b) {
  return CycNum::compare(a, b) < 0;
}

enum class CycOp { Add, Sub, Mul, Div };

/// Dispatch form of the arithmetic, mirroring the operator set.
CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op);

}  // namespace imprim
