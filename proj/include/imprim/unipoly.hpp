#pragma once

#include <string>
#include <vector>

#include "imprim/cyclotomic.hpp"

namespace imprim {

/// Dense univariate polynomial over Q(zeta), constant term first.
/// Normal form: no trailing zero coefficients (zero polynomial is {}).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<CycNum> coeffs);
  static UniPoly constant(const CycNum& c);
  static UniPoly monomial(const CycNum& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  const std::vector<CycNum>& coeffs() const { return c_; }
  CycNum coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : CycNum(0);
  }
  CycNum leading() const;
  /// Smallest exponent with nonzero coefficient (0 for the zero polynomial).
  int valuation() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly scaled(const CycNum& s) const;
  UniPoly pow(unsigned e) const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  /// Division with remainder; divisor must be nonzero.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  /// Monic gcd.
  static UniPoly gcd(UniPoly a, UniPoly b);

  CycNum eval(const CycNum& x) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<CycNum> c_;
};

/// Rational function num/den over Q(zeta), kept gcd-reduced with monic
/// denominator; supports the exact Molien-series manipulations.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UniPoly::constant(CycNum(1))) {}
  RatFunc(UniPoly num, UniPoly den);
  static RatFunc from_poly(const UniPoly& p) {
    return RatFunc(p, UniPoly::constant(CycNum(1)));
  }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Returns the numerator of a polynomial-valued function (den must be 1).
  UniPoly to_poly() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc scaled(const CycNum& s) const;

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

 private:
  void reduce();
  UniPoly num_, den_;
};

}  // namespace imprim
