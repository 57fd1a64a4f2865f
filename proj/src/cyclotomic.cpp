#include "imprim/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace imprim {
namespace {

using Poly = std::vector<Rational>;  // dense, constant term first

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

void trim(Poly& p) {
  int d = degree(p);
  p.resize(static_cast<size_t>(d + 1 > 1 ? d + 1 : 1), Rational(0));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  int da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return Poly{Rational(0)};
  Poly c(static_cast<size_t>(da + db + 1), Rational(0));
  for (int i = 0; i <= da; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= db; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// a = q*b + r with deg r < deg b; b must be nonzero.
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  int db = degree(b);
  q.assign(1, Rational(0));
  if (degree(a) >= db) q.assign(static_cast<size_t>(degree(a) - db + 1), Rational(0));
  const Rational& lead = b[static_cast<size_t>(db)];
  while (degree(a) >= db) {
    int da = degree(a);
    Rational f = a[static_cast<size_t>(da)] / lead;
    q[static_cast<size_t>(da - db)] = f;
    for (int j = 0; j <= db; ++j) a[static_cast<size_t>(da - db + j)] -= f * b[static_cast<size_t>(j)];
  }
  trim(a);
  r = std::move(a);
}

Poly poly_mod(const Poly& a, const Poly& m) {
  Poly q, r;
  poly_divmod(a, m, q, r);
  return r;
}

// Extended Euclid: returns g = gcd(a, b) monic, with s*a + t*b = g.
Poly poly_ext_gcd(Poly a, Poly b, Poly& s, Poly& t) {
  Poly s0{Rational(1)}, s1{Rational(0)};
  Poly t0{Rational(0)}, t1{Rational(1)};
  trim(a);
  trim(b);
  while (degree(b) >= 0) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    Poly s2 = s0, t2 = t0;
    // s2 -= q*s1 ; t2 -= q*t1
    Poly qs = poly_mul(q, s1), qt = poly_mul(q, t1);
    s2.resize(std::max(s2.size(), qs.size()), Rational(0));
    t2.resize(std::max(t2.size(), qt.size()), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    trim(s2);
    trim(t2);
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // normalize to monic
  int d = degree(a);
  if (d >= 0 && a[static_cast<size_t>(d)] != 1) {
    Rational lead = a[static_cast<size_t>(d)];
    for (auto& c : a) c /= lead;
    for (auto& c : s0) c /= lead;
    for (auto& c : t0) c /= lead;
  }
  s = std::move(s0);
  t = std::move(t0);
  return a;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> ds;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

unsigned CycNum::euler_phi(unsigned N) {
  unsigned result = N, n = N;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& CycNum::cyclotomic_polynomial(unsigned N) {
  static std::map<unsigned, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;

  // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, computed recursively in
  // divisor order so all smaller factors are present.
  for (unsigned d : divisors(N)) {
    if (cache.count(d)) continue;
    Poly num(static_cast<size_t>(d + 1), Rational(0));
    num[0] = -1;
    num[d] = 1;
    for (unsigned e : divisors(d)) {
      if (e == d) continue;
      Poly q, r;
      poly_divmod(num, cache.at(e), q, r);
      num = std::move(q);
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(N);
}

CycNum::CycNum(unsigned order, std::vector<Rational> coeffs) : order_(order) {
  if (order == 0) fail(ErrorKind::BadParams, "cyclotomic order must be >= 1");
  const Poly& phi = cyclotomic_polynomial(order);
  coeffs_ = poly_mod(coeffs, phi);
  coeffs_.resize(euler_phi(order), Rational(0));
}

CycNum CycNum::root_of_unity(unsigned N, long k) {
  if (N == 0) fail(ErrorKind::BadParams, "cyclotomic order must be >= 1");
  long kk = k % static_cast<long>(N);
  if (kk < 0) kk += N;
  std::vector<Rational> raw(static_cast<size_t>(kk + 1), Rational(0));
  raw[static_cast<size_t>(kk)] = 1;
  return CycNum(N, std::move(raw));
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CycNum::to_rational() const {
  if (!is_rational())
    fail(ErrorKind::BadParams, "cyclotomic number is not rational: " + to_string());
  return coeffs_[0];
}

int CycNum::support() const {
  int s = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++s;
  return s;
}

CycNum CycNum::lifted_to(unsigned M) const {
  if (M == order_) return *this;
  if (M % order_ != 0)
    fail(ErrorKind::BadParams, "cyclotomic lift requires order | target");
  unsigned step = M / order_;
  std::vector<Rational> raw(static_cast<size_t>(coeffs_.size() - 1) * step + 1,
                            Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  return CycNum(M, std::move(raw));
}

namespace {
unsigned common_order(const CycNum& a, const CycNum& b) {
  return static_cast<unsigned>(
      std::lcm<unsigned long>(a.order(), b.order()));
}
}  // namespace

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  unsigned M = common_order(*this, o);
  *this = lifted_to(M);
  CycNum ob = o.lifted_to(M);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += ob.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  unsigned M = common_order(*this, o);
  *this = lifted_to(M);
  CycNum ob = o.lifted_to(M);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= ob.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  unsigned M = common_order(*this, o);
  CycNum a = lifted_to(M), b = o.lifted_to(M);
  *this = CycNum(M, poly_mul(a.coeffs_, b.coeffs_));
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero cyclotomic number");
  // Phi_N is irreducible over Q, so gcd(f, Phi_N) = 1 for nonzero residues
  // and the Bezout coefficient of f is the inverse.
  Poly s, t;
  Poly g = poly_ext_gcd(coeffs_, cyclotomic_polynomial(order_), s, t);
  if (degree(g) != 0)
    fail(ErrorKind::DivisionByZero, "non-unit residue modulo Phi_N");
  return CycNum(order_, std::move(s));
}

CycNum& CycNum::operator/=(const CycNum& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  unsigned M = common_order(*this, o);
  CycNum b = o.lifted_to(M);
  *this = lifted_to(M) * b.inverse();
  return *this;
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum acc(1), base = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) acc *= base;
    base *= base;
    u >>= 1;
  }
  return acc;
}

CycNum CycNum::galois(long j) const {
  unsigned N = order_;
  long jj = j % static_cast<long>(N);
  if (jj < 0) jj += N;
  if (std::gcd<long>(jj, N) != 1)
    fail(ErrorKind::BadParams, "galois exponent not coprime to order");
  std::vector<Rational> raw(static_cast<size_t>(N) == 1 ? 1 : N, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    raw[(i * static_cast<size_t>(jj)) % N] += coeffs_[i];
  }
  return CycNum(N, std::move(raw));
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  unsigned M = common_order(a, b);
  return a.lifted_to(M).coeffs_ == b.lifted_to(M).coeffs_;
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
  unsigned M = common_order(a, b);
  CycNum la = a.lifted_to(M), lb = b.lifted_to(M);
  for (size_t i = 0; i < la.coeffs_.size(); ++i) {
    if (la.coeffs_[i] < lb.coeffs_[i]) return -1;
    if (lb.coeffs_[i] < la.coeffs_[i]) return 1;
  }
  return 0;
}

std::string CycNum::to_string() const {
  if (is_rational()) return rational_to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0 && i > 0) {
      // keep the sign attached for leading non-constant terms
    }
    first = false;
    if (i == 0) {
      os << rational_to_string(c);
    } else {
      if (c != 1 && c != -1)
        os << rational_to_string(c < 0 ? -c : c) << "*";
      else if (c == -1)
        os << "-";
      os << "z" << order_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op) {
  switch (op) {
    case CycOp::Add: return a + b;
    case CycOp::Sub: return a - b;
    case CycOp::Mul: return a * b;
    case CycOp::Div: return a / b;
  }
  fail(ErrorKind::BadParams, "unreachable");
}

}  // namespace imprim
