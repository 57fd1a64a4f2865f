#include "imprim/unipoly.hpp"

#include <sstream>

#include "imprim/errors.hpp"

namespace imprim {

namespace {
void trim(std::vector<CycNum>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}
}  // namespace

UniPoly::UniPoly(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) { trim(c_); }

UniPoly UniPoly::constant(const CycNum& c) {
  return UniPoly(std::vector<CycNum>{c});
}

UniPoly UniPoly::monomial(const CycNum& c, int degree) {
  std::vector<CycNum> v(static_cast<size_t>(degree) + 1, CycNum(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

CycNum UniPoly::leading() const {
  return c_.empty() ? CycNum(0) : c_.back();
}

int UniPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return 0;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<CycNum> out(std::max(c_.size(), o.c_.size()), CycNum(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<CycNum> out = c_;
  for (auto& x : out) x = -x;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<CycNum> out(c_.size() + o.c_.size() - 1, CycNum(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const CycNum& s) const {
  std::vector<CycNum> out = c_;
  for (auto& x : out) x *= s;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly acc = constant(CycNum(1)), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<CycNum> rem = a.c_;
  int db = b.degree();
  CycNum lead_inv = b.c_.back().inverse();
  std::vector<CycNum> quot;
  if (a.degree() >= db) quot.assign(static_cast<size_t>(a.degree() - db) + 1, CycNum(0));
  while (true) {
    trim(rem);
    int da = static_cast<int>(rem.size()) - 1;
    if (da < db) break;
    CycNum f = rem.back() * lead_inv;
    quot[static_cast<size_t>(da - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(da - db + j)] -= f * b.c_[static_cast<size_t>(j)];
  }
  q = UniPoly(std::move(quot));
  r = UniPoly(std::move(rem));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(a.leading().inverse());
  return a;
}

CycNum UniPoly::eval(const CycNum& x) const {
  CycNum acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != CycNum(1)) {
      bool simple = c_[i].is_rational();
      if (!simple) os << "(";
      os << c_[i].to_string();
      if (!simple) os << ")";
      if (i > 0) os << "*";
    }
    if (i == 1) os << var;
    if (i > 1) os << var << "^" << i;
  }
  return os.str();
}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = UniPoly::constant(CycNum(1));
    return;
  }
  UniPoly g = UniPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    UniPoly q, r;
    UniPoly::divmod(num_, g, q, r);
    num_ = q;
    UniPoly::divmod(den_, g, q, r);
    den_ = q;
  }
  CycNum lead = den_.leading();
  if (lead != CycNum(1)) {
    CycNum inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

UniPoly RatFunc::to_poly() const {
  if (!is_polynomial())
    fail(ErrorKind::InconsistentData, "rational function is not a polynomial");
  return num_.scaled(den_.coeff(0).inverse());
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.num_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::scaled(const CycNum& s) const {
  return RatFunc(num_.scaled(s), den_);
}

}  // namespace imprim
