#include "imprim/refgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace imprim {

std::string GroupParams::label() const {
  std::ostringstream os;
  os << "G(" << r << "," << p << "," << n << ")";
  return os.str();
}

MonomialMatrix::MonomialMatrix(std::vector<int> perm, std::vector<int> exps,
                               unsigned r)
    : perm_(std::move(perm)), exps_(std::move(exps)), r_(r) {
  if (perm_.size() != exps_.size())
    fail(ErrorKind::BadParams, "perm/exps size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (int v : perm_) {
    if (v < 0 || v >= static_cast<int>(perm_.size()) || seen[v])
      fail(ErrorKind::BadParams, "not a permutation");
    seen[v] = true;
  }
  for (int& e : exps_) {
    e %= static_cast<int>(r_);
    if (e < 0) e += r_;
  }
}

MonomialMatrix MonomialMatrix::identity(unsigned n, unsigned r) {
  std::vector<int> perm(n), exps(n, 0);
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialMatrix(std::move(perm), std::move(exps), r);
}

MonomialMatrix MonomialMatrix::diag_unit(unsigned n, unsigned r, int i, int k) {
  MonomialMatrix m = identity(n, r);
  m.exps_[i] = ((k % static_cast<int>(r)) + r) % r;
  return m;
}

MonomialMatrix MonomialMatrix::difference_reflection(unsigned n, unsigned r,
                                                     int i, int j, int k) {
  std::vector<int> perm(n), exps(n, 0);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i], perm[j]);
  exps[j] = ((k % static_cast<int>(r)) + r) % r;
  exps[i] = (r - static_cast<unsigned>(exps[j])) % r;
  return MonomialMatrix(std::move(perm), std::move(exps), r);
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  // (g*h) eps_i = g (zeta^{h.exps[i]} eps_{h.perm[i]})
  if (r_ != o.r_ || n() != o.n())
    fail(ErrorKind::DimensionMismatch, "monomial matrix product");
  std::vector<int> perm(n()), exps(n());
  for (unsigned i = 0; i < n(); ++i) {
    perm[i] = perm_[o.perm_[i]];
    exps[i] = (o.exps_[i] + exps_[o.perm_[i]]) % static_cast<int>(r_);
  }
  return MonomialMatrix(std::move(perm), std::move(exps), r_);
}

MonomialMatrix MonomialMatrix::inverse() const {
  std::vector<int> perm(n()), exps(n());
  for (unsigned i = 0; i < n(); ++i) perm[perm_[i]] = static_cast<int>(i);
  for (unsigned i = 0; i < n(); ++i)
    exps[perm_[i]] = (static_cast<int>(r_) - exps_[i]) % static_cast<int>(r_);
  return MonomialMatrix(std::move(perm), std::move(exps), r_);
}

MonomialMatrix MonomialMatrix::pow(long e) const {
  MonomialMatrix base = e < 0 ? inverse() : *this;
  unsigned long u = static_cast<unsigned long>(e < 0 ? -e : e);
  MonomialMatrix acc = identity(n(), r_);
  while (u) {
    if (u & 1) acc = acc * base;
    base = base * base;
    u >>= 1;
  }
  return acc;
}

int MonomialMatrix::exponent_sum() const {
  long s = 0;
  for (int e : exps_) s += e;
  return static_cast<int>(s % r_);
}

int MonomialMatrix::perm_sign() const {
  std::vector<bool> seen(perm_.size(), false);
  int sign = 1;
  for (size_t i = 0; i < perm_.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<size_t>(perm_[j]);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

CycNum MonomialMatrix::det() const {
  return CycNum(perm_sign()) * CycNum::root_of_unity(r_, exponent_sum());
}

bool MonomialMatrix::is_identity() const {
  for (size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i) || exps_[i] != 0) return false;
  return true;
}

CycMatrix MonomialMatrix::to_dense() const {
  CycMatrix m = CycMatrix::Constant(n(), n(), CycNum(0));
  for (unsigned i = 0; i < n(); ++i)
    m(perm_[i], i) = CycNum::root_of_unity(r_, exps_[i]);
  return m;
}

std::string MonomialMatrix::to_string() const {
  std::ostringstream os;
  os << "perm[";
  for (size_t i = 0; i < perm_.size(); ++i)
    os << (i ? "," : "") << perm_[i] + 1;
  os << "] exps[";
  for (size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
  os << "]";
  return os.str();
}

std::string Hyperplane::to_string() const {
  std::ostringstream os;
  if (kind == Kind::Coordinate)
    os << "x" << i + 1 << "=0";
  else
    os << "x" << i + 1 << "=z^" << k << "*x" << j + 1;
  return os.str();
}

std::vector<MonomialMatrix> generators(const GroupParams& gp, Which which) {
  gp.validate();
  std::vector<MonomialMatrix> S;
  S.push_back(MonomialMatrix::diag_unit(gp.n, gp.r, 0, 1));  // S_1
  for (unsigned i = 2; i <= gp.n; ++i)
    S.push_back(MonomialMatrix::difference_reflection(
        gp.n, gp.r, static_cast<int>(i) - 2, static_cast<int>(i) - 1, 0));
  if (which == Which::Full) return S;
  std::vector<MonomialMatrix> sub;
  sub.push_back(S[0].pow(gp.p));  // s_0 = S_1^p
  // s_1 = S_1^{-1} S_2 S_1, matching the algebra generator t_1 = T_1^{-1}T_2T_1.
  // (The variant S_1 S_2 S_1 has exponent sum 2 and generates the wrong
  // subgroup unless p | 2.)
  if (gp.n >= 2) sub.push_back(S[0].inverse() * S[1] * S[0]);
  for (size_t i = 1; i < S.size(); ++i) sub.push_back(S[i]);
  return sub;
}

bool is_member(const MonomialMatrix& g, const GroupParams& gp) {
  long s = 0;
  for (int e : g.exps()) s += e;
  return s % gp.p == 0;
}

std::vector<MonomialMatrix> enumerate(const GroupParams& gp, Which which,
                                      unsigned long cap) {
  gp.validate();
  unsigned long size = 1;
  for (unsigned i = 0; i < gp.n; ++i) {
    size *= gp.r;
    if (size > cap) fail(ErrorKind::CapExceeded, "group too large");
  }
  for (unsigned i = 2; i <= gp.n; ++i) {
    size *= i;
    if (size > cap) fail(ErrorKind::CapExceeded, "group too large");
  }

  std::vector<int> perm(gp.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<MonomialMatrix> out;
  do {
    std::vector<int> exps(gp.n, 0);
    while (true) {
      MonomialMatrix g(perm, exps, gp.r);
      if (which == Which::Full || is_member(g, gp)) out.push_back(std::move(g));
      // odometer over exponent vectors
      unsigned pos = 0;
      while (pos < gp.n) {
        if (++exps[pos] < static_cast<int>(gp.r)) break;
        exps[pos] = 0;
        ++pos;
      }
      if (pos == gp.n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<MonomialMatrix> closure(const std::vector<MonomialMatrix>& gens,
                                 unsigned long cap) {
  std::set<MonomialMatrix> seen(gens.begin(), gens.end());
  if (!gens.empty())
    seen.insert(MonomialMatrix::identity(gens[0].n(), gens[0].r()));
  std::vector<MonomialMatrix> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<MonomialMatrix> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        MonomialMatrix h = g * s;
        if (seen.insert(h).second) {
          if (seen.size() > cap) fail(ErrorKind::CapExceeded, "closure too large");
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

std::vector<std::pair<MonomialMatrix, Hyperplane>> reflections(
    const GroupParams& gp, Which which) {
  gp.validate();
  std::vector<std::pair<MonomialMatrix, Hyperplane>> out;
  unsigned step = which == Which::Full ? 1 : gp.p;
  for (unsigned i = 0; i < gp.n; ++i) {
    for (unsigned a = step; a < gp.r; a += step) {
      Hyperplane h{Hyperplane::Kind::Coordinate, static_cast<int>(i), 0, 0,
                   which == Which::Full ? gp.r : gp.d()};
      out.emplace_back(
          MonomialMatrix::diag_unit(gp.n, gp.r, static_cast<int>(i),
                                    static_cast<int>(a)),
          h);
    }
  }
  for (unsigned i = 0; i < gp.n; ++i) {
    for (unsigned j = i + 1; j < gp.n; ++j) {
      for (unsigned k = 0; k < gp.r; ++k) {
        Hyperplane h{Hyperplane::Kind::Difference, static_cast<int>(i),
                     static_cast<int>(j), static_cast<int>(k), 2};
        out.emplace_back(MonomialMatrix::difference_reflection(
                             gp.n, gp.r, static_cast<int>(i),
                             static_cast<int>(j), static_cast<int>(k)),
                         h);
      }
    }
  }
  return out;
}

Hyperplane hyperplane_image(const Hyperplane& h, const MonomialMatrix& g,
                            const GroupParams& gp) {
  const auto& perm = g.perm();
  const auto& exps = g.exps();
  int r = static_cast<int>(gp.r);
  if (h.kind == Hyperplane::Kind::Coordinate) {
    Hyperplane out = h;
    out.i = perm[h.i];
    return out;
  }
  // x_i - z^k x_j = 0 maps to x_{perm(i)} = z^{k - e_j + e_i} x_{perm(j)}
  int pi = perm[h.i], pj = perm[h.j];
  int kk = ((h.k - exps[h.j] + exps[h.i]) % r + r) % r;
  Hyperplane out = h;
  if (pi < pj) {
    out.i = pi;
    out.j = pj;
    out.k = kk;
  } else {
    out.i = pj;
    out.j = pi;
    out.k = (r - kk) % r;
  }
  return out;
}

std::vector<HyperplaneOrbit> hyperplane_orbits(const GroupParams& gp,
                                               Which which) {
  auto refl = reflections(gp, which);
  std::set<Hyperplane> all;
  for (auto& [g, h] : refl) all.insert(h);
  auto gens = generators(gp, which);

  std::vector<HyperplaneOrbit> orbits;
  std::set<Hyperplane> assigned;
  for (const auto& h0 : all) {
    if (assigned.count(h0)) continue;
    std::set<Hyperplane> orbit{h0};
    std::vector<Hyperplane> frontier{h0};
    while (!frontier.empty()) {
      std::vector<Hyperplane> next;
      for (const auto& h : frontier)
        for (const auto& g : gens) {
          Hyperplane img = hyperplane_image(h, g, gp);
          if (orbit.insert(img).second) next.push_back(img);
        }
      frontier = std::move(next);
    }
    HyperplaneOrbit o;
    o.members.assign(orbit.begin(), orbit.end());
    o.is_coordinate_orbit = h0.kind == Hyperplane::Kind::Coordinate;
    orbits.push_back(std::move(o));
    assigned.insert(orbit.begin(), orbit.end());
  }
  return orbits;
}

std::pair<CycNum, MonomialMatrix> tau_on_group_element(const MonomialMatrix& g,
                                                       unsigned p,
                                                       const CycNum& xi) {
  long s = 0;
  for (int e : g.exps()) s += e;
  return {xi.pow(s % static_cast<long>(p)), g};
}

std::vector<int> bubble_sort_word(const std::vector<int>& perm) {
  // Sort a copy to the identity by adjacent swaps; each swap of positions
  // (i-1, i) contributes the generator index i+1.  Applying the recorded
  // letters left-to-right reproduces perm.
  std::vector<int> a = perm;
  std::vector<int> letters;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 1; i < a.size(); ++i) {
      if (a[i - 1] > a[i]) {
        std::swap(a[i - 1], a[i]);
        letters.push_back(static_cast<int>(i) + 1);
        moved = true;
      }
    }
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

GroupWord to_word(const MonomialMatrix& g) {
  GroupWord w;
  unsigned n = g.n();
  // g = D * P with P the bare permutation and D diagonal with
  // D.exps[perm(i)] = g.exps[i].
  std::vector<int> dexp(n, 0);
  for (unsigned i = 0; i < n; ++i) dexp[g.perm()[i]] = g.exps()[i];
  for (unsigned j = 0; j < n; ++j) {
    if (dexp[j] == 0) continue;
    // diag twist at position j: conjugate S_1^dexp by the transposition
    // chain moving position 0 to position j.
    for (unsigned t = j; t >= 1; --t) w.emplace_back(static_cast<int>(t) + 1, 1);
    w.emplace_back(1, dexp[j]);
    for (unsigned t = 1; t <= j; ++t) w.emplace_back(static_cast<int>(t) + 1, 1);
  }
  for (int letter : bubble_sort_word(g.perm())) w.emplace_back(letter, 1);
  return w;
}

MonomialMatrix eval_word(const GroupWord& w, const GroupParams& gp) {
  auto S = generators(gp, Which::Full);
  MonomialMatrix acc = MonomialMatrix::identity(gp.n, gp.r);
  for (auto& [gen, pw] : w) {
    if (gen < 1 || gen > static_cast<int>(gp.n))
      fail(ErrorKind::BadParams, "word letter out of range");
    acc = acc * S[static_cast<size_t>(gen - 1)].pow(pw);
  }
  return acc;
}

std::vector<std::vector<MonomialMatrix>> conjugacy_classes(
    const GroupParams& gp, Which which) {
  auto elems = enumerate(gp, which);
  std::set<MonomialMatrix> remaining(elems.begin(), elems.end());
  std::vector<std::vector<MonomialMatrix>> classes;
  while (!remaining.empty()) {
    MonomialMatrix rep = *remaining.begin();
    std::set<MonomialMatrix> cls;
    for (const auto& h : elems) cls.insert(h * rep * h.inverse());
    classes.emplace_back(cls.begin(), cls.end());
    for (const auto& x : cls) remaining.erase(x);
  }
  return classes;
}

}  // namespace imprim
