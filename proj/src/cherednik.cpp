#include "imprim/cherednik.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace imprim {

// ---------------------------------------------------------------- polynomials

Poly Poly::constant(unsigned nvars, const CycNum& c) {
  Poly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

Poly Poly::variable(unsigned nvars, unsigned i) {
  Poly p(nvars);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.add_term(e, CycNum(1));
  return p;
}

Poly Poly::monomial(unsigned nvars, std::vector<int> exps, const CycNum& c) {
  Poly p(nvars);
  p.add_term(exps, c);
  return p;
}

int Poly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

CycNum Poly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? CycNum(0) : it->second;
}

void Poly::add_term(const std::vector<int>& exps, const CycNum& c) {
  if (exps.size() != nvars_) fail(ErrorKind::DimensionMismatch, "poly term arity");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(exps, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e = e1;
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

Poly Poly::scaled(const CycNum& s) const {
  Poly out(nvars_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

Poly Poly::derivative(unsigned i) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    std::vector<int> e2 = e;
    e2[i] -= 1;
    out.add_term(e2, c * CycNum(e[i]));
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) {
        os << "*x" << i + 1;
        if (e[i] > 1) os << "^" << e[i];
      }
  }
  return os.str();
}

Poly act(const MonomialMatrix& g, const Poly& f) {
  // g . x_j = zeta^{-exps[j]} x_{perm[j]}
  unsigned n = g.n();
  if (f.nvars() != n) fail(ErrorKind::DimensionMismatch, "act arity");
  Poly out(n);
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> e2(n, 0);
    long twist = 0;
    for (unsigned j = 0; j < n; ++j) {
      e2[static_cast<size_t>(g.perm()[j])] = e[j];
      twist -= static_cast<long>(g.exps()[j]) * e[j];
    }
    out.add_term(e2, c * CycNum::root_of_unity(g.r(), twist));
  }
  return out;
}

Poly divide_by_linear(const Poly& f, const std::vector<CycNum>& linear) {
  unsigned n = f.nvars();
  unsigned pivot = n;
  for (unsigned i = 0; i < n; ++i)
    if (!linear[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == n) fail(ErrorKind::BadParams, "zero linear form");
  CycNum cinv = linear[pivot].inverse();

  // synthetic division in the pivot variable, top degree first
  Poly rem = f;
  Poly quot(n);
  int maxdeg = 0;
  for (const auto& [e, c] : rem.terms()) maxdeg = std::max(maxdeg, e[pivot]);
  for (int k = maxdeg; k >= 1; --k) {
    // collect the level-k slice
    std::vector<std::pair<std::vector<int>, CycNum>> slice;
    for (const auto& [e, c] : rem.terms())
      if (e[pivot] == k) slice.emplace_back(e, c);
    for (auto& [e, c] : slice) {
      std::vector<int> qe = e;
      qe[pivot] -= 1;
      CycNum qc = c * cinv;
      quot.add_term(qe, qc);
      // rem -= qc * x^qe * linear
      for (unsigned j = 0; j < n; ++j) {
        if (linear[j].is_zero()) continue;
        std::vector<int> te = qe;
        te[j] += 1;
        rem.add_term(te, -qc * linear[j]);
      }
    }
  }
  if (!rem.is_zero())
    fail(ErrorKind::DivisibilityFailure, "polynomial not divisible by alpha_H");
  return quot;
}

// ---------------------------------------------------------------- group algebra

void GroupAlgElt::add_term(const MonomialMatrix& g, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CycNum GroupAlgElt::coeff(const MonomialMatrix& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? CycNum(0) : it->second;
}

GroupAlgElt GroupAlgElt::operator+(const GroupAlgElt& o) const {
  GroupAlgElt out = *this;
  for (const auto& [g, c] : o.terms_) out.add_term(g, c);
  return out;
}

GroupAlgElt GroupAlgElt::operator*(const GroupAlgElt& o) const {
  GroupAlgElt out;
  for (const auto& [g1, c1] : terms_)
    for (const auto& [g2, c2] : o.terms_) out.add_term(g1 * g2, c1 * c2);
  return out;
}

GroupAlgElt GroupAlgElt::scaled(const CycNum& s) const {
  GroupAlgElt out;
  for (const auto& [g, c] : terms_) out.add_term(g, c * s);
  return out;
}

Poly GroupAlgElt::apply(const Poly& f) const {
  Poly out(f.nvars());
  for (const auto& [g, c] : terms_) out = out + act(g, f).scaled(c);
  return out;
}

GroupAlgElt GroupAlgElt::tau_applied(unsigned p, const CycNum& xi) const {
  GroupAlgElt out;
  for (const auto& [g, c] : terms_) {
    long s = 0;
    for (int e : g.exps()) s += e;
    out.add_term(g, c * xi.pow(s % static_cast<long>(p)));
  }
  return out;
}

// ---------------------------------------------------------------- arrangement

Arrangement make_arrangement(const GroupParams& gp, Which which) {
  Arrangement arr;
  arr.gp = gp;
  arr.which = which;
  auto refl = reflections(gp, which);
  auto orbits = hyperplane_orbits(gp, which);

  std::map<Hyperplane, size_t> hyper_index;
  for (auto& [g, h] : refl) {
    if (hyper_index.count(h)) {
      size_t idx = hyper_index[h];
      arr.hyperplanes[idx].stab.push_back(g);
      arr.hyperplanes[idx].stab_det.push_back(g.det());
      continue;
    }
    HyperplaneData hd;
    hd.h = h;
    hd.e = h.e_H;
    hd.alpha.assign(gp.n, CycNum(0));
    hd.v_H.assign(gp.n, CycNum(0));
    if (h.kind == Hyperplane::Kind::Coordinate) {
      hd.alpha[h.i] = CycNum(1);
      hd.v_H[h.i] = CycNum(1);
      hd.alpha_v_pairing = CycNum(1);
    } else {
      hd.alpha[h.i] = CycNum(1);
      hd.alpha[h.j] = -CycNum::root_of_unity(gp.r, h.k);
      hd.v_H[h.i] = CycNum(1);
      hd.v_H[h.j] = -CycNum::root_of_unity(gp.r, -h.k);
      hd.alpha_v_pairing = CycNum(2);
    }
    hd.stab.push_back(g);
    hd.stab_det.push_back(g.det());
    hyper_index[h] = arr.hyperplanes.size();
    arr.hyperplanes.push_back(std::move(hd));
  }

  arr.orbit_e.assign(orbits.size(), 0);
  for (size_t o = 0; o < orbits.size(); ++o) {
    if (orbits[o].is_coordinate_orbit) arr.coordinate_orbit = static_cast<int>(o);
    for (const auto& h : orbits[o].members) {
      auto it = hyper_index.find(h);
      if (it == hyper_index.end())
        fail(ErrorKind::InconsistentData, "orbit hyperplane missing");
      arr.hyperplanes[it->second].orbit = static_cast<int>(o);
      arr.orbit_e[o] = arr.hyperplanes[it->second].e;
    }
  }
  for (const auto& hd : arr.hyperplanes)
    if (hd.stab.size() + 1 != hd.e)
      fail(ErrorKind::InconsistentData, "stabilizer size mismatch");
  return arr;
}

CFunction CFunction::from_class_values(const GroupParams& gp,
                                       std::vector<CycNum> c_coord,
                                       CycNum c_diff) {
  if (c_coord.size() + 1 != gp.r)
    fail(ErrorKind::BadParams, "need r-1 coordinate class values");
  CFunction c;
  auto refl = reflections(gp, Which::Full);
  for (auto& [g, h] : refl) {
    if (h.kind == Hyperplane::Kind::Coordinate) {
      int a = g.exps()[h.i];
      c.values_[g] = c_coord[static_cast<size_t>(a) - 1];
    } else {
      c.values_[g] = c_diff;
    }
  }
  return c;
}

CFunction CFunction::zero(const GroupParams& gp) {
  return from_class_values(gp, std::vector<CycNum>(gp.r - 1, CycNum(0)), CycNum(0));
}

CycNum CFunction::value(const MonomialMatrix& g) const {
  auto it = values_.find(g);
  if (it == values_.end()) fail(ErrorKind::BadParams, "c undefined on element");
  return it->second;
}

void CFunction::set_value(const MonomialMatrix& g, const CycNum& c) {
  values_[g] = c;
}

CFunction CFunction::restricted(const Arrangement& arr) const {
  CFunction out;
  for (const auto& hd : arr.hyperplanes)
    for (const auto& w : hd.stab) out.values_[w] = value(w);
  return out;
}

// ---------------------------------------------------------------- dictionaries

GroupAlgElt gamma_from_c(const HyperplaneData& hd, const CFunction& c) {
  GroupAlgElt out;
  for (const auto& w : hd.stab) out.add_term(w, c.value(w));
  return out;
}

GroupAlgElt epsilon_idempotent(const HyperplaneData& hd, unsigned j) {
  GroupAlgElt out;
  CycNum einv = CycNum(static_cast<int>(hd.e)).inverse();
  out.add_term(MonomialMatrix::identity(static_cast<unsigned>(hd.alpha.size()),
                                        hd.stab[0].r()),
               einv);
  for (size_t i = 0; i < hd.stab.size(); ++i)
    out.add_term(hd.stab[i], hd.stab_det[i].pow(j) * einv);
  return out;
}

GroupAlgElt a_H_elt(const HyperplaneData& hd, const std::vector<CycNum>& korbit) {
  // a_H = sum_w (sum_j k_j det(w)^j) w over the full W_H
  GroupAlgElt out;
  CycNum id_coeff(0);
  for (unsigned j = 0; j < hd.e; ++j) id_coeff += korbit[j];
  out.add_term(MonomialMatrix::identity(static_cast<unsigned>(hd.alpha.size()),
                                        hd.stab[0].r()),
               id_coeff);
  for (size_t i = 0; i < hd.stab.size(); ++i) {
    CycNum coeff(0);
    for (unsigned j = 0; j < hd.e; ++j)
      coeff += korbit[j] * hd.stab_det[i].pow(j);
    out.add_term(hd.stab[i], coeff);
  }
  return out;
}

KTable k_from_c(const Arrangement& arr, const CFunction& c) {
  KTable table;
  table.k.resize(arr.orbit_count());
  for (size_t o = 0; o < arr.orbit_count(); ++o) {
    const HyperplaneData* rep = nullptr;
    for (const auto& hd : arr.hyperplanes)
      if (hd.orbit == static_cast<int>(o)) {
        rep = &hd;
        break;
      }
    if (!rep) fail(ErrorKind::InconsistentData, "empty orbit");
    unsigned e = rep->e;
    // coefficient of k_i in the gamma coefficient of w: det(w)^{i-1} - det(w)^i
    Eigen::Index unknowns = static_cast<Eigen::Index>(e) - 1;
    CycMatrix a(static_cast<Eigen::Index>(rep->stab.size()), unknowns);
    CycMatrix b(static_cast<Eigen::Index>(rep->stab.size()), 1);
    for (size_t w = 0; w < rep->stab.size(); ++w) {
      for (Eigen::Index i = 1; i <= unknowns; ++i)
        a(static_cast<Eigen::Index>(w), i - 1) =
            rep->stab_det[w].pow(i - 1) - rep->stab_det[w].pow(i);
      b(static_cast<Eigen::Index>(w), 0) = c.value(rep->stab[w]);
    }
    auto sol = exact_solve(a, b);
    if (!sol) fail(ErrorKind::InconsistentData, "no k solves the gamma dictionary");
    std::vector<CycNum> k(e + 1, CycNum(0));
    for (Eigen::Index i = 1; i <= unknowns; ++i) k[static_cast<size_t>(i)] = (*sol)(i - 1, 0);
    table.k[o] = std::move(k);
  }
  return table;
}

CFunction c_from_k(const Arrangement& arr, const KTable& k) {
  CFunction out;
  for (const auto& hd : arr.hyperplanes) {
    const auto& korbit = k.k[static_cast<size_t>(hd.orbit)];
    for (size_t w = 0; w < hd.stab.size(); ++w) {
      CycNum coeff(0);
      for (unsigned j = 0; j < hd.e; ++j)
        coeff += hd.stab_det[w].pow(j) * (korbit[j + 1] - korbit[j]);
      out.set_value(hd.stab[w], coeff);
    }
  }
  return out;
}

// ---------------------------------------------------------------- tau checks

TauCompatibilityReport check_tau_compatibility(const Arrangement& arr_full,
                                               const CFunction& c,
                                               const KTable& k) {
  TauCompatibilityReport report{true, true, true, true, ""};
  const GroupParams& gp = arr_full.gp;
  unsigned d = gp.d();
  std::ostringstream witness;

  for (const auto& hd : arr_full.hyperplanes) {
    if (hd.h.kind != Hyperplane::Kind::Coordinate) continue;
    const auto& korbit = k.k[static_cast<size_t>(hd.orbit)];
    for (size_t w = 0; w < hd.stab.size(); ++w) {
      bool excluded = hd.stab_det[w].pow(d) != CycNum(1);
      if (!excluded) continue;
      if (c.value(hd.stab[w]) != CycNum(0)) {
        report.c_vanishes_on_excluded = false;
        witness << "c nonzero on excluded " << hd.stab[w].to_string() << "; ";
      }
      CycNum ksum(0);
      for (unsigned j = 0; j < hd.e; ++j)
        ksum += korbit[j] * hd.stab_det[w].pow(j);
      if (ksum != CycNum(0)) {
        report.k_sum_vanishes = false;
        witness << "sum k_j det^j != 0 at " << hd.stab[w].to_string() << "; ";
      }
    }
  }

  // periodicity pattern on the coordinate orbit, then the termwise sums
  if (arr_full.coordinate_orbit >= 0) {
    const auto& korbit = k.k[static_cast<size_t>(arr_full.coordinate_orbit)];
    unsigned e = gp.r;
    for (unsigned i = 0; i <= e && report.k_periodic_pattern; ++i)
      for (unsigned j = 0; j <= e; ++j)
        if (i % d == j % d && korbit[i] != korbit[j]) {
          report.k_periodic_pattern = false;
          witness << "k_" << i << " != k_" << j << " (i = j mod d); ";
          break;
        }
    if (report.k_periodic_pattern) {
      for (const auto& hd : arr_full.hyperplanes) {
        if (hd.orbit != arr_full.coordinate_orbit) continue;
        for (size_t w = 0; w < hd.stab.size(); ++w) {
          if (hd.stab_det[w].pow(d) == CycNum(1)) continue;
          CycNum total(0);
          for (unsigned l = 0; l < d; ++l) {
            CycNum geo(0);
            for (unsigned t = 0; t < gp.p; ++t)
              geo += hd.stab_det[w].pow(static_cast<long>(t) * d + l);
            total += geo * korbit[l];
            // the inner geometric sum vanishes on its own
            CycNum bare(0);
            for (unsigned t = 0; t < gp.p; ++t)
              bare += hd.stab_det[w].pow(static_cast<long>(t) * d);
            if (bare != CycNum(0)) report.remark_sums_vanish = false;
          }
          if (total != CycNum(0)) report.remark_sums_vanish = false;
        }
        break;  // one hyperplane represents the orbit
      }
    }
  }
  report.witness = witness.str();
  return report;
}

// ---------------------------------------------------------------- dunkl layer

Poly dunkl_apply(unsigned y_index, const Poly& f, const KTable& k,
                 const Arrangement& arr) {
  if (f.nvars() != arr.gp.n) fail(ErrorKind::DimensionMismatch, "dunkl arity");
  Poly out = f.derivative(y_index);
  for (const auto& hd : arr.hyperplanes) {
    CycNum pairing = hd.alpha[y_index];  // <y, alpha_H> for y = eps_{y_index}
    if (pairing.is_zero()) continue;
    GroupAlgElt a = a_H_elt(hd, k.k[static_cast<size_t>(hd.orbit)]);
    Poly applied = a.apply(f);
    if (applied.is_zero()) continue;
    Poly quotient = divide_by_linear(applied, hd.alpha);
    out = out + quotient.scaled(pairing);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> monomials_of_degree(unsigned n, unsigned d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
    if (pos + 1 == n) {
      cur[pos] = static_cast<int>(remaining);
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      cur[pos] = static_cast<int>(v);
      self(self, pos + 1, remaining - v);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  return out;
}

std::vector<std::vector<int>> monomials_up_to(unsigned n, unsigned d) {
  std::vector<std::vector<int>> out;
  for (unsigned deg = 0; deg <= d; ++deg) {
    auto m = monomials_of_degree(n, deg);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

}  // namespace

CommutationReport verify_commutation(const KTable& k, const CFunction& c,
                                     const Arrangement& arr, unsigned degree) {
  CommutationReport report{true, true, true, ""};
  const GroupParams& gp = arr.gp;
  unsigned n = gp.n;
  std::ostringstream witness;

  auto dunkl = [&](unsigned m, const Poly& f) { return dunkl_apply(m, f, k, arr); };

  // (i) pairwise commutativity on monomials of degree <= D
  for (const auto& e : monomials_up_to(n, degree)) {
    Poly f = Poly::monomial(n, e, CycNum(1));
    for (unsigned a = 0; a < n && report.dunkl_commute; ++a)
      for (unsigned b = a + 1; b < n; ++b) {
        if (dunkl(a, dunkl(b, f)) != dunkl(b, dunkl(a, f))) {
          report.dunkl_commute = false;
          witness << "[T_" << a + 1 << ",T_" << b + 1 << "] != 0 on x^"
                  << Poly::monomial(n, e, CycNum(1)).to_string() << "; ";
          break;
        }
      }
  }

  // (ii) relation (2): [T_y, x.] = <y,x> + sum_H coeff gamma_H
  for (const auto& e : monomials_up_to(n, degree > 0 ? degree - 1 : 0)) {
    Poly f = Poly::monomial(n, e, CycNum(1));
    for (unsigned m = 0; m < n && report.relation2_holds; ++m) {
      for (unsigned j = 0; j < n; ++j) {
        Poly xj = Poly::variable(n, j);
        Poly lhs = dunkl(m, xj * f) - xj * dunkl(m, f);
        Poly rhs = m == j ? f : Poly(n);
        for (const auto& hd : arr.hyperplanes) {
          CycNum coeff = hd.alpha[m] * hd.v_H[j];
          if (coeff.is_zero()) continue;
          coeff = coeff / hd.alpha_v_pairing;
          rhs = rhs + gamma_from_c(hd, c).apply(f).scaled(coeff);
        }
        if (lhs != rhs) {
          report.relation2_holds = false;
          witness << "relation (2) fails at y=eps_" << m + 1 << " x=x_" << j + 1
                  << "; ";
          break;
        }
      }
    }
  }

  // (iii) equivariance w T_y w^{-1} = T_{w(y)} on the defining generators
  auto gens = generators(gp, arr.which);
  for (const auto& e : monomials_up_to(n, degree)) {
    Poly f = Poly::monomial(n, e, CycNum(1));
    for (const auto& g : gens) {
      for (unsigned m = 0; m < n; ++m) {
        // w(eps_m) = zeta^{exps[m]} eps_{perm[m]}
        Poly lhs = act(g, dunkl(m, act(g.inverse(), f)));
        Poly rhs = dunkl(static_cast<unsigned>(g.perm()[m]), f)
                       .scaled(CycNum::root_of_unity(gp.r, g.exps()[m]));
        if (lhs != rhs) {
          report.equivariant = false;
          witness << "equivariance fails for generator at eps_" << m + 1 << "; ";
          break;
        }
      }
    }
  }

  report.witness = witness.str();
  return report;
}

TauInvarianceReport verify_tau_invariance(const CFunction& c, const GroupParams& gp,
                                          unsigned pbw_degree) {
  TauInvarianceReport report{true, true, true, ""};
  std::ostringstream witness;
  Arrangement arr = make_arrangement(gp, Which::Full);
  CycNum xi = CycNum::root_of_unity(gp.p, 1);
  unsigned n = gp.n;

  // (i) every gamma_H is tau-invariant
  for (const auto& hd : arr.hyperplanes) {
    GroupAlgElt gamma = gamma_from_c(hd, c);
    if (!(gamma.tau_applied(gp.p, xi) == gamma)) {
      report.gammas_invariant = false;
      for (const auto& [g, coeff] : gamma.terms()) {
        long s = 0;
        for (int e : g.exps()) s += e;
        if (xi.pow(s % static_cast<long>(gp.p)) != CycNum(1)) {
          witness << "gamma_{" << hd.h.to_string() << "} term " << g.to_string()
                  << " scales by xi^" << s % static_cast<long>(gp.p) << "; ";
          break;
        }
      }
    }
  }

  // (ii) the right side of relation (2) is tau-invariant as a formal
  // group-algebra identity for every pair (y, x)
  for (unsigned m = 0; m < n && report.relation2_rhs_invariant; ++m)
    for (unsigned j = 0; j < n; ++j) {
      GroupAlgElt rhs;
      if (m == j)
        rhs.add_term(MonomialMatrix::identity(n, gp.r), CycNum(1));
      for (const auto& hd : arr.hyperplanes) {
        CycNum coeff = hd.alpha[m] * hd.v_H[j];
        if (coeff.is_zero()) continue;
        coeff = coeff / hd.alpha_v_pairing;
        rhs = rhs + gamma_from_c(hd, c).scaled(coeff);
      }
      if (!(rhs.tau_applied(gp.p, xi) == rhs)) {
        report.relation2_rhs_invariant = false;
        witness << "relation (2) RHS not invariant at (eps_" << m + 1 << ", x_"
                << j + 1 << "); ";
        break;
      }
    }

  // (iii) PBW weight filter: tau acts on the basis monomial x^a g y^b by the
  // scalar xi^{|exps g|} (trivially on the x- and y-parts), so the fixed
  // monomials are exactly those with g in G(r,p,n).
  auto mono = monomials_up_to(n, pbw_degree);
  for (const auto& g : enumerate(gp, Which::Full)) {
    long s = 0;
    for (int e : g.exps()) s += e;
    for (const auto& a : mono) {
      for (const auto& b : mono) {
        PBWMonomial basis_label{a, g, b,
                                static_cast<int>(s % static_cast<long>(gp.p))};
        bool fixed =
            xi.pow(basis_label.tau_weight) == CycNum(1);  // a, b are inert
        if (fixed != is_member(basis_label.g, gp)) {
          report.pbw_filter_matches = false;
          witness << "PBW filter mismatch at x^"
                  << Poly::monomial(n, a, CycNum(1)).to_string() << " "
                  << g.to_string() << " y^"
                  << Poly::monomial(n, b, CycNum(1)).to_string() << "; ";
          break;
        }
      }
      if (!report.pbw_filter_matches) break;
    }
    if (!report.pbw_filter_matches) break;
  }

  report.witness = witness.str();
  return report;
}

bool dunkl_agreement(const CFunction& c, const GroupParams& gp, unsigned degree,
                     std::string* witness) {
  Arrangement full = make_arrangement(gp, Which::Full);
  Arrangement sub = make_arrangement(gp, Which::Subgroup);
  KTable k_full = k_from_c(full, c);
  CFunction c_sub = c.restricted(sub);
  KTable k_sub = k_from_c(sub, c_sub);

  for (const auto& e : monomials_up_to(gp.n, degree)) {
    Poly f = Poly::monomial(gp.n, e, CycNum(1));
    for (unsigned m = 0; m < gp.n; ++m) {
      Poly a = dunkl_apply(m, f, k_full, full);
      Poly b = dunkl_apply(m, f, k_sub, sub);
      if (a != b) {
        if (witness) {
          std::ostringstream os;
          os << "operators differ at eps_" << m + 1 << " on " << f.to_string();
          *witness = os.str();
        }
        return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------------- graded restriction

namespace {

CycNum monomial_action_trace(const MonomialMatrix& g, unsigned degree) {
  // trace of g on C[V]_degree: monomials fixed by the permutation part
  // contribute their twist scalar
  unsigned n = g.n();
  CycNum total(0);
  for (const auto& e : monomials_of_degree(n, degree)) {
    std::vector<int> e2(n, 0);
    long twist = 0;
    for (unsigned j = 0; j < n; ++j) {
      e2[static_cast<size_t>(g.perm()[j])] = e[j];
      twist -= static_cast<long>(g.exps()[j]) * e[j];
    }
    if (e2 == e) total += CycNum::root_of_unity(g.r(), twist);
  }
  return total;
}

}  // namespace

GradedRestrictionReport graded_restriction(const MultiPartition& lambda,
                                           const GroupParams& gp,
                                           unsigned degree) {
  HeckeParams gs = HeckeParams::group_specialization(gp);
  Rep rep = build_rep(lambda, gs, false);
  auto decomp = decompose_restriction(rep);
  Rep partner = build_rep(cyclic_class(lambda).class_size == 1
                              ? lambda
                              : lambda.shifted(),
                          gs, false);

  GradedRestrictionReport report;
  report.shape = lambda;
  report.e_lambda = decomp.e_lambda;

  auto classes = conjugacy_classes(gp, Which::Subgroup);

  // cache module images of all subgroup elements
  std::map<MonomialMatrix, CycMatrix> images, partner_images;
  for (const auto& cls : classes)
    for (const auto& g : cls) {
      images.emplace(g, group_image(rep, g));
      partner_images.emplace(g, group_image(partner, g));
    }

  // the summand traces must be class functions on the subgroup
  report.class_functions_ok = true;
  for (const auto& cls : classes) {
    for (const auto& s : decomp.summands) {
      CycNum ref = (s.projector * images.at(cls.front())).trace();
      for (const auto& g : cls)
        if ((s.projector * images.at(g)).trace() != ref)
          report.class_functions_ok = false;
    }
  }

  // graded character match, degree by degree
  for (unsigned d = 0; d <= degree; ++d) {
    bool match = true;
    for (const auto& cls : classes) {
      const MonomialMatrix& g = cls.front();
      CycNum mono = monomial_action_trace(g, d);
      CycNum lhs = mono * images.at(g).trace();
      CycNum rhs(0);
      for (const auto& s : decomp.summands)
        rhs += mono * (s.projector * images.at(g)).trace();
      if (lhs != rhs) match = false;
    }
    report.degree_match.push_back(match);
  }

  // Res V(lambda) = Res V(shift lambda) as subgroup characters
  report.shift_partner_match = true;
  for (const auto& cls : classes)
    for (const auto& g : cls)
      if (images.at(g).trace() != partner_images.at(g).trace())
        report.shift_partner_match = false;

  return report;
}

// ------------------------------------------------------------- fake degrees

namespace {

// det(1 - t A_w) on the degree-one forms: A_w x_j = zeta^{-e_j} x_{perm(j)}
UniPoly char_poly_on_forms(const MonomialMatrix& w) {
  unsigned n = w.n(), r = w.r();
  UniPoly out = UniPoly::constant(CycNum(1));
  std::vector<bool> seen(n, false);
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i]) continue;
    unsigned j = i, len = 0;
    long esum = 0;
    while (!seen[j]) {
      seen[j] = true;
      esum -= w.exps()[j];
      j = static_cast<unsigned>(w.perm()[j]);
      ++len;
    }
    // factor 1 - zeta^esum t^len
    std::vector<CycNum> factor(len + 1, CycNum(0));
    factor[0] = CycNum(1);
    factor[len] = -CycNum::root_of_unity(r, esum);
    out = out * UniPoly(std::move(factor));
  }
  return out;
}

UniPoly degrees_product(const std::vector<unsigned>& degrees) {
  UniPoly out = UniPoly::constant(CycNum(1));
  for (unsigned d : degrees) {
    std::vector<CycNum> f(d + 1, CycNum(0));
    f[0] = CycNum(1);
    f[d] = CycNum(-1);
    out = out * UniPoly(std::move(f));  // 1 - t^d
  }
  return out;
}

}  // namespace

std::vector<unsigned> verified_degrees(const GroupParams& gp) {
  std::vector<unsigned> degrees;
  for (unsigned i = 1; i <= gp.n; ++i) degrees.push_back(gp.r * i);

  // Molien series of invariants: (1/|W|) sum 1/det(1-tA_w) = prod 1/(1-t^d_i)
  auto elements = enumerate(GroupParams(gp.r, 1, gp.n), Which::Full);
  RatFunc molien;
  for (const auto& w : elements)
    molien = molien + RatFunc(UniPoly::constant(CycNum(1)), char_poly_on_forms(w));
  molien = molien.scaled(CycNum(static_cast<long>(elements.size())).inverse());
  RatFunc expected(UniPoly::constant(CycNum(1)), degrees_product(degrees));
  if (!(molien == expected))
    fail(ErrorKind::InconsistentData,
         "reflection degrees r, 2r, ..., nr fail the Molien check");
  return degrees;
}

UniPoly fake_degree_of_character(
    const GroupParams& gp, const std::vector<MonomialMatrix>& elements,
    const std::map<MonomialMatrix, CycNum>& chi) {
  auto degrees = verified_degrees(gp);
  RatFunc total;
  for (const auto& w : elements) {
    auto it = chi.find(w.inverse());
    if (it == chi.end()) fail(ErrorKind::BadParams, "character value missing");
    total = total + RatFunc(UniPoly::constant(it->second), char_poly_on_forms(w));
  }
  total = total.scaled(CycNum(static_cast<long>(elements.size())).inverse());
  total = total * RatFunc::from_poly(degrees_product(degrees));
  return total.to_poly();
}

UniPoly fake_degree(const MultiPartition& lambda, const GroupParams& gp) {
  HeckeParams gs = HeckeParams::group_specialization(gp);
  Rep rep = build_rep(lambda, gs, false);
  auto elements = enumerate(GroupParams(gp.r, 1, gp.n), Which::Full);
  std::map<MonomialMatrix, CycNum> chi;
  for (const auto& g : elements) chi[g] = group_character(rep, g);
  return fake_degree_of_character(gp, elements, chi);
}

FakeShiftResult verify_fake_shift(const MultiPartition& lambda,
                                  const GroupParams& gp) {
  HeckeParams gs = HeckeParams::group_specialization(gp);
  Rep rep = build_rep(lambda, gs, false);
  auto elements = enumerate(GroupParams(gp.r, 1, gp.n), Which::Full);
  std::map<MonomialMatrix, CycNum> chi, chi_twisted;
  for (const auto& g : elements) {
    CycNum value = group_character(rep, g);
    chi[g] = value;
    long s = 0;
    for (int e : g.exps()) s += e;
    // tau(V) = chi_lin (x) V with chi_lin(g) = xi^{-|exps g|}
    chi_twisted[g] = gs.xi.pow(-(s % static_cast<long>(gp.p))) * value;
  }

  FakeShiftResult result;
  result.f_lambda = fake_degree_of_character(gp, elements, chi);
  result.f_twisted = fake_degree_of_character(gp, elements, chi_twisted);
  long m = result.f_twisted.valuation() - result.f_lambda.valuation();
  UniPoly shifted = m >= 0
      ? result.f_lambda * UniPoly::monomial(CycNum(1), static_cast<int>(m))
      : result.f_lambda;
  UniPoly other = m >= 0
      ? result.f_twisted
      : result.f_twisted * UniPoly::monomial(CycNum(1), static_cast<int>(-m));
  result.ok = shifted == other;
  result.m = m;
  return result;
}

bool fake_degrees_sum_to_poincare(const GroupParams& gp, std::string* witness) {
  auto degrees = verified_degrees(gp);
  UniPoly total;
  for (const auto& shape : multipartitions(gp.r, gp.p, gp.n)) {
    UniPoly f = fake_degree(shape, gp);
    unsigned long dim = standard_tableaux(shape).size();
    total = total + f.scaled(CycNum(static_cast<long>(dim)));
  }
  UniPoly poincare = UniPoly::constant(CycNum(1));
  for (unsigned d : degrees) {
    std::vector<CycNum> f(d, CycNum(1));  // 1 + t + ... + t^{d-1}
    poincare = poincare * UniPoly(std::move(f));
  }
  bool ok = total == poincare;
  if (!ok && witness)
    *witness = "sum dim*F = " + total.to_string() + " vs " + poincare.to_string();
  return ok;
}

ShiftedKTable heckman_opdam_shift(const ShiftedKTable& k, const GroupParams& gp) {
  ShiftedKTable out = k;
  if (out.coordinate_orbit >= 0)
    out.coordinate_offset -= CycNum(1) / CycNum(static_cast<int>(gp.p));
  return out;
}

}  // namespace imprim
