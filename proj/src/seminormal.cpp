#include "imprim/seminormal.hpp"

#include <map>
#include <sstream>

namespace imprim {

namespace {

const int kSmallPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

std::string pair_witness(const MultiPartition& shape, unsigned i, int col) {
  std::ostringstream os;
  os << shape.to_string() << " T_" << i << " column " << col;
  return os.str();
}

}  // namespace

HeckeParams HeckeParams::defaults(const GroupParams& gp) {
  std::vector<CycNum> v;
  for (unsigned l = 0; l < gp.d(); ++l) {
    if (l >= std::size(kSmallPrimes)) fail(ErrorKind::BadParams, "d too large for defaults");
    v.emplace_back(kSmallPrimes[l]);
  }
  return make(gp, CycNum(2), std::move(v));
}

HeckeParams HeckeParams::group_specialization(const GroupParams& gp) {
  HeckeParams hp;
  hp.gp = gp;
  hp.q = CycNum(1);
  hp.group_mode = true;
  for (unsigned l = 0; l < gp.d(); ++l)
    hp.v.push_back(CycNum::root_of_unity(gp.r, static_cast<long>(l)));
  hp.xi = CycNum::root_of_unity(gp.r, static_cast<long>(gp.d()));
  hp.derive_u();
  return hp;
}

HeckeParams HeckeParams::make(const GroupParams& gp, const CycNum& q,
                              std::vector<CycNum> v) {
  gp.validate();
  if (v.size() != gp.d()) fail(ErrorKind::BadParams, "need d = r/p values v_0..v_{d-1}");
  if (q.is_zero()) fail(ErrorKind::BadParams, "q must be nonzero");
  HeckeParams hp;
  hp.gp = gp;
  hp.q = q;
  hp.v = std::move(v);
  hp.xi = CycNum::root_of_unity(gp.p, 1);
  hp.derive_u();
  return hp;
}

void HeckeParams::derive_u() {
  u.clear();
  for (unsigned j = 1; j <= gp.r; ++j) {
    unsigned k = (j - 1) % gp.p, l = (j - 1) / gp.p;
    u.push_back(xi.pow(k) * v[l]);
  }
}

bool HeckeParams::v_powers_distinct() const {
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i].pow(gp.p) == v[j].pow(gp.p)) return false;
  return true;
}

UniPoly HeckeParams::t1_min_poly() const {
  UniPoly acc = UniPoly::constant(CycNum(1));
  for (const auto& uj : u)
    acc = acc * UniPoly({-uj, CycNum(1)});
  return acc;
}

bool HeckeParams::uv_polynomial_identity_holds() const {
  UniPoly rhs = UniPoly::constant(CycNum(1));
  for (const auto& vl : v) {
    std::vector<CycNum> factor(static_cast<size_t>(gp.p) + 1, CycNum(0));
    factor[0] = -vl.pow(gp.p);
    factor[gp.p] = CycNum(1);
    rhs = rhs * UniPoly(std::move(factor));
  }
  return t1_min_poly() == rhs;
}

CycNum residue(const StdTableau& t, unsigned k, const HeckeParams& params) {
  auto cd = t.cell_data(k);
  return params.xi.pow(cd.a) * params.v[static_cast<size_t>(cd.b) - 1] *
         params.q.pow(cd.c);
}

int Rep::basis_index(const StdTableau& t) const {
  auto key = t.key();
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].key() == key) return static_cast<int>(i);
  return -1;
}

CycMatrix Rep::word_image(const GroupWord& word) const {
  CycMatrix acc = CycMatrix::Identity(dim(), dim());
  for (auto& [gen, pw] : word) {
    if (gen < 1 || gen > static_cast<int>(gens.size()))
      fail(ErrorKind::BadParams, "word letter out of range");
    const CycMatrix& m = gens[static_cast<size_t>(gen - 1)];
    if (pw >= 0) {
      for (int t = 0; t < pw; ++t) acc = acc * m;
    } else {
      CycMatrix inv = exact_inverse(m);
      for (int t = 0; t < -pw; ++t) acc = acc * inv;
    }
  }
  return acc;
}

CycNum Rep::character(const GroupWord& word) const {
  return word_image(word).trace();
}

namespace {

struct PairCoeffs {
  CycNum alpha, beta, gamma, delta;
};

// Coefficients of T_i on the span of {v(T), v(T')} for a standard swap pair,
// as functions of the residues (rho, rho') of entries (i-1, i) in T.  The
// symmetric normalization beta = (q rho' - rho)/(rho' - rho),
// gamma = (rho' - q rho)/(rho' - rho) depends only on the residue pair and is
// invariant under simultaneous scaling of (rho, rho'), so the relabeling
// v(T) -> v(shift T) intertwines on the nose.
PairCoeffs hecke_pair(const CycNum& rho, const CycNum& rho2, const CycNum& q,
                      const std::string& where) {
  CycNum den = rho2 - rho;
  if (den.is_zero())
    fail(ErrorKind::SeparationFailure, "residue collision rho' = rho at " + where);
  CycNum beta_num = q * rho2 - rho;
  CycNum gamma_num = rho2 - q * rho;
  if (beta_num.is_zero() || gamma_num.is_zero())
    fail(ErrorKind::SeparationFailure,
         "residue collision rho' = q^{+-1} rho at " + where);
  CycNum deninv = den.inverse();
  return {(CycNum(1) - q) * rho2 * deninv, beta_num * deninv,
          gamma_num * deninv, (q - CycNum(1)) * rho * deninv};
}

// q -> 1 limit used by the group specialization when both cells lie in the
// same component: classical Young seminormal coefficients in the axial
// distance h = c' - c.
PairCoeffs group_pair(int h) {
  CycNum hh(h);
  CycNum hinv = hh.inverse();
  return {-hinv, (hh + CycNum(1)) * hinv, (hh - CycNum(1)) * hinv, hinv};
}

}  // namespace

Rep build_rep(const MultiPartition& shape, const HeckeParams& params,
              bool verify) {
  if (shape.p() != params.gp.p || shape.d() != params.gp.d() ||
      shape.n() != params.gp.n)
    fail(ErrorKind::BadParams, "shape does not match parameters");
  if (!params.v_powers_distinct())
    fail(ErrorKind::SeparationFailure, "v_i^p = v_j^p for some i != j");

  Rep rep;
  rep.params = params;
  rep.shape = shape;
  rep.basis = standard_tableaux(shape);
  unsigned n = params.gp.n;
  Eigen::Index dim = rep.dim();

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < rep.basis.size(); ++i)
    index[rep.basis[i].key()] = static_cast<int>(i);

  // T_1 acts diagonally by xi^a v_b; entry 1 always sits in a (1,1) corner.
  CycMatrix t1 = CycMatrix::Constant(dim, dim, CycNum(0));
  for (Eigen::Index t = 0; t < dim; ++t) {
    auto cd = rep.basis[static_cast<size_t>(t)].cell_data(1);
    if (cd.c != 0)
      fail(ErrorKind::RelationFailure, "entry 1 not at a component corner");
    t1(t, t) = params.xi.pow(cd.a) * params.v[static_cast<size_t>(cd.b) - 1];
  }
  rep.gens.push_back(std::move(t1));

  for (unsigned i = 2; i <= n; ++i) {
    CycMatrix ti = CycMatrix::Constant(dim, dim, CycNum(0));
    for (Eigen::Index t = 0; t < dim; ++t) {
      const StdTableau& tab = rep.basis[static_cast<size_t>(t)];
      StdTableau swapped = tab.with_swapped(i - 1);
      CycNum rho = residue(tab, i - 1, params);
      CycNum rho2 = residue(tab, i, params);
      if (!swapped.is_standard()) {
        // entries i-1, i adjacent in one row (eigenvalue -q) or one column
        // (eigenvalue 1) of the same component
        const Cell& a = tab.cell_of(i - 1);
        const Cell& b = tab.cell_of(i);
        bool same_row = a.comp == b.comp && a.row == b.row && b.col == a.col + 1;
        bool same_col = a.comp == b.comp && a.col == b.col && b.row == a.row + 1;
        if (same_row) {
          if (!params.group_mode && rho2 != params.q * rho)
            fail(ErrorKind::RelationFailure, "row-adjacent residues not in ratio q");
          ti(t, t) = -params.q;
        } else if (same_col) {
          if (!params.group_mode && params.q * rho2 != rho)
            fail(ErrorKind::RelationFailure, "column-adjacent residues not in ratio 1/q");
          ti(t, t) = CycNum(1);
        } else {
          fail(ErrorKind::RelationFailure, "non-standard swap without adjacency");
        }
        continue;
      }
      int t2 = index.at(swapped.key());
      PairCoeffs pc;
      const Cell& a = tab.cell_of(i - 1);
      const Cell& b = tab.cell_of(i);
      if (params.group_mode && a.comp == b.comp) {
        pc = group_pair((b.col - b.row) - (a.col - a.row));
      } else {
        pc = hecke_pair(rho, rho2, params.q, pair_witness(shape, i, static_cast<int>(t)));
      }
      // T_i v(T) = alpha v(T) + gamma v(T'), filled one column at a time;
      // the partner column is produced when the loop reaches it.
      ti(t, t) = pc.alpha;
      ti(t2, t) = pc.gamma;
    }
    rep.gens.push_back(std::move(ti));
  }

  if (verify) {
    RelationReport report = verify_relations(rep);
    if (!report.all_ok()) {
      for (const auto& c : report.checks)
        if (!c.ok)
          fail(ErrorKind::RelationFailure,
               "relation " + c.family + " failed: " + c.description + " at " + c.witness);
    }
  }
  return rep;
}

namespace {

RelationCheck check_equal(const std::string& family, const std::string& desc,
                          const CycMatrix& lhs, const CycMatrix& rhs) {
  RelationCheck c{family, desc, true, ""};
  for (Eigen::Index col = 0; col < lhs.cols() && c.ok; ++col)
    for (Eigen::Index row = 0; row < lhs.rows(); ++row)
      if (lhs(row, col) != rhs(row, col)) {
        c.ok = false;
        std::ostringstream os;
        os << "basis vector " << col;
        c.witness = os.str();
        break;
      }
  return c;
}

}  // namespace

RelationReport verify_relations(const Rep& rep) {
  RelationReport rpt;
  unsigned n = rep.params.gp.n;
  const auto& g = rep.gens;
  Eigen::Index dim = rep.dim();
  CycMatrix id = CycMatrix::Identity(dim, dim);

  // (1) distant generators commute
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 2; j <= n; ++j) {
      std::ostringstream os;
      os << "T_" << i << " T_" << j << " = T_" << j << " T_" << i;
      rpt.checks.push_back(check_equal("commuting", os.str(),
                                       g[i - 1] * g[j - 1], g[j - 1] * g[i - 1]));
    }
  // (2) braid for adjacent transposition generators
  for (unsigned i = 2; i + 1 <= n; ++i) {
    std::ostringstream os;
    os << "T_" << i << " T_" << i + 1 << " T_" << i << " = T_" << i + 1 << " T_"
       << i << " T_" << i + 1;
    rpt.checks.push_back(check_equal("braid", os.str(),
                                     g[i - 1] * g[i] * g[i - 1],
                                     g[i] * g[i - 1] * g[i]));
  }
  // (3) length-4 braid between T_1 and T_2
  if (n >= 2)
    rpt.checks.push_back(check_equal("braid01", "T_1 T_2 T_1 T_2 = T_2 T_1 T_2 T_1",
                                     g[0] * g[1] * g[0] * g[1],
                                     g[1] * g[0] * g[1] * g[0]));
  // (4) prod_j (T_1 - u_j) = 0
  {
    CycMatrix acc = id;
    for (const auto& uj : rep.params.u) acc = acc * (g[0] - uj * id);
    rpt.checks.push_back(check_equal("t1poly", "prod (T_1 - u_j) = 0", acc,
                                     CycMatrix::Constant(dim, dim, CycNum(0))));
  }
  // (5) (T_i - 1)(T_i + q) = 0
  for (unsigned i = 2; i <= n; ++i) {
    std::ostringstream os;
    os << "(T_" << i << " - 1)(T_" << i << " + q) = 0";
    rpt.checks.push_back(check_equal("quadratic", os.str(),
                                     (g[i - 1] - id) * (g[i - 1] + rep.params.q * id),
                                     CycMatrix::Constant(dim, dim, CycNum(0))));
  }
  return rpt;
}

std::vector<CycMatrix> jm_matrices(const Rep& rep, bool assert_diagonal) {
  unsigned n = rep.params.gp.n;
  std::vector<CycMatrix> xs;
  CycMatrix cur = rep.gens[0];
  xs.push_back(cur);
  for (unsigned k = 2; k <= n; ++k) {
    cur = rep.gens[k - 1] * cur * rep.gens[k - 1];
    xs.push_back(cur);
  }
  if (assert_diagonal) {
    for (unsigned k = 1; k <= n; ++k) {
      const CycMatrix& x = xs[k - 1];
      CycNum scale = rep.params.q.pow(static_cast<long>(k) - 1);
      for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
          if (i != j && !x(i, j).is_zero())
            fail(ErrorKind::RelationFailure, "JM element not diagonal");
        }
        CycNum expected =
            scale * residue(rep.basis[static_cast<size_t>(i)], k, rep.params);
        if (x(i, i) != expected)
          fail(ErrorKind::RelationFailure, "JM eigenvalue mismatch");
      }
    }
  }
  return xs;
}

unsigned long group_order(const GroupParams& gp) {
  unsigned long s = 1;
  for (unsigned i = 0; i < gp.n; ++i) s *= gp.r;
  for (unsigned i = 2; i <= gp.n; ++i) s *= i;
  return s;
}

unsigned long dimension_identity_sum(const HeckeParams& params) {
  unsigned long total = 0;
  for (const auto& shape : multipartitions(params.gp.r, params.gp.p, params.gp.n)) {
    unsigned long dim = standard_tableaux(shape).size();
    total += dim * dim;
  }
  return total;
}

std::vector<std::vector<CycNum>> jm_spectra(const Rep& rep) {
  auto xs = jm_matrices(rep);
  std::vector<std::vector<CycNum>> spectra;
  for (const auto& x : xs) {
    std::vector<CycNum> diag;
    for (Eigen::Index i = 0; i < x.rows(); ++i) diag.push_back(x(i, i));
    std::sort(diag.begin(), diag.end(),
              [](const CycNum& a, const CycNum& b) { return CycNum::compare(a, b) < 0; });
    spectra.push_back(std::move(diag));
  }
  return spectra;
}

CycMatrix group_image(const Rep& rep, const MonomialMatrix& g) {
  return rep.word_image(to_word(g));
}

CycNum group_character(const Rep& rep, const MonomialMatrix& g) {
  return group_image(rep, g).trace();
}

}  // namespace imprim
