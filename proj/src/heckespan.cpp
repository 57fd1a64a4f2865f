#include "imprim/heckespan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "imprim/clifford.hpp"

namespace imprim {

bool LatticePoint::decompose_Q_plus_pL(unsigned p, std::vector<int>& q_part,
                                       std::vector<int>& m_part) const {
  int total = degree();
  if (total % static_cast<int>(p) != 0) return false;
  m_part.assign(coords.size(), 0);
  m_part[0] = total / static_cast<int>(p);
  q_part = coords;
  q_part[0] -= total;  // now sums to zero, so q lies in the root lattice Q
  return true;
}

HeckeSum::HeckeSum(const HeckeParams& params) : params_(params) {
  for (const auto& shape :
       multipartitions(params.gp.r, params.gp.p, params.gp.n)) {
    Rep rep = build_rep(shape, params, false);
    auto xs = jm_matrices(rep, true);
    std::vector<CycNum> diag;
    for (const auto& x : xs)
      for (Eigen::Index i = 0; i < x.rows(); ++i) diag.push_back(x(i, i));
    jm_diag_.push_back(std::move(diag));
    total_dim_ += rep.dim() * rep.dim();
    reps_.push_back(std::move(rep));
  }
}

std::vector<CycMatrix> HeckeSum::identity_blocks() const {
  std::vector<CycMatrix> out;
  for (const auto& rep : reps_)
    out.push_back(CycMatrix::Identity(rep.dim(), rep.dim()));
  return out;
}

std::vector<CycMatrix> HeckeSum::generator_blocks(unsigned i) const {
  std::vector<CycMatrix> out;
  for (const auto& rep : reps_) out.push_back(rep.gens[i - 1]);
  return out;
}

std::vector<CycMatrix> HeckeSum::t1_inverse_blocks() const {
  std::vector<CycMatrix> out;
  for (const auto& rep : reps_) out.push_back(t1_inverse_by_polynomial(rep));
  return out;
}

std::vector<CycMatrix> HeckeSum::lattice_blocks(const LatticePoint& lambda) const {
  std::vector<CycMatrix> out;
  for (size_t b = 0; b < reps_.size(); ++b) {
    Eigen::Index dim = reps_[b].dim();
    CycMatrix m = CycMatrix::Identity(dim, dim);
    for (size_t k = 0; k < lambda.coords.size(); ++k) {
      for (Eigen::Index t = 0; t < dim; ++t) {
        CycNum ev = jm_diag_[b][k * static_cast<size_t>(dim) + static_cast<size_t>(t)];
        m(t, t) = m(t, t) * ev.pow(lambda.coords[k]);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<CycMatrix> HeckeSum::perm_blocks(const std::vector<int>& w) const {
  auto letters = bubble_sort_word(w);
  std::vector<CycMatrix> out = identity_blocks();
  for (int letter : letters) {
    auto g = generator_blocks(static_cast<unsigned>(letter));
    out = mul(out, g);
  }
  return out;
}

std::vector<CycMatrix> HeckeSum::mul(const std::vector<CycMatrix>& a,
                                     const std::vector<CycMatrix>& b) {
  std::vector<CycMatrix> out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

CycVector HeckeSum::vectorize(const std::vector<CycMatrix>& blocks) const {
  CycVector v(total_dim_);
  Eigen::Index at = 0;
  for (const auto& m : blocks)
    for (Eigen::Index col = 0; col < m.cols(); ++col)
      for (Eigen::Index row = 0; row < m.rows(); ++row) v(at++) = m(row, col);
  return v;
}

namespace {

std::vector<LatticePoint> lattice_box(unsigned r, unsigned n) {
  std::vector<LatticePoint> out;
  LatticePoint cur;
  cur.coords.assign(n, 0);
  while (true) {
    out.push_back(cur);
    unsigned pos = 0;
    while (pos < n) {
      if (++cur.coords[pos] < static_cast<int>(r)) break;
      cur.coords[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return out;
}

std::vector<std::vector<int>> all_perms(unsigned n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

FullBasisResult full_basis_images(const HeckeParams& params, unsigned long cap) {
  unsigned long size = group_order(params.gp);
  if (size > cap) fail(ErrorKind::CapExceeded, "basis larger than cap");

  HeckeSum pi(params);
  FullBasisResult result;
  RowBasis rowspan(pi.total_dim());

  for (const auto& lambda : lattice_box(params.gp.r, params.gp.n)) {
    auto xl = pi.lattice_blocks(lambda);
    for (const auto& w : all_perms(params.gp.n)) {
      BasisElement be;
      be.lattice = lambda;
      be.perm = w;
      be.tau_weight = lambda.degree() % static_cast<int>(params.gp.p);
      be.blocks = HeckeSum::mul(xl, pi.perm_blocks(w));
      be.vectorized = pi.vectorize(be.blocks);
      rowspan.add(be.vectorized);
      result.elements.push_back(std::move(be));
    }
  }
  result.rank = rowspan.rank();
  result.independent = result.rank == static_cast<long>(size);
  if (!result.independent)
    fail(ErrorKind::RankDeficient, "basis images are linearly dependent");
  return result;
}

FixedSubspaceReport fixed_subspace_check(const HeckeParams& params,
                                         unsigned long cap) {
  HeckeSum pi(params);
  FullBasisResult basis = full_basis_images(params, cap);
  unsigned p = params.gp.p;
  unsigned long size = group_order(params.gp);

  FixedSubspaceReport report;
  report.expected_dim = static_cast<long>(size / p);

  RowBasis span_a(pi.total_dim());
  RowBasis span_lp(pi.total_dim());
  report.labels_match = true;
  report.eigenspace_dims.assign(p, 0);
  for (const auto& be : basis.elements) {
    report.eigenspace_dims[static_cast<size_t>(be.tau_weight)]++;
    bool weight0 = be.tau_weight == 0;
    bool lp = be.lattice.in_L_p(p) && be.lattice.in_C_r(params.gp.r);
    if (weight0 != lp) report.labels_match = false;
    if (weight0) span_a.add(be.vectorized);
    if (lp) span_lp.add(be.vectorized);
  }
  report.dim_weight0 = span_a.rank();
  report.dim_lp_filter = span_lp.rank();

  // span of words in the subalgebra generators, grown breadth-first until
  // the rank stabilizes
  std::vector<std::vector<CycMatrix>> gens;
  auto t0 = pi.identity_blocks();
  for (unsigned k = 0; k < p; ++k) t0 = HeckeSum::mul(t0, pi.generator_blocks(1));
  gens.push_back(std::move(t0));
  if (params.gp.n >= 2) {
    gens.push_back(HeckeSum::mul(
        pi.t1_inverse_blocks(),
        HeckeSum::mul(pi.generator_blocks(2), pi.generator_blocks(1))));
  }
  for (unsigned i = 2; i <= params.gp.n; ++i)
    gens.push_back(pi.generator_blocks(i));

  RowBasis span_b(pi.total_dim());
  report.containment_ok = true;
  std::vector<std::vector<CycMatrix>> frontier{pi.identity_blocks()};
  {
    CycVector v = pi.vectorize(frontier[0]);
    if (!span_a.contains(v)) report.containment_ok = false;
    span_b.add(v);
  }
  while (!frontier.empty() && span_b.rank() < report.expected_dim) {
    std::vector<std::vector<CycMatrix>> next;
    for (const auto& word : frontier) {
      for (const auto& g : gens) {
        auto prod = HeckeSum::mul(word, g);
        CycVector v = pi.vectorize(prod);
        if (!span_a.contains(v)) {
          report.containment_ok = false;
          fail(ErrorKind::SpanMismatch,
               "subalgebra word escapes the tau-fixed span");
        }
        if (span_b.add(v)) next.push_back(std::move(prod));
      }
    }
    if (next.empty()) break;  // rank stabilized
    frontier = std::move(next);
  }
  report.dim_subalgebra_words = span_b.rank();
  return report;
}

namespace {

struct AffineEval {
  std::vector<CycMatrix> blocks;
  int weight = 0;
};

AffineEval eval_affine(const HeckeSum& pi, const AffineWord& word,
                       const std::vector<CycMatrix>& t1inv) {
  AffineEval out{pi.identity_blocks(), 0};
  for (int letter : word) {
    if (letter == 1) {
      out.blocks = HeckeSum::mul(out.blocks, pi.generator_blocks(1));
      out.weight += 1;
    } else if (letter == -1) {
      out.blocks = HeckeSum::mul(out.blocks, t1inv);
      out.weight -= 1;
    } else if (letter >= 2 &&
               letter <= static_cast<int>(pi.params().gp.n)) {
      out.blocks = HeckeSum::mul(out.blocks, pi.generator_blocks(
                                                 static_cast<unsigned>(letter)));
    } else {
      fail(ErrorKind::BadParams, "bad affine letter");
    }
  }
  return out;
}

}  // namespace

DiagramReport commutative_diagram_check(const HeckeParams& params,
                                        unsigned long cap) {
  HeckeSum pi(params);
  FullBasisResult basis = full_basis_images(params, cap);
  auto t1inv = pi.t1_inverse_blocks();
  unsigned p = params.gp.p;
  Eigen::Index dim = pi.total_dim();

  // basis matrix with vectorized elements as columns, factored once
  CycMatrix bmat(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    bmat.col(j) = basis.elements[static_cast<size_t>(j)].vectorized;
  CycMatrix binv = exact_inverse(bmat);

  RowBasis span_a(dim);
  for (const auto& be : basis.elements)
    if (be.tau_weight == 0) span_a.add(be.vectorized);

  // deterministic word sample: all words of length <= 3 over the alphabet
  std::vector<int> alphabet{1, -1};
  for (unsigned i = 2; i <= params.gp.n; ++i) alphabet.push_back(static_cast<int>(i));
  std::vector<AffineWord> sample{{}};
  std::vector<AffineWord> frontier{{}};
  for (int len = 0; len < 3; ++len) {
    std::vector<AffineWord> next;
    for (const auto& w : frontier)
      for (int a : alphabet) {
        AffineWord w2 = w;
        w2.push_back(a);
        next.push_back(w2);
        sample.push_back(std::move(w2));
      }
    frontier = std::move(next);
  }

  DiagramReport report;
  report.pass = true;
  for (const auto& word : sample) {
    AffineEval ev = eval_affine(pi, word, t1inv);
    CycVector vec = pi.vectorize(ev.blocks);
    int weight = ((ev.weight % static_cast<int>(p)) + static_cast<int>(p)) %
                 static_cast<int>(p);

    // coordinates in the X^lambda T_w basis, then the basis-level tau
    CycVector coords = binv * vec;
    CycVector tau_vec = CycVector::Constant(dim, CycNum(0));
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (coords(j).is_zero()) continue;
      CycNum scale = params.xi.pow(basis.elements[static_cast<size_t>(j)]
                                       .lattice.degree());
      tau_vec += (scale * coords(j)) * basis.elements[static_cast<size_t>(j)].vectorized;
    }
    CycVector scaled = CycVector::Constant(dim, CycNum(0));
    CycNum xw = params.xi.pow(weight);
    for (Eigen::Index i = 0; i < dim; ++i) scaled(i) = xw * vec(i);

    DiagramCheck check;
    check.word = word;
    check.tau_weight = weight;
    check.scaling_commutes = true;
    for (Eigen::Index i = 0; i < dim; ++i)
      if (tau_vec(i) != scaled(i)) check.scaling_commutes = false;
    check.in_fixed_span = span_a.contains(vec);
    if (!check.scaling_commutes) report.pass = false;
    if (weight == 0 && !check.in_fixed_span) report.pass = false;
    if (weight != 0 && check.in_fixed_span) report.pass = false;
    report.checks.push_back(std::move(check));
  }

  // generator words of the affine subalgebra evaluate into the fixed span
  report.subalgebra_words_in_fixed_span = true;
  std::vector<AffineWord> subwords;
  AffineWord xp(p, 1);
  subwords.push_back(xp);
  if (params.gp.n >= 2) subwords.push_back({-1, 2, 1});
  for (unsigned i = 2; i <= params.gp.n; ++i) subwords.push_back({static_cast<int>(i)});
  for (size_t a = 0; a < subwords.size(); ++a)
    for (size_t b = 0; b < subwords.size(); ++b) {
      AffineWord w = subwords[a];
      w.insert(w.end(), subwords[b].begin(), subwords[b].end());
      AffineEval ev = eval_affine(pi, w, t1inv);
      if (!span_a.contains(pi.vectorize(ev.blocks))) {
        report.subalgebra_words_in_fixed_span = false;
        report.pass = false;
        fail(ErrorKind::DiagramFailure, "subalgebra word outside fixed span");
      }
    }
  return report;
}

}  // namespace imprim
