#pragma once

#include <string>
#include <vector>

#include "imprim/seminormal.hpp"

namespace imprim {

/// A point of the weight lattice L = sum Z eps_i restricted to C_r.
struct LatticePoint {
  std::vector<int> coords;  // lambda_1..lambda_n, each >= 0 here

  int degree() const {
    int s = 0;
    for (int c : coords) s += c;
    return s;
  }
  bool in_C_r(unsigned r) const {
    for (int c : coords)
      if (c < 0 || c >= static_cast<int>(r)) return false;
    return true;
  }
  /// lambda in L_p = Q + pL iff the coordinate sum vanishes mod p; the
  /// equivalence with the sum-criterion is exercised by enumeration tests.
  bool in_L_p(unsigned p) const { return degree() % static_cast<int>(p) == 0; }
  /// Constructive witness of membership in Q + pL when the sum criterion
  /// holds: lambda = q + p*m with q of coordinate-sum zero.
  bool decompose_Q_plus_pL(unsigned p, std::vector<int>& q_part,
                           std::vector<int>& m_part) const;
};

/// The faithful module Pi = direct sum of all V(mu), with cached JM
/// diagonals.  Basis elements X^lambda T_w are evaluated blockwise and
/// vectorized (column-major per block, blocks in shape order).
class HeckeSum {
 public:
  explicit HeckeSum(const HeckeParams& params);

  const HeckeParams& params() const { return params_; }
  const std::vector<Rep>& reps() const { return reps_; }
  Eigen::Index total_dim() const { return total_dim_; }  // = r^n n!

  std::vector<CycMatrix> identity_blocks() const;
  std::vector<CycMatrix> generator_blocks(unsigned i) const;  // T_i per block
  std::vector<CycMatrix> t1_inverse_blocks() const;
  /// X^lambda as diagonal blocks.
  std::vector<CycMatrix> lattice_blocks(const LatticePoint& lambda) const;
  /// T_w for the bubble-sort reduced word of w (image list, 0-based).
  std::vector<CycMatrix> perm_blocks(const std::vector<int>& w) const;

  static std::vector<CycMatrix> mul(const std::vector<CycMatrix>& a,
                                    const std::vector<CycMatrix>& b);
  CycVector vectorize(const std::vector<CycMatrix>& blocks) const;

 private:
  HeckeParams params_;
  std::vector<Rep> reps_;
  std::vector<std::vector<CycNum>> jm_diag_;  // [rep][k*dim + basisindex]
  Eigen::Index total_dim_ = 0;
};

struct BasisElement {
  LatticePoint lattice;
  std::vector<int> perm;  // image list
  int tau_weight;         // |lambda| mod p
  std::vector<CycMatrix> blocks;
  CycVector vectorized;
};

struct FullBasisResult {
  std::vector<BasisElement> elements;
  long rank;
  bool independent;  // rank == r^n n!
};

/// Evaluates {X^lambda T_w : lambda in C_r, w in S_n} in Pi and re-proves
/// basis-hood by an exact rank computation.  Throws CapExceeded /
/// RankDeficient.
FullBasisResult full_basis_images(const HeckeParams& params,
                                  unsigned long cap = 4096);

struct FixedSubspaceReport {
  long expected_dim;          // r^n n! / p
  long dim_weight0;           // span of tau-weight-0 basis elements
  long dim_lp_filter;         // span of the L_p cap C_r sub-basis
  long dim_subalgebra_words;  // span of words in t_0, t_1, t_i
  bool containment_ok;        // word span inside weight-0 span
  bool labels_match;          // weight-0 labels == L_p cap C_r labels
  std::vector<long> eigenspace_dims;  // all tau-eigenspaces, index = weight
  bool pass() const {
    return dim_weight0 == expected_dim && dim_lp_filter == expected_dim &&
           dim_subalgebra_words == expected_dim && containment_ok && labels_match;
  }
};

/// The fixed-subalgebra identity at desk scale: the tau-fixed span equals
/// both the L_p cap C_r
/// sub-basis span and the span of words in the subalgebra generators.
FixedSubspaceReport fixed_subspace_check(const HeckeParams& params,
                                         unsigned long cap = 4096);

/// Affine alphabet letters: +1 = X, -1 = X^{-1}, k >= 2 = T_k.
using AffineWord = std::vector<int>;

struct DiagramCheck {
  AffineWord word;
  int tau_weight;
  bool scaling_commutes;  // evaluate(tau(word)) == xi^weight * evaluate(word)
  bool in_fixed_span;     // only meaningful when weight == 0
};

struct DiagramReport {
  std::vector<DiagramCheck> checks;
  bool subalgebra_words_in_fixed_span;
  bool pass;
};

/// The labeled square of the quotient diagram: tau-scaling an affine word and
/// evaluating agrees with evaluating and applying the basis-level tau, and
/// words in {X^p, X^{-1} T_2 X, T_i} land in the fixed span.
DiagramReport commutative_diagram_check(const HeckeParams& params,
                                        unsigned long cap = 4096);

}  // namespace imprim
