#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imprim/seminormal.hpp"

namespace imprim {

/// The twisted module ^tau V: T_1 acts by xi^{-1} times the old image, the
/// other generators are unchanged.  The defining relations survive because
/// the u-multiset is permuted by the twist.
Rep tau_twist(const Rep& rep);

/// Permutation matrix of the relabeling v(T) -> v(shift T) from V(lambda)
/// to V(shift lambda).
CycMatrix shift_relabeling(const Rep& from, const Rep& to);

struct IntertwinerResult {
  bool ok;
  CycMatrix map;        // the relabeling matrix R when ok
  std::string witness;  // failing generator/basis vector otherwise
};

/// The identity tau o shift = 1, exactly: the relabeling R intertwines
/// build_rep(lambda) with tau_twist(build_rep(shift lambda)).
IntertwinerResult verify_tau_shift_inverse(const MultiPartition& lambda,
                                           const HeckeParams& params);

/// Images of the subalgebra generators t_0 = T_1^p, t_1 = T_1^{-1} T_2 T_1,
/// t_i = T_i.  T_1^{-1} is computed as the polynomial in T_1 provided by the
/// defining relation prod(T_1 - u_j) = 0 (throws NonInvertible if any u_j = 0).
struct SubalgebraGens {
  std::vector<CycMatrix> t;  // t[0] = t_0, t[1] = t_1 (n >= 2), then t_2..t_n
  std::vector<std::string> names;
};

SubalgebraGens restrict_to_subalgebra(const Rep& rep);

/// T_1^{-1} as the explicit polynomial in T_1.
CycMatrix t1_inverse_by_polynomial(const Rep& rep);

struct Summand {
  int label;            // l in 0..e-1, the omega^l eigenvalue of U
  Eigen::Index dimension;
  CycMatrix projector;  // exact idempotent
};

struct DecompositionReport {
  MultiPartition shape;
  unsigned e_lambda = 1;
  unsigned orbit_size = 1;  // |cyclic class| = p / e_lambda
  std::vector<Summand> summands;
  CycMatrix intertwiner_u;  // relabeling by shift^{p/e_lambda}
  long commutant_dimension = 0;
};

/// Clifford decomposition of Res V(lambda) to the subalgebra: projectors
/// P_l = (1/e) sum_k omega^{-lk} U^k from the relabeling intertwiner U.
/// Verifies the projector identities, invariance, equal dimensions, and the
/// commutant dimension (= e_lambda) by an independent nullspace computation.
DecompositionReport decompose_restriction(const Rep& rep);

struct InducedModule {
  MultiPartition orbit_representative;
  int pi_label;                    // character of G_lambda = Z/e
  unsigned e_lambda, orbit_size;
  std::vector<CycMatrix> h_gens;   // block images of T_1..T_n
  CycMatrix g_op;                  // the order-p smash generator
  Eigen::Index dimension;
};

struct CensusReport {
  std::vector<InducedModule> simples;
  unsigned long sum_dim_sq = 0;
  unsigned long expected_sum_dim_sq = 0;  // p * r^n * n!
  bool all_simple = false;
  bool spectra_separate_classes = false;
  bool within_class_nonisomorphic = false;
  bool ok() const {
    return all_simple && spectra_separate_classes && within_class_nonisomorphic &&
           sum_dim_sq == expected_sum_dim_sq;
  }
};

/// Simple modules of the smash product H x Z/p via Clifford induction: one
/// module per (cyclic class, character of the stabilizer).  Verifies
/// simplicity (commutant = scalars), the census size Sum e_lambda, the
/// dimension identity Sum dims^2 = p r^n n!, and pairwise non-isomorphism.
CensusReport smash_product_census(const HeckeParams& params);

}  // namespace imprim
