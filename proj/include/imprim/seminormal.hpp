#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imprim/linalg.hpp"
#include "imprim/refgroup.hpp"
#include "imprim/tableaux.hpp"
#include "imprim/unipoly.hpp"

namespace imprim {

/// Parameters of the cyclotomic Hecke algebra H_{r,1,n}(u_1..u_r, q).
/// The u's are derived from (xi, v) by u_j = xi^k v_l for j-1 = l*p + k, so
/// that prod_j (X - u_j) = prod_l (X^p - v_l^p).
struct HeckeParams {
  GroupParams gp;
  CycNum q;
  std::vector<CycNum> v;   // v_0..v_{d-1}
  CycNum xi;               // primitive p-th root of unity
  std::vector<CycNum> u;   // derived, u[j-1] = u_j
  bool group_mode = false; // q = 1 specialization onto C G(r,1,n)

  static HeckeParams defaults(const GroupParams& gp);
  /// q = 1, v_l = zeta_r^l, xi = zeta_r^d; realizes C G(r,1,n) with
  /// {u_j} = all r-th roots of unity (in the Eq-(3) order).
  static HeckeParams group_specialization(const GroupParams& gp);
  /// Custom parameters; validates and derives u.
  static HeckeParams make(const GroupParams& gp, const CycNum& q,
                          std::vector<CycNum> v);

  void derive_u();
  /// v_i^p pairwise distinct (needed for the shift intertwiners).
  bool v_powers_distinct() const;
  /// prod_j (X - u_j) as an exact polynomial.
  UniPoly t1_min_poly() const;
  /// Checks prod_j (X - u_j) = prod_l (X^p - v_l^p) coefficient-wise.
  bool uv_polynomial_identity_holds() const;
};

/// The residue rho(T, k) = xi^a v_b q^c attached to the cell of entry k.
CycNum residue(const StdTableau& t, unsigned k, const HeckeParams& params);

/// A concrete simple module: generator images on the standard-tableau basis.
struct Rep {
  HeckeParams params;
  MultiPartition shape;
  std::vector<StdTableau> basis;
  std::vector<CycMatrix> gens;  // gens[i-1] = image of T_i

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
  /// Image of a word in the generators; letters are (index 1..n, power),
  /// negative powers use the exact inverse.
  CycMatrix word_image(const GroupWord& word) const;
  CycNum character(const GroupWord& word) const;
  int basis_index(const StdTableau& t) const;  // -1 if absent
};

/// Seminormal construction.  Throws SeparationFailure for degenerate
/// parameters and RelationFailure if the defining relations do not hold on
/// the produced matrices (verified, not assumed, unless verify = false).
Rep build_rep(const MultiPartition& shape, const HeckeParams& params,
              bool verify = true);

struct RelationCheck {
  std::string family;      // "commuting", "braid", "braid01", "t1poly", "quadratic"
  std::string description;
  bool ok;
  std::string witness;     // failing basis column, empty when ok
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

RelationReport verify_relations(const Rep& rep);

/// The Jucys-Murphy images X^{eps_k} = T_k..T_2 T_1 T_2..T_k for k = 1..n.
/// Each is diagonal on the tableau basis with entries q^{k-1} rho(T, k);
/// assert_diagonal makes that an enforced check.
std::vector<CycMatrix> jm_matrices(const Rep& rep, bool assert_diagonal = true);

/// Sum over all shapes of (dim V(lambda))^2; equals r^n n! for semisimple
/// parameters.
unsigned long dimension_identity_sum(const HeckeParams& params);
unsigned long group_order(const GroupParams& gp);

/// Sorted multiset of all JM eigenvalues, one vector per k; distinguishes
/// non-isomorphic modules.
std::vector<std::vector<CycNum>> jm_spectra(const Rep& rep);

/// Image of a group element in a group-mode Rep (via its word).
CycMatrix group_image(const Rep& rep, const MonomialMatrix& g);
/// Trace of a group element; group-mode Rep only.
CycNum group_character(const Rep& rep, const MonomialMatrix& g);

}  // namespace imprim
