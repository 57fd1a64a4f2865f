#pragma once

#include <map>
#include <string>
#include <vector>

#include "imprim/clifford.hpp"
#include "imprim/refgroup.hpp"
#include "imprim/seminormal.hpp"
#include "imprim/unipoly.hpp"

namespace imprim {

/// Multivariate polynomial in x_1..x_n over Q(zeta), exponent-map
/// representation with no zero terms stored.
class Poly {
 public:
  explicit Poly(unsigned nvars) : nvars_(nvars) {}
  static Poly constant(unsigned nvars, const CycNum& c);
  static Poly variable(unsigned nvars, unsigned i);  // 0-based
  static Poly monomial(unsigned nvars, std::vector<int> exps, const CycNum& c);

  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  const std::map<std::vector<int>, CycNum>& terms() const { return terms_; }
  CycNum coeff(const std::vector<int>& exps) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const CycNum& s) const;
  Poly derivative(unsigned i) const;

  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  void add_term(const std::vector<int>& exps, const CycNum& c);
  std::string to_string() const;

 private:
  unsigned nvars_;
  std::map<std::vector<int>, CycNum> terms_;
};

/// Action of g on polynomials, (g.f)(x) = f(g^{-1} x); on degree one,
/// g . x_j = zeta^{-e_j} x_{perm(j)}.
Poly act(const MonomialMatrix& g, const Poly& f);

/// Exact division by a linear form; throws DivisibilityFailure when the
/// remainder is nonzero.
Poly divide_by_linear(const Poly& f, const std::vector<CycNum>& linear);

/// Element of the group algebra supported in one stabilizer W_H (or any
/// finite support).
class GroupAlgElt {
 public:
  GroupAlgElt() = default;
  void add_term(const MonomialMatrix& g, const CycNum& c);
  const std::map<MonomialMatrix, CycNum>& terms() const { return terms_; }
  CycNum coeff(const MonomialMatrix& g) const;
  bool is_zero() const { return terms_.empty(); }

  GroupAlgElt operator+(const GroupAlgElt& o) const;
  GroupAlgElt operator*(const GroupAlgElt& o) const;  // convolution
  GroupAlgElt scaled(const CycNum& s) const;
  bool operator==(const GroupAlgElt& o) const { return terms_ == o.terms_; }

  Poly apply(const Poly& f) const;
  /// tau termwise: each g scaled by xi^{|exps(g)|}.
  GroupAlgElt tau_applied(unsigned p, const CycNum& xi) const;

 private:
  std::map<MonomialMatrix, CycNum> terms_;
};

/// One reflection hyperplane with everything the Dunkl layer needs.
struct HyperplaneData {
  Hyperplane h;
  std::vector<CycNum> alpha;           // the linear form alpha_H
  std::vector<CycNum> v_H;             // normal with <alpha_H, v_H> as below
  CycNum alpha_v_pairing;              // <alpha_H, v_H> (1 coord, 2 diff)
  std::vector<MonomialMatrix> stab;    // W_H \ {1}
  std::vector<CycNum> stab_det;        // det(w) for stab entries
  unsigned e = 0;                      // |W_H|
  int orbit = -1;                      // index into Arrangement::orbits
};

struct Arrangement {
  GroupParams gp;
  Which which = Which::Full;
  std::vector<HyperplaneData> hyperplanes;
  std::vector<unsigned> orbit_e;     // |W_H| per orbit
  int coordinate_orbit = -1;         // index of C_0, -1 when absent
  size_t orbit_count() const { return orbit_e.size(); }
};

Arrangement make_arrangement(const GroupParams& gp, Which which);

/// W-invariant c-function: one value per reflection, keyed by the element.
class CFunction {
 public:
  CFunction() = default;
  /// Full-group constructor from class data: c_coord[a-1] for the class of
  /// diag twists zeta^a (a = 1..r-1), c_diff for the transposition-like class.
  static CFunction from_class_values(const GroupParams& gp,
                                     std::vector<CycNum> c_coord, CycNum c_diff);
  static CFunction zero(const GroupParams& gp);

  CycNum value(const MonomialMatrix& g) const;
  void set_value(const MonomialMatrix& g, const CycNum& c);
  const std::map<MonomialMatrix, CycNum>& values() const { return values_; }
  /// Restriction to the reflections of a smaller arrangement.
  CFunction restricted(const Arrangement& arr) const;

 private:
  std::map<MonomialMatrix, CycNum> values_;
};

/// k-parameters per orbit: vector of length e+1 with k[0] = k[e] = 0.
struct KTable {
  std::vector<std::vector<CycNum>> k;
  const CycNum& at(int orbit, unsigned i) const { return k[orbit][i]; }
};

GroupAlgElt gamma_from_c(const HyperplaneData& hd, const CFunction& c);
GroupAlgElt epsilon_idempotent(const HyperplaneData& hd, unsigned j);
GroupAlgElt a_H_elt(const HyperplaneData& hd, const std::vector<CycNum>& korbit);

/// Unique k with zero boundary solving the gamma dictionary on each orbit.
KTable k_from_c(const Arrangement& arr, const CFunction& c);
CFunction c_from_k(const Arrangement& arr, const KTable& k);

struct TauCompatibilityReport {
  bool c_vanishes_on_excluded;   // c_g = 0 off the subgroup
  bool k_sum_vanishes;           // sum_j k_j det(w)^j = 0 on excluded w
  bool k_periodic_pattern;             // k_{i} = k_{j} for i = j mod d on C_0
  bool remark_sums_vanish;       // the geometric-sum computation, term by term
  std::string witness;
  bool pass() const { return c_vanishes_on_excluded && k_sum_vanishes; }
};

/// The three equivalent-by-the-paper conditions, reported separately.
TauCompatibilityReport check_tau_compatibility(const Arrangement& arr_full,
                                               const CFunction& c,
                                               const KTable& k);

/// T_y f for y = eps_{y_index} (0-based), built from the arrangement and the
/// orbit k-tables.  Exact; asserts divisibility of every hyperplane term.
Poly dunkl_apply(unsigned y_index, const Poly& f, const KTable& k,
                 const Arrangement& arr);

struct CommutationReport {
  bool dunkl_commute;       // [T_y, T_{y'}] = 0 up to degree D
  bool relation2_holds;     // [T_y, x.] = <y,x> + sum coeff gamma_H
  bool equivariant;         // w T_y w^{-1} = T_{w(y)} on generators
  std::string witness;
  bool pass() const { return dunkl_commute && relation2_holds && equivariant; }
};

CommutationReport verify_commutation(const KTable& k, const CFunction& c,
                                     const Arrangement& arr, unsigned degree);

/// PBW basis label x^alpha g y^beta; tau scales it by xi^{|exps(g)|}.
struct PBWMonomial {
  std::vector<int> alpha;
  MonomialMatrix g;
  std::vector<int> beta;
  int tau_weight;
};

struct TauInvarianceReport {
  bool gammas_invariant;
  bool relation2_rhs_invariant;
  bool pbw_filter_matches;
  std::string witness;
  bool pass() const {
    return gammas_invariant && relation2_rhs_invariant && pbw_filter_matches;
  }
};

/// tau-invariance of the defining data and the PBW weight filter.
TauInvarianceReport verify_tau_invariance(const CFunction& c, const GroupParams& gp,
                                          unsigned pbw_degree = 2);

/// The Dunkl operators of G(r,1,n) and of G(r,p,n) (with the restricted
/// c-function) agree as operators on polynomials of degree <= D.
bool dunkl_agreement(const CFunction& c, const GroupParams& gp, unsigned degree,
                     std::string* witness = nullptr);

struct GradedRestrictionReport {
  MultiPartition shape;
  unsigned e_lambda;
  std::vector<bool> degree_match;           // index = degree
  bool class_functions_ok;                  // summand traces constant on classes
  bool shift_partner_match;                 // Res agrees with Res of shift
  bool pass() const {
    for (bool b : degree_match)
      if (!b) return false;
    return class_functions_ok && shift_partner_match;
  }
};

/// Characters of C[V]_d (x) V(lambda) as G(r,p,n)-class functions versus the
/// sum of the Clifford summand characters, degree by degree, at the group
/// specialization.
GradedRestrictionReport graded_restriction(const MultiPartition& lambda,
                                           const GroupParams& gp, unsigned degree);

/// Exact reflection-group degrees r, 2r, ..., nr, verified against the
/// Molien series of invariants before use.
std::vector<unsigned> verified_degrees(const GroupParams& gp);

/// Fake degree of the character chi (a function on group elements given as
/// traces of a group-mode Rep, or any class function).
UniPoly fake_degree_of_character(
    const GroupParams& gp, const std::vector<MonomialMatrix>& elements,
    const std::map<MonomialMatrix, CycNum>& chi);

UniPoly fake_degree(const MultiPartition& lambda, const GroupParams& gp);

struct FakeShiftResult {
  bool ok;
  long m;  // F_{tau V} = t^m F_V
  UniPoly f_lambda, f_twisted;
};

/// The fake degree of the tau-twisted module is a monomial shift of
/// the original; the exponent m is computed, not asserted.
FakeShiftResult verify_fake_shift(const MultiPartition& lambda,
                                  const GroupParams& gp);

/// Sum over all simples of dim * fake degree equals the Poincare polynomial
/// of the coinvariant algebra prod (1 + t + ... + t^{d_i - 1}).
bool fake_degrees_sum_to_poincare(const GroupParams& gp, std::string* witness = nullptr);

/// Heckman-Opdam shift on parameters: C_0 entries drop by 1/p per
/// application; the zero-boundary convention cannot survive, so the shift is
/// carried as an affine offset on the coordinate orbit.
struct ShiftedKTable {
  KTable base;
  int coordinate_orbit = -1;
  CycNum coordinate_offset = CycNum(0);
  CycNum value(int orbit, unsigned i) const {
    CycNum v = base.k[orbit][i];
    if (orbit == coordinate_orbit) v += coordinate_offset;
    return v;
  }
};

ShiftedKTable heckman_opdam_shift(const ShiftedKTable& k, const GroupParams& gp);

}  // namespace imprim
