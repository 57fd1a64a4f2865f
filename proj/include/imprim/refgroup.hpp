#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "imprim/linalg.hpp"

namespace imprim {

struct GroupParams {
  unsigned r = 1, p = 1, n = 1;
  GroupParams() = default;
  GroupParams(unsigned r_, unsigned p_, unsigned n_) : r(r_), p(p_), n(n_) {
    validate();
  }
  unsigned d() const { return r / p; }
  void validate() const {
    if (r == 0 || p == 0 || n == 0 || r % p != 0)
      fail(ErrorKind::BadParams, "G(r,p,n) needs r,p,n >= 1 and p | r");
  }
  std::string label() const;
};

/// Element of G(r,1,n) as a monomial matrix: column i carries zeta_r^exps[i]
/// in row perm[i] (0-based).  Composition, inverse and determinant stay in
/// the (perm, exps) encoding; densification is on demand.
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  MonomialMatrix(std::vector<int> perm, std::vector<int> exps, unsigned r);

  static MonomialMatrix identity(unsigned n, unsigned r);
  /// diag(1,...,zeta_r^k,...,1) with the twist in position i.
  static MonomialMatrix diag_unit(unsigned n, unsigned r, int i, int k);
  /// The reflection fixing x_i = zeta_r^k x_j pointwise (i != j).
  static MonomialMatrix difference_reflection(unsigned n, unsigned r, int i,
                                              int j, int k);

  unsigned n() const { return static_cast<unsigned>(perm_.size()); }
  unsigned r() const { return r_; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& exps() const { return exps_; }

  MonomialMatrix operator*(const MonomialMatrix& o) const;
  MonomialMatrix inverse() const;
  MonomialMatrix pow(long e) const;

  bool operator==(const MonomialMatrix& o) const {
    return r_ == o.r_ && perm_ == o.perm_ && exps_ == o.exps_;
  }
  bool operator<(const MonomialMatrix& o) const {
    if (perm_ != o.perm_) return perm_ < o.perm_;
    return exps_ < o.exps_;
  }

  int exponent_sum() const;  // reduced mod r
  int perm_sign() const;
  CycNum det() const;  // sign(perm) * zeta_r^{exponent sum}
  bool is_identity() const;

  CycMatrix to_dense() const;

  std::string to_string() const;

 private:
  std::vector<int> perm_;
  std::vector<int> exps_;
  unsigned r_ = 1;
};

/// A reflection hyperplane in canonical form.  Coordinate(i): x_i = 0.
/// Difference(i, j, k): x_i = zeta_r^k x_j with i < j, 0 <= k < r.
struct Hyperplane {
  enum class Kind { Coordinate, Difference };
  Kind kind;
  int i = 0, j = 0, k = 0;
  unsigned e_H = 0;  // order of the pointwise stabilizer in the chosen group

  bool operator==(const Hyperplane& o) const {
    return kind == o.kind && i == o.i && j == o.j && k == o.k;
  }
  bool operator<(const Hyperplane& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return k < o.k;
  }
  std::string to_string() const;
};

enum class Which { Full, Subgroup };

/// Defining generators: Full gives S_1 (exponent twist) and the adjacent
/// transpositions S_2..S_n; Subgroup gives s_0 = S_1^p, s_1 = S_1 S_2 S_1,
/// s_i = S_i as words in the full generators.
std::vector<MonomialMatrix> generators(const GroupParams& gp, Which which);

/// True iff g lies in G(r,p,n): exponent sum == 0 mod p.
bool is_member(const MonomialMatrix& g, const GroupParams& gp);

/// All elements, in a deterministic order.  Throws CapExceeded when
/// r^n * n! > cap.
std::vector<MonomialMatrix> enumerate(const GroupParams& gp, Which which,
                                      unsigned long cap = 1000000);

/// Closure of a generating set under multiplication (used to cross-check
/// enumerate against the presentations).
std::set<MonomialMatrix> closure(const std::vector<MonomialMatrix>& gens,
                                 unsigned long cap = 1000000);

/// The reflections of the chosen group, each paired with its hyperplane
/// (e_H filled in for that group).
std::vector<std::pair<MonomialMatrix, Hyperplane>> reflections(
    const GroupParams& gp, Which which);

/// Image of a hyperplane under g.
Hyperplane hyperplane_image(const Hyperplane& h, const MonomialMatrix& g,
                            const GroupParams& gp);

struct HyperplaneOrbit {
  std::vector<Hyperplane> members;  // sorted
  bool is_coordinate_orbit = false;  // the coordinate-hyperplane orbit C_0
};

std::vector<HyperplaneOrbit> hyperplane_orbits(const GroupParams& gp,
                                               Which which);

/// tau on the group-algebra basis element g: the scalar xi^{exponent sum}
/// together with g itself.  xi must be a primitive p-th root of unity.
std::pair<CycNum, MonomialMatrix> tau_on_group_element(const MonomialMatrix& g,
                                                       unsigned p,
                                                       const CycNum& xi);

/// Word letters: (generator index in 1..n, power).  Generator 1 may carry any
/// power mod r; the transpositions only appear with power 1.
using GroupWord = std::vector<std::pair<int, int>>;

/// Deterministic factorization of g into defining generators
/// (bubble-sort reduced word for the permutation part, exponent twists as
/// palindromic conjugates of S_1).  eval_word(to_word(g)) == g.
GroupWord to_word(const MonomialMatrix& g);
MonomialMatrix eval_word(const GroupWord& w, const GroupParams& gp);

/// S_n permutation part factored into adjacent transpositions; returns the
/// generator indices (2..n) of a reduced word for the permutation.
std::vector<int> bubble_sort_word(const std::vector<int>& perm);

/// Conjugacy classes of the chosen group, each class sorted, classes ordered
/// by their minimal element.
std::vector<std::vector<MonomialMatrix>> conjugacy_classes(
    const GroupParams& gp, Which which);

}  // namespace imprim
