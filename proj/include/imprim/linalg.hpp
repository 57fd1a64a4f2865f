#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "imprim/cyclotomic.hpp"

namespace Eigen {

template <>
struct NumTraits<imprim::CycNum> : GenericNumTraits<imprim::CycNum> {
  typedef imprim::CycNum Real;
  typedef imprim::CycNum NonInteger;
  typedef imprim::CycNum Nested;
  typedef imprim::CycNum Literal;
  static inline Real epsilon() { return imprim::CycNum(0); }
  static inline Real dummy_precision() { return imprim::CycNum(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,  // conj() is a no-op; we apply Galois maps explicitly
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 128,
  };
};

}  // namespace Eigen

namespace imprim {

using CycMatrix = Eigen::Matrix<CycNum, Eigen::Dynamic, Eigen::Dynamic>;
using CycVector = Eigen::Matrix<CycNum, Eigen::Dynamic, 1>;

inline bool mat_is_zero(const CycMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline bool mat_equal(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Lifts every entry into Q(zeta_M) where M is the lcm of all entry orders,
/// restoring the one-field-order-per-matrix invariant after mixed arithmetic.
CycMatrix mat_with_common_order(const CycMatrix& m);
unsigned mat_field_order(const CycMatrix& m);

/// Exact row reduction.  Pivots are chosen among the rows of the current
/// column by largest coefficient support (ties to the lowest row index),
/// which keeps the choice deterministic.
long exact_rank(CycMatrix a);

/// Solves A X = B exactly.  Returns one solution (free variables set to 0)
/// or nullopt when the system is inconsistent.
std::optional<CycMatrix> exact_solve(CycMatrix a, CycMatrix b);

/// Basis of the right nullspace, one column per basis vector (possibly 0 cols).
CycMatrix exact_nullspace(CycMatrix a);

CycMatrix exact_inverse(const CycMatrix& a);  // throws NonInvertible
CycNum exact_det(CycMatrix a);

/// Incremental row-space accumulator in reduced echelon form.  Used for the
/// span comparisons where vectors arrive one at a time.
class RowBasis {
 public:
  explicit RowBasis(Eigen::Index width) : width_(width) {}

  /// Returns true when v enlarged the span.
  bool add(CycVector v);
  bool contains(CycVector v) const;
  long rank() const { return static_cast<long>(rows_.size()); }
  Eigen::Index width() const { return width_; }

 private:
  void reduce(CycVector& v) const;
  Eigen::Index width_;
  std::vector<std::pair<Eigen::Index, CycVector>> rows_;  // (pivot, row), pivot=1
};

}  // namespace imprim
