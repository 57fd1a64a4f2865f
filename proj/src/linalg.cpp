#include "imprim/linalg.hpp"

#include <numeric>

#include "imprim/errors.hpp"

namespace imprim {

unsigned mat_field_order(const CycMatrix& m) {
  unsigned long M = 1;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      M = std::lcm(M, static_cast<unsigned long>(m(i, j).order()));
  return static_cast<unsigned>(M);
}

CycMatrix mat_with_common_order(const CycMatrix& m) {
  unsigned M = mat_field_order(m);
  CycMatrix out = m;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      out(i, j) = m(i, j).lifted_to(M);
  return out;
}

namespace {

// In-place forward elimination; returns pivot (row, col) pairs.
std::vector<std::pair<Eigen::Index, Eigen::Index>> eliminate(CycMatrix& a) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index best = -1;
    int best_support = -1;
    for (Eigen::Index i = row; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      int s = a(i, col).support();
      if (s > best_support) {
        best_support = s;
        best = i;
      }
    }
    if (best < 0) continue;
    if (best != row) a.row(row).swap(a.row(best));
    CycNum inv = a(row, col).inverse();
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      CycNum f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j)
        a(i, j) = a(i, j) - f * a(row, j);
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  return pivots;
}

}  // namespace

long exact_rank(CycMatrix a) { return static_cast<long>(eliminate(a).size()); }

std::optional<CycMatrix> exact_solve(CycMatrix a, CycMatrix b) {
  if (a.rows() != b.rows())
    fail(ErrorKind::DimensionMismatch, "solve: row counts differ");
  Eigen::Index n = a.cols(), k = b.cols();
  CycMatrix aug(a.rows(), n + k);
  aug << a, b;
  auto pivots = eliminate(aug);
  // Inconsistent iff some pivot landed in the appended block.
  for (auto& [r, c] : pivots)
    if (c >= n) return std::nullopt;
  CycMatrix x = CycMatrix::Constant(n, k, CycNum(0));
  for (auto& [r, c] : pivots)
    for (Eigen::Index j = 0; j < k; ++j) x(c, j) = aug(r, n + j);
  return x;
}

CycMatrix exact_nullspace(CycMatrix a) {
  Eigen::Index n = a.cols();
  auto pivots = eliminate(a);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (auto& [r, c] : pivots) is_pivot[static_cast<size_t>(c)] = true;
  Eigen::Index freecnt = n - static_cast<Eigen::Index>(pivots.size());
  CycMatrix basis = CycMatrix::Constant(n, freecnt, CycNum(0));
  Eigen::Index out = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    basis(f, out) = CycNum(1);
    for (auto& [r, c] : pivots) basis(c, out) = -a(r, f);
    ++out;
  }
  return basis;
}

CycMatrix exact_inverse(const CycMatrix& a) {
  if (a.rows() != a.cols())
    fail(ErrorKind::NonInvertible, "inverse of non-square matrix");
  auto sol = exact_solve(a, CycMatrix::Identity(a.rows(), a.rows()));
  if (!sol || exact_rank(a) != a.rows())
    fail(ErrorKind::NonInvertible, "singular matrix");
  return *sol;
}

CycNum exact_det(CycMatrix a) {
  if (a.rows() != a.cols())
    fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  CycNum det(1);
  Eigen::Index n = a.rows(), row = 0;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index best = -1;
    int best_support = -1;
    for (Eigen::Index i = row; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      int s = a(i, col).support();
      if (s > best_support) {
        best_support = s;
        best = i;
      }
    }
    if (best < 0) return CycNum(0);
    if (best != row) {
      a.row(row).swap(a.row(best));
      det = -det;
    }
    det *= a(row, col);
    CycNum inv = a(row, col).inverse();
    for (Eigen::Index i = row + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      CycNum f = a(i, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(row, j);
    }
    ++row;
  }
  return det;
}

void RowBasis::reduce(CycVector& v) const {
  for (const auto& [pivot, row] : rows_) {
    if (v(pivot).is_zero()) continue;
    CycNum f = v(pivot);
    for (Eigen::Index j = 0; j < width_; ++j) v(j) = v(j) - f * row(j);
  }
}

bool RowBasis::add(CycVector v) {
  if (v.size() != width_) fail(ErrorKind::DimensionMismatch, "RowBasis width");
  reduce(v);
  Eigen::Index pivot = -1;
  for (Eigen::Index j = 0; j < width_; ++j) {
    if (!v(j).is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  CycNum inv = v(pivot).inverse();
  for (Eigen::Index j = pivot; j < width_; ++j) v(j) = v(j) * inv;
  // keep existing rows reduced against the new one
  for (auto& [p, row] : rows_) {
    if (row(pivot).is_zero()) continue;
    CycNum f = row(pivot);
    for (Eigen::Index j = 0; j < width_; ++j) row(j) = row(j) - f * v(j);
  }
  rows_.emplace_back(pivot, std::move(v));
  return true;
}

bool RowBasis::contains(CycVector v) const {
  if (v.size() != width_) fail(ErrorKind::DimensionMismatch, "RowBasis width");
  reduce(v);
  for (Eigen::Index j = 0; j < width_; ++j)
    if (!v(j).is_zero()) return false;
  return true;
}

}  // namespace imprim
