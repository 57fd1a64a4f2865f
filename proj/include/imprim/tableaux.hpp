#pragma once

#include <string>
#include <vector>

#include "imprim/errors.hpp"

namespace imprim {

using Partition = std::vector<int>;  // weakly decreasing positive parts

/// An r-tuple of Young diagrams for r = p*d.  Components are stored in the
/// flat order matching the Hecke parameters u_1..u_r: the component at grid
/// position (i, j) with 0 <= i < p (the shift index) and 0 <= j < d (the
/// v index) sits at flat index j*p + i, so that a cell there pairs with
/// u_{flat+1} = xi^i v_j.
class MultiPartition {
 public:
  MultiPartition() : MultiPartition(1, 1, {{}}) {}  // empty shape of G(1,1,.)
  MultiPartition(unsigned p, unsigned d, std::vector<Partition> comps);

  unsigned p() const { return p_; }
  unsigned d() const { return d_; }
  unsigned r() const { return p_ * d_; }
  unsigned n() const { return n_; }

  const Partition& comp_flat(unsigned f) const { return comps_[f]; }
  const Partition& comp(unsigned i, unsigned j) const {
    return comps_[j * p_ + i];
  }
  const std::vector<Partition>& comps() const { return comps_; }

  MultiPartition shifted() const;  // (i, j) -> (i+1 mod p, j)

  bool operator==(const MultiPartition& o) const {
    return p_ == o.p_ && d_ == o.d_ && comps_ == o.comps_;
  }
  bool operator<(const MultiPartition& o) const { return comps_ < o.comps_; }

  std::string to_string() const;

 private:
  unsigned p_, d_, n_;
  std::vector<Partition> comps_;  // size p*d
};

/// Position of one entry: flat component index and 1-based row/column.
struct Cell {
  int comp = 0;  // flat component index
  int row = 0;   // 1-based
  int col = 0;   // 1-based
  bool operator==(const Cell& o) const {
    return comp == o.comp && row == o.row && col == o.col;
  }
  bool operator<(const Cell& o) const {
    if (comp != o.comp) return comp < o.comp;
    if (row != o.row) return row < o.row;
    return col < o.col;
  }
};

/// Standard tableau of a given multipartition shape: the bijection
/// {1..n} -> cells with rows and columns strictly increasing inside each
/// component.
class StdTableau {
 public:
  StdTableau(MultiPartition shape, std::vector<Cell> positions);

  const MultiPartition& shape() const { return shape_; }
  unsigned n() const { return shape_.n(); }
  const Cell& cell_of(unsigned entry) const {  // entry in 1..n
    return positions_[entry - 1];
  }

  /// (a, b, c) data of one entry: a = component shift-index i (0..p-1),
  /// b = component v-index as the 1-based column j (1..d), c = col - row.
  struct CellData {
    int a, b, c;
  };
  CellData cell_data(unsigned entry) const;

  bool is_standard() const;

  StdTableau shifted() const;
  /// Swap the positions of entries y and y+1 (result may be non-standard).
  StdTableau with_swapped(unsigned y) const;

  /// Entry-position key for deterministic ordering and lookups.
  std::vector<int> key() const;

  bool operator==(const StdTableau& o) const {
    return shape_ == o.shape_ && positions_ == o.positions_;
  }

  std::string to_string() const;

 private:
  MultiPartition shape_;
  std::vector<Cell> positions_;  // positions_[y-1] = cell of entry y
};

/// All r-tuples of partitions with p rows and d columns of total size n,
/// in a fixed documented order (component sizes chosen first-component-
/// largest first; partitions of a given size in reverse-lex order).
std::vector<MultiPartition> multipartitions(unsigned r, unsigned p, unsigned n);

/// Partitions of m, largest part first ((m), (m-1,1), ..., (1^m)).
std::vector<Partition> partitions_of(int m);

/// Complete duplicate-free enumeration, sorted by entry-position keys.
std::vector<StdTableau> standard_tableaux(const MultiPartition& shape);

struct CyclicClass {
  MultiPartition representative;  // lexicographically minimal rotation
  unsigned class_size;            // |orbit| = least k > 0 with shift^k = id
  unsigned e_lambda;              // p / class_size
  unsigned stabilizer_exponent;   // p / e_lambda
};

CyclicClass cyclic_class(const MultiPartition& lambda);

}  // namespace imprim
