#include "imprim/tableaux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace imprim {

MultiPartition::MultiPartition(unsigned p, unsigned d,
                               std::vector<Partition> comps)
    : p_(p), d_(d), comps_(std::move(comps)) {
  if (p_ == 0 || d_ == 0 || comps_.size() != static_cast<size_t>(p_) * d_)
    fail(ErrorKind::BadParams, "multipartition grid mismatch");
  unsigned total = 0;
  for (const auto& part : comps_) {
    for (size_t i = 0; i < part.size(); ++i) {
      if (part[i] <= 0 || (i + 1 < part.size() && part[i] < part[i + 1]))
        fail(ErrorKind::BadParams, "component is not a partition");
      total += static_cast<unsigned>(part[i]);
    }
  }
  n_ = total;
}

MultiPartition MultiPartition::shifted() const {
  std::vector<Partition> out(comps_.size());
  for (unsigned j = 0; j < d_; ++j)
    for (unsigned i = 0; i < p_; ++i)
      out[j * p_ + (i + 1) % p_] = comps_[j * p_ + i];
  return MultiPartition(p_, d_, std::move(out));
}

std::string MultiPartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t f = 0; f < comps_.size(); ++f) {
    if (f) os << "|";
    if (comps_[f].empty()) os << "-";
    for (size_t i = 0; i < comps_[f].size(); ++i)
      os << (i ? "," : "") << comps_[f][i];
  }
  os << ")";
  return os.str();
}

StdTableau::StdTableau(MultiPartition shape, std::vector<Cell> positions)
    : shape_(std::move(shape)), positions_(std::move(positions)) {
  if (positions_.size() != shape_.n())
    fail(ErrorKind::BadParams, "tableau entry count mismatch");
}

StdTableau::CellData StdTableau::cell_data(unsigned entry) const {
  const Cell& c = cell_of(entry);
  unsigned p = shape_.p();
  return {static_cast<int>(static_cast<unsigned>(c.comp) % p),
          static_cast<int>(static_cast<unsigned>(c.comp) / p) + 1,
          c.col - c.row};
}

bool StdTableau::is_standard() const {
  // entries strictly increase along rows and down columns of each component
  std::map<Cell, unsigned> entry_at;
  for (unsigned y = 1; y <= n(); ++y) entry_at[positions_[y - 1]] = y;
  for (auto& [cell, y] : entry_at) {
    Cell left = cell, up = cell;
    left.col -= 1;
    up.row -= 1;
    if (cell.col > 1 && entry_at.at(left) > y) return false;
    if (cell.row > 1 && entry_at.at(up) > y) return false;
  }
  return true;
}

StdTableau StdTableau::shifted() const {
  unsigned p = shape_.p();
  std::vector<Cell> pos = positions_;
  for (auto& c : pos) {
    unsigned i = static_cast<unsigned>(c.comp) % p;
    unsigned j = static_cast<unsigned>(c.comp) / p;
    c.comp = static_cast<int>(j * p + (i + 1) % p);
  }
  return StdTableau(shape_.shifted(), std::move(pos));
}

StdTableau StdTableau::with_swapped(unsigned y) const {
  std::vector<Cell> pos = positions_;
  std::swap(pos[y - 1], pos[y]);
  return StdTableau(shape_, std::move(pos));
}

std::vector<int> StdTableau::key() const {
  std::vector<int> k;
  k.reserve(positions_.size() * 3);
  for (const auto& c : positions_) {
    k.push_back(c.comp);
    k.push_back(c.row);
    k.push_back(c.col);
  }
  return k;
}

std::string StdTableau::to_string() const {
  std::ostringstream os;
  os << shape_.to_string() << "[";
  for (unsigned y = 1; y <= n(); ++y) {
    const Cell& c = positions_[y - 1];
    if (y > 1) os << " ";
    os << y << "@" << c.comp << ":" << c.row << "," << c.col;
  }
  os << "]";
  return os.str();
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  Partition cur;
  // reverse-lex: largest first part first
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

std::vector<MultiPartition> multipartitions(unsigned r, unsigned p,
                                            unsigned n) {
  if (p == 0 || r % p != 0) fail(ErrorKind::BadParams, "need p | r");
  unsigned d = r / p;
  std::vector<MultiPartition> out;
  std::vector<Partition> cur(r);
  auto rec = [&](auto&& self, unsigned f, unsigned remaining) -> void {
    if (f == r) {
      if (remaining == 0) out.emplace_back(p, d, cur);
      return;
    }
    unsigned lo = (f + 1 == r) ? remaining : 0;
    for (unsigned size = remaining;; --size) {
      if (size >= lo) {
        for (const auto& part : partitions_of(static_cast<int>(size))) {
          cur[f] = part;
          self(self, f + 1, remaining - size);
          cur[f].clear();
        }
      }
      if (size == 0) break;
    }
  };
  rec(rec, 0, n);
  return out;
}

namespace {

// Cells addable to a partial diagram keeping it a diagram; `rows` holds the
// current length of every row of the target shape (0 when still empty).
std::vector<std::pair<int, int>> addable_cells(const std::vector<int>& rows) {
  std::vector<std::pair<int, int>> out;
  for (size_t k = 0; k < rows.size(); ++k) {
    int above = k == 0 ? 1 << 30 : rows[k - 1];
    if (rows[k] < above) out.emplace_back(static_cast<int>(k) + 1, rows[k] + 1);
  }
  return out;
}

}  // namespace

std::vector<StdTableau> standard_tableaux(const MultiPartition& shape) {
  unsigned r = shape.r(), n = shape.n();
  std::vector<std::vector<int>> filled(r);  // current row lengths per component
  for (unsigned f = 0; f < r; ++f)
    filled[f].assign(shape.comp_flat(f).size(), 0);

  std::vector<Cell> pos(n);
  std::vector<StdTableau> out;
  auto rec = [&](auto&& self, unsigned entry) -> void {
    if (entry > n) {
      out.emplace_back(shape, pos);
      return;
    }
    for (unsigned f = 0; f < r; ++f) {
      const Partition& target = shape.comp_flat(f);
      for (auto [row, col] : addable_cells(filled[f])) {
        if (row > static_cast<int>(target.size())) continue;
        if (col > target[static_cast<size_t>(row) - 1]) continue;
        filled[f][static_cast<size_t>(row) - 1] = col;
        pos[entry - 1] = Cell{static_cast<int>(f), row, col};
        self(self, entry + 1);
        filled[f][static_cast<size_t>(row) - 1] = col - 1;
      }
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const StdTableau& a, const StdTableau& b) {
    return a.key() < b.key();
  });
  return out;
}

CyclicClass cyclic_class(const MultiPartition& lambda) {
  unsigned p = lambda.p();
  MultiPartition rep = lambda;
  MultiPartition cur = lambda;
  unsigned size = 0;
  for (unsigned k = 1; k <= p; ++k) {
    cur = cur.shifted();
    if (k < p && cur < rep) rep = cur;
    if (size == 0 && cur == lambda) size = k;
  }
  return CyclicClass{rep, size, p / size, size};
}

}  // namespace imprim
