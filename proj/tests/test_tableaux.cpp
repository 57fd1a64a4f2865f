#include <doctest.h>

#include <numeric>
#include <set>

#include "imprim/tableaux.hpp"

using namespace imprim;

namespace {

unsigned long group_order(unsigned r, unsigned n) {
  unsigned long s = 1;
  for (unsigned i = 0; i < n; ++i) s *= r;
  for (unsigned i = 2; i <= n; ++i) s *= i;
  return s;
}

}  // namespace

TEST_CASE("multipartition counts") {
  CHECK(multipartitions(2, 2, 2).size() == 5);
  CHECK(multipartitions(1, 1, 3).size() == 3);
  CHECK(multipartitions(3, 3, 1).size() == 3);
  CHECK(multipartitions(2, 1, 3).size() == 10);
  CHECK(multipartitions(4, 2, 2).size() == 14);
}

TEST_CASE("standard tableau counts and the dimension identity") {
  MultiPartition two_singletons(2, 1, {{1}, {1}});
  CHECK(standard_tableaux(two_singletons).size() == 2);

  MultiPartition mixed(2, 1, {{2}, {1}});
  CHECK(standard_tableaux(mixed).size() == 3);

  for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 2}, {2, 3}, {3, 2}, {1, 4}}) {
    unsigned long total = 0;
    for (const auto& mp : multipartitions(r, 1, n)) {
      unsigned long dim = standard_tableaux(mp).size();
      total += dim * dim;
    }
    CHECK(total == group_order(r, n));
  }
}

TEST_CASE("tableau enumeration is duplicate-free") {
  MultiPartition mp(1, 2, {{2, 1}, {1}});
  auto ts = standard_tableaux(mp);
  std::set<std::vector<int>> keys;
  for (const auto& t : ts) {
    CHECK(t.is_standard());
    keys.insert(t.key());
  }
  CHECK(keys.size() == ts.size());
}

TEST_CASE("cell data follows the content convention") {
  // single cell in grid component (i=1, j=2) of a 2x2 grid
  MultiPartition mp(2, 2, {{}, {}, {}, {1}});  // flat index 3 = (i=1, j=1 0-based)
  auto ts = standard_tableaux(mp);
  REQUIRE(ts.size() == 1);
  auto cd = ts[0].cell_data(1);
  CHECK(cd.a == 1);
  CHECK(cd.b == 2);
  CHECK(cd.c == 0);

  MultiPartition row(1, 1, {{2}});
  auto t = standard_tableaux(row).at(0);
  CHECK(t.cell_data(2).c == 1);

  MultiPartition col(1, 1, {{1, 1}});
  auto t2 = standard_tableaux(col).at(0);
  CHECK(t2.cell_data(2).c == -1);
}

TEST_CASE("shift rotates components and has order p") {
  // p = 2: shift(((1),(2))) = ((2),(1)) listing components by i
  MultiPartition mp(2, 1, {{1}, {2}});
  MultiPartition sh = mp.shifted();
  CHECK(sh.comp(0, 0) == Partition{2});
  CHECK(sh.comp(1, 0) == Partition{1});

  for (const auto& m : multipartitions(3, 3, 3)) {
    MultiPartition cur = m;
    for (int k = 0; k < 3; ++k) cur = cur.shifted();
    CHECK(cur == m);
  }

  // p = 1: shift is the identity
  MultiPartition triv(1, 2, {{1}, {2}});
  CHECK(triv.shifted() == triv);
}

TEST_CASE("shift is a bijection on standard tableaux") {
  for (const auto& m : multipartitions(2, 2, 3)) {
    auto ts = standard_tableaux(m);
    auto shifted = standard_tableaux(m.shifted());
    std::set<std::vector<int>> image;
    for (const auto& t : ts) {
      StdTableau st = t.shifted();
      CHECK(st.is_standard());
      image.insert(st.key());
    }
    CHECK(image.size() == shifted.size());
  }
}

TEST_CASE("cell data is shift-equivariant") {
  MultiPartition mp(2, 1, {{2}, {1}});
  for (const auto& t : standard_tableaux(mp)) {
    StdTableau st = t.shifted();
    for (unsigned y = 1; y <= mp.n(); ++y) {
      auto before = t.cell_data(y);
      auto after = st.cell_data(y);
      CHECK(after.a == (before.a + 1) % 2);
      CHECK(after.b == before.b);
      CHECK(after.c == before.c);
    }
  }
}

TEST_CASE("cyclic classes") {
  MultiPartition same(2, 1, {{1}, {1}});
  auto cc = cyclic_class(same);
  CHECK(cc.class_size == 1);
  CHECK(cc.e_lambda == 2);

  MultiPartition pair(2, 1, {{2}, {}});
  auto cc2 = cyclic_class(pair);
  CHECK(cc2.class_size == 2);
  CHECK(cc2.e_lambda == 1);
  CHECK(cc2.representative == std::min(pair, pair.shifted()));

  MultiPartition p1(1, 2, {{1}, {1}});
  CHECK(cyclic_class(p1).e_lambda == 1);

  // orbit has exactly class_size distinct members; e divides p
  for (const auto& m : multipartitions(4, 4, 2)) {
    auto c = cyclic_class(m);
    std::set<std::vector<Partition>> orbit;
    MultiPartition cur = m;
    for (unsigned k = 0; k < 4; ++k) {
      orbit.insert(cur.comps());
      cur = cur.shifted();
    }
    CHECK(orbit.size() == c.class_size);
    CHECK(4 % c.e_lambda == 0);
    CHECK(c.e_lambda * c.class_size == 4);
  }
}
