#include <doctest.h>

#include "sclat/lattice.hpp"
#include "support.hpp"

using namespace sclat;

namespace {

std::shared_ptr<const Poset> poset_of(const std::vector<std::string>& names,
                                      const std::vector<std::pair<std::string, std::string>>& covers) {
  return std::make_shared<const Poset>(Poset::from_presentation({names, covers}));
}

}  // namespace

TEST_CASE("downset closure") {
  auto ch2 = poset_of({"x0", "x1"}, {{"x0", "x1"}});
  CHECK(downset(ch2, {"x1"}).maximal_names() == std::vector<std::string>{"x1"});
  CHECK(downset(ch2, {"x1"}).points() == 0b11);
  CHECK(downset(ch2, {}).is_zero());

  auto v = poset_of({"x0", "y1", "y2"}, {{"x0", "y1"}});
  CHECK(downset(v, {"x0", "y2"}).maximal_names() == std::vector<std::string>{"x0", "y2"});
  CHECK(downset(v, {"x0", "y1"}).maximal_names() == std::vector<std::string>{"y1"});
  CHECK_THROWS_AS(downset(v, {"zz"}), Error);
}

TEST_CASE("join meet and difference in V") {
  auto v = poset_of({"x0", "y1", "y2"}, {{"x0", "y1"}});
  auto y1 = downset(v, {"y1"});
  auto y2 = downset(v, {"y2"});
  auto x0 = downset(v, {"x0"});
  CHECK(meet(y1, y2).is_zero());
  CHECK(join(y1, y2) == top(v));
  CHECK(tc_diff(top(v), y2) == y1);
  CHECK(tc_diff(y1, x0) == y1);
  CHECK(tc_diff(x0, y1).is_zero());
  CHECK(strongly_below(x0, y1));
  CHECK_FALSE(strongly_below(y1, y1));
  CHECK(strongly_below(bottom(v), bottom(v)));

  auto other = poset_of({"x0", "y1", "y2"}, {});
  CHECK_THROWS_AS(join(y1, downset(other, {"y1"})), Error);
  try {
    (void)meet(y1, downset(other, {"y1"}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::base_mismatch);
  }
}

TEST_CASE("dimension and chain dimension") {
  auto ch2 = poset_of({"x0", "x1"}, {{"x0", "x1"}});
  auto ac2 = poset_of({"a", "b"}, {});
  CHECK(dim(top(ch2)) == 1);
  CHECK(dim_via_ll(top(ch2)) == 1);
  CHECK(dim(bottom(ch2)) == minus_infinity);
  CHECK(dim_via_ll(bottom(ch2)) == minus_infinity);
  CHECK(dim(top(ac2)) == 0);
  CHECK(dim_via_ll(top(ac2)) == 0);
}

TEST_CASE("order laws against brute force on all posets up to four points") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& o : oracle::unlabeled_posets(n)) {
      std::vector<std::string> names;
      std::vector<std::pair<int, int>> rel;
      for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (o.less[i][j]) rel.emplace_back(i, j);
      const Poset p = Poset::from_relation(names, rel);
      const auto sets = oracle::all_downsets(o);
      const auto elems = p.downsets();
      REQUIRE(sets.size() == elems.size());
      for (const auto& a : sets) {
        const PointSet am = oracle::to_mask(a);
        CHECK(p.is_downset(am));
        CHECK(dim(p, am) == (a.empty() ? minus_infinity : oracle::chain_dim(o, a)));
        CHECK(dim(p, am) == dim_via_ll(p, am));
        for (const auto& b : sets) {
          const PointSet bm = oracle::to_mask(b);
          CHECK(tc_diff(p, am, bm) == oracle::to_mask(oracle::diff(o, a, b)));
          const PointSet d = tc_diff(p, am, bm);
          // TC1..TC3
          CHECK(((am & bm) | d) == am);
          CHECK(tc_diff(p, d, bm) == d);
          CHECK(dim(p, am | bm) == std::max(dim(p, am), dim(p, bm)));
          for (PointSet c : elems) {
            CHECK(tc_diff(p, am | bm, c) == (tc_diff(p, am, c) | tc_diff(p, bm, c)));
            CHECK(tc_diff(p, am, bm | c) == tc_diff(p, tc_diff(p, am, bm), c));
          }
        }
      }
    }
  }
}

TEST_CASE("recover_poset") {
  SUBCASE("two element chain") {
    LatticeTables t{{"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}};
    auto p = recover_poset(t);
    CHECK(p.elements == std::vector<std::string>{"1"});
    CHECK(p.covers.empty());
  }
  SUBCASE("boolean algebra of four elements") {
    LatticeTables t{{"0", "a", "b", "1"},
                    {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}},
                    {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}}};
    auto p = recover_poset(t);
    CHECK(p.elements == std::vector<std::string>{"a", "b"});
    CHECK(p.covers.empty());
  }
  SUBCASE("diamond is rejected") {
    // 0, a, b, c, 1 with a, b, c pairwise joining to 1 and meeting to 0.
    std::vector<std::vector<int>> J(5, std::vector<int>(5, 4));
    std::vector<std::vector<int>> M(5, std::vector<int>(5, 0));
    for (int i = 0; i < 5; ++i) {
      J[i][i] = M[i][i] = i;
      J[0][i] = J[i][0] = i;
      M[4][i] = M[i][4] = i;
    }
    LatticeTables t{{"0", "a", "b", "c", "1"}, J, M};
    try {
      recover_poset(t);
      FAIL("diamond accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ingestion);
      CHECK(std::string(e.what()).find("distributivity") != std::string::npos);
    }
  }
  SUBCASE("round trip through tabulation") {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& o : oracle::unlabeled_posets(n)) {
        const std::vector<int> zero(n, 0);
        std::vector<std::string> names;
        std::vector<std::pair<int, int>> rel;
        for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (o.less[i][j]) rel.emplace_back(i, j);
        const auto p = Poset::from_relation(names, rel);
        const auto back = Poset::from_presentation(recover_poset(tabulate(p)));
        CHECK(oracle::isomorphic(oracle::order_of(back), zero, o, zero));
      }
    }
  }
}

TEST_CASE("poset construction") {
  CHECK_THROWS_AS(poset_of({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(poset_of({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_THROWS_AS(poset_of({"a"}, {{"a", "z"}}), Error);
  // Redundant covers are reduced.
  auto p = poset_of({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(p->covers().size() == 2);
  CHECK(p->presentation().canonical().covers ==
        std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});
}
