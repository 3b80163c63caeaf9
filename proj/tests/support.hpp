#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance suites.
// Oracles deliberately avoid the library's mask algorithms: they work on
// explicit point sets and definitions.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <bit>
#include <utility>
#include <vector>

#include "sclat/scaled.hpp"

namespace fixtures {

using sclat::PointSet;
using sclat::ScaledBase;

inline ScaledBase make_base(const std::vector<std::string>& names,
                            const std::vector<std::pair<std::string, std::string>>& covers,
                            const std::vector<int>& labels, int d) {
  sclat::PosetPresentation p{names, covers};
  std::map<std::string, int> lab;
  for (std::size_t i = 0; i < names.size(); ++i) lab[names[i]] = labels[i];
  return ScaledBase::from_presentation(p, d, lab);
}

// x0 < x1 labeled 0, 1.
inline ScaledBase ch2() { return make_base({"x0", "x1"}, {{"x0", "x1"}}, {0, 1}, 1); }

inline ScaledBase ac2(int l0 = 0, int l1 = 0) {
  return make_base({"a0", "a1"}, {}, {l0, l1}, std::max({l0, l1, 0}));
}

// x0 < y1 and an isolated y2.
inline ScaledBase v_base() {
  return make_base({"x0", "y1", "y2"}, {{"x0", "y1"}}, {0, 1, 1}, 1);
}

inline ScaledBase pt(int label) { return make_base({"x"}, {}, {label}, label); }

// y1 labeled 1 and an incomparable point a labeled 0.
inline ScaledBase lp() { return make_base({"y1", "a"}, {}, {1, 0}, 1); }

inline PointSet pts(const ScaledBase& b, const std::vector<std::string>& names) {
  PointSet s = 0;
  for (const auto& n : names) s |= sclat::point_bit(*b.poset().index_of(n));
  return b.poset().down_closure(s);
}

}  // namespace fixtures

namespace oracle {

using sclat::PointSet;
using sclat::ScaledBase;

// A poset as an explicit strict order relation on 0..n-1.
struct Order {
  int n = 0;
  std::vector<std::vector<bool>> less;
};

using Set = std::set<int>;

inline Order order_of(const sclat::Poset& p) {
  Order o;
  o.n = p.size();
  o.less.assign(o.n, std::vector<bool>(o.n, false));
  for (int i = 0; i < o.n; ++i)
    for (int j = 0; j < o.n; ++j) o.less[i][j] = p.less(i, j);
  return o;
}

inline bool is_down(const Order& o, const Set& s) {
  for (int j : s)
    for (int i = 0; i < o.n; ++i)
      if (o.less[i][j] && !s.count(i)) return false;
  return true;
}

inline std::vector<Set> all_downsets(const Order& o) {
  std::vector<Set> out;
  for (unsigned m = 0; m < (1U << o.n); ++m) {
    Set s;
    for (int i = 0; i < o.n; ++i)
      if (m >> i & 1U) s.insert(i);
    if (is_down(o, s)) out.push_back(s);
  }
  return out;
}

inline Set unite(const Set& a, const Set& b) {
  Set s = a;
  s.insert(b.begin(), b.end());
  return s;
}

inline Set intersect(const Set& a, const Set& b) {
  Set s;
  for (int x : a)
    if (b.count(x)) s.insert(x);
  return s;
}

inline bool subset(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// a - b as the least c with a <= b v c.
inline Set diff(const Order& o, const Set& a, const Set& b) {
  const auto all = all_downsets(o);
  const Set* best = nullptr;
  for (const auto& c : all) {
    if (!subset(a, unite(b, c))) continue;
    if (!best || subset(c, *best)) best = &c;
  }
  for (const auto& c : all)
    if (subset(a, unite(b, c)) && !subset(*best, c)) return Set{-1};  // no least element
  return *best;
}

// Longest chain of points inside s, counted in covers; -1 for empty.
inline int chain_dim(const Order& o, const Set& s) {
  std::function<int(int)> longest = [&](int top) {
    int best = 0;
    for (int i : s)
      if (o.less[i][top]) best = std::max(best, 1 + longest(i));
    return best;
  };
  int best = -1;
  for (int t : s) best = std::max(best, longest(t));
  return best;
}

inline PointSet to_mask(const Set& s) {
  PointSet m = 0;
  for (int i : s) m |= sclat::point_bit(i);
  return m;
}

inline Set to_set(PointSet m) {
  Set s;
  sclat::for_each_point(m, [&](int i) { s.insert(i); });
  return s;
}

// Isomorphism of labeled orders by trying every permutation.
inline bool isomorphic(const Order& a, const std::vector<int>& la, const Order& b,
                       const std::vector<int>& lb) {
  if (a.n != b.n) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.n && ok; ++i) {
      if (la[i] != lb[perm[i]]) ok = false;
      for (int j = 0; j < a.n && ok; ++j)
        if (a.less[i][j] != b.less[perm[i]][perm[j]]) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every strict order on n points, before removing isomorphic copies.
inline std::vector<Order> all_orders(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<Order> out;
  for (unsigned long m = 0; m < (1UL << pairs.size()); ++m) {
    Order o;
    o.n = n;
    o.less.assign(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m >> k & 1UL) o.less[pairs[k].first][pairs[k].second] = true;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (o.less[i][j] && o.less[j][i]) ok = false;
        for (int k = 0; k < n && ok; ++k)
          if (o.less[i][j] && o.less[j][k] && !o.less[i][k]) ok = false;
      }
    if (ok) out.push_back(std::move(o));
  }
  return out;
}

// Orders on n points up to isomorphism.
inline std::vector<Order> unlabeled_posets(int n) {
  std::vector<Order> out;
  const std::vector<int> none(n, 0);
  for (auto& o : all_orders(n)) {
    bool seen = false;
    for (const auto& q : out)
      if (isomorphic(o, none, q, none)) seen = true;
    if (!seen) out.push_back(std::move(o));
  }
  return out;
}

inline std::vector<std::vector<int>> automorphisms(const Order& o) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(o.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < o.n && ok; ++i)
      for (int j = 0; j < o.n && ok; ++j)
        if (o.less[i][j] != o.less[perm[i]][perm[j]]) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Labeled posets with strictly increasing labels in 0..d, up to isomorphism,
// for n points.
inline std::vector<std::pair<Order, std::vector<int>>> labeled_posets(int n, int d) {
  std::vector<std::pair<Order, std::vector<int>>> out;
  for (const auto& o : unlabeled_posets(n)) {
    const auto autos = automorphisms(o);
    std::set<std::vector<int>> seen;
    std::vector<int> lab(n, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (o.less[x][y] && lab[x] >= lab[y]) return;
        if (seen.count(lab)) return;
        for (const auto& perm : autos) {
          std::vector<int> moved(n);
          for (int x = 0; x < n; ++x) moved[perm[x]] = lab[x];
          seen.insert(moved);
        }
        out.emplace_back(o, lab);
        return;
      }
      for (int v = 0; v <= d; ++v) {
        lab[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

inline ScaledBase to_base(const Order& o, const std::vector<int>& labels, int d) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < o.n; ++i) names.push_back("p" + std::to_string(i));
  for (int i = 0; i < o.n; ++i)
    for (int j = 0; j < o.n; ++j)
      if (o.less[i][j]) rel.emplace_back(i, j);
  return ScaledBase(sclat::Poset::from_relation(names, rel), d, labels);
}


// Signatures straight from the definition, over all element tuples. Each is
// returned as (g point, larger h, smaller h, q) with H treated as a set.
using SignatureTuple = std::tuple<int, PointSet, PointSet, int>;

inline std::set<SignatureTuple> signatures(const ScaledBase& base) {
  const auto elems = base.elements();
  std::set<SignatureTuple> out;
  for (PointSet g : elems) {
    if (g == 0) continue;
    PointSet below = 0;
    for (PointSet y : elems)
      if (y != g && (y & g) == y) below |= y;
    if (below == g) continue;  // not join-irreducible
    const int point = std::countr_zero(base.poset().maximal(g));
    const int sg = base.scdim(g);
    for (PointSet h1 : elems) {
      for (PointSet h2 : elems) {
        for (int q = 0; q <= base.d() + 1; ++q) {
          const bool one = base.scdim(h1) < q && q < sg && h1 == h2 && (h1 & g) == h1 && h1 != g;
          const bool two = q == sg && (h1 | h2) == below;
          if (!one && !two) continue;
          const bool swap = std::make_pair(std::popcount(h1), h1) < std::make_pair(std::popcount(h2), h2);
          out.insert({point, swap ? h2 : h1, swap ? h1 : h2, q});
        }
      }
    }
  }
  return out;
}

// Every L_SC-embedding of `source` into `target`, as images of the source
// points. Candidates are pruned by the purity criterion, then each map is
// checked by direct evaluation of all operations.
inline std::vector<std::vector<PointSet>> embeddings(const ScaledBase& source, const ScaledBase& target) {
  const int n = source.size();
  const auto src_elems = source.elements();
  const auto tgt_elems = target.elements();
  std::vector<std::vector<PointSet>> candidates(n);
  for (int z = 0; z < n; ++z)
    for (PointSet y : tgt_elems)
      if (y != 0 && target.scdim(y) == source.label(z) && target.ck(y, source.label(z)) == y) candidates[z].push_back(y);
  std::vector<std::vector<PointSet>> out;
  std::vector<PointSet> img(n);
  auto image = [&](PointSet x) {
    PointSet y = 0;
    for (int z = 0; z < n; ++z)
      if (x >> z & 1U) y |= img[z];
    return y;
  };
  std::function<void(int)> rec = [&](int z) {
    if (z == n) {
      std::set<PointSet> seen;
      for (PointSet a : src_elems) {
        if (!seen.insert(image(a)).second) return;
      }
      if (image(source.top()) != target.top()) return;
      for (PointSet a : src_elems) {
        for (int k = 0; k <= std::max(source.d(), target.d()) + 1; ++k)
          if (image(source.ck(a, k)) != target.ck(image(a), k)) return;
        for (PointSet b : src_elems) {
          if (image(a & b) != (image(a) & image(b))) return;
          if (image(source.diff(a, b)) != target.diff(image(a), image(b))) return;
        }
      }
      out.push_back(img);
      return;
    }
    for (PointSet y : candidates[z]) {
      img[z] = y;
      rec(z + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
