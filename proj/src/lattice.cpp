#include "sclat/lattice.hpp"

#include <algorithm>

#include "sclat/error.hpp"

namespace sclat {

std::string dim_to_string(int dim) {
  return dim == minus_infinity ? std::string("-inf") : std::to_string(dim);
}

int dim_via_ll(const Poset& p, PointSet a) {
  auto elems = p.downsets(a);
  std::erase(elems, PointSet{0});
  std::stable_sort(elems.begin(), elems.end(),
                   [](PointSet x, PointSet y) { return count_points(x) < count_points(y); });
  std::vector<int> chain(elems.size(), 0);
  int best = minus_infinity;
  for (std::size_t j = 0; j < elems.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (strongly_below(p, elems[i], elems[j])) chain[j] = std::max(chain[j], chain[i] + 1);
    }
    best = std::max(best, chain[j]);
  }
  return best;
}

LatticeElement::LatticeElement(std::shared_ptr<const Poset> base, PointSet maximals)
    : base_(std::move(base)), maximals_(maximals) {
  if (!base_) fail(ErrorKind::argument, "lattice element without a base");
  if (!is_subset(maximals_, base_->all()) || base_->maximal(maximals_) != maximals_)
    fail(ErrorKind::argument, "element is not an antichain of the base");
}

LatticeElement LatticeElement::from_downset(std::shared_ptr<const Poset> base, PointSet points) {
  const PointSet maximals = base->maximal(points);
  return LatticeElement(std::move(base), maximals);
}

std::vector<std::string> LatticeElement::maximal_names() const {
  std::vector<std::string> out;
  for_each_point(maximals_, [&](int i) { out.push_back(base_->name(i)); });
  return out;
}

bool LatticeElement::operator==(const LatticeElement& other) const {
  return maximals_ == other.maximals_ &&
         (base_ == other.base_ || *base_ == *other.base_);
}

namespace {

const Poset& common_base(const LatticeElement& a, const LatticeElement& b) {
  if (a.base_ptr() != b.base_ptr() && !(a.base() == b.base()))
    fail(ErrorKind::base_mismatch, "elements belong to different bases");
  return a.base();
}

}  // namespace

LatticeElement downset(std::shared_ptr<const Poset> base, const std::vector<std::string>& seed) {
  PointSet s = 0;
  for (const auto& name : seed) {
    auto i = base->index_of(name);
    if (!i) fail(ErrorKind::ill_formed_input, "unknown identifier '" + name + "'");
    s |= point_bit(*i);
  }
  return LatticeElement::from_downset(std::move(base), s);
}

LatticeElement bottom(std::shared_ptr<const Poset> base) { return LatticeElement(std::move(base), 0); }

LatticeElement top(std::shared_ptr<const Poset> base) {
  const PointSet all = base->all();
  return LatticeElement::from_downset(std::move(base), all);
}

LatticeElement join(const LatticeElement& a, const LatticeElement& b) {
  common_base(a, b);
  return LatticeElement::from_downset(a.base_ptr(), a.points() | b.points());
}

LatticeElement meet(const LatticeElement& a, const LatticeElement& b) {
  common_base(a, b);
  return LatticeElement::from_downset(a.base_ptr(), a.points() & b.points());
}

LatticeElement tc_diff(const LatticeElement& a, const LatticeElement& b) {
  const Poset& p = common_base(a, b);
  return LatticeElement::from_downset(a.base_ptr(), tc_diff(p, a.points(), b.points()));
}

bool leq(const LatticeElement& a, const LatticeElement& b) {
  common_base(a, b);
  return is_subset(a.points(), b.points());
}

bool strongly_below(const LatticeElement& b, const LatticeElement& a) {
  const Poset& p = common_base(a, b);
  return strongly_below(p, b.points(), a.points());
}

int dim(const LatticeElement& a) { return dim(a.base(), a.points()); }

int dim_via_ll(const LatticeElement& a) { return dim_via_ll(a.base(), a.points()); }

LatticeTables tabulate(const Poset& p) {
  const auto elems = p.downsets();
  LatticeTables t;
  const int n = static_cast<int>(elems.size());
  auto index_of = [&](PointSet s) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), s) - elems.begin());
  };
  for (PointSet s : elems) t.elements.push_back(p.describe(p.maximal(s)));
  t.join.assign(n, std::vector<int>(n));
  t.meet.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t.join[i][j] = index_of(elems[i] | elems[j]);
      t.meet[i][j] = index_of(elems[i] & elems[j]);
    }
  }
  return t;
}

PosetPresentation recover_poset(const LatticeTables& t) {
  const int n = static_cast<int>(t.elements.size());
  if (n == 0) fail(ErrorKind::ingestion, "a lattice needs at least one element");
  auto square = [n](const std::vector<std::vector<int>>& table) {
    if (static_cast<int>(table.size()) != n) return false;
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n) return false;
      for (int v : row) {
        if (v < 0 || v >= n) return false;
      }
    }
    return true;
  };
  if (!square(t.join) || !square(t.meet))
    fail(ErrorKind::ingestion, "operation tables must be square with entries in range");

  const auto& J = t.join;
  const auto& M = t.meet;
  auto violated = [&](const std::string& law, std::initializer_list<int> witness) {
    std::string w;
    for (int x : witness) w += (w.empty() ? "" : ", ") + t.elements[x];
    fail(ErrorKind::ingestion, law + " violated at (" + w + ")");
  };
  for (int a = 0; a < n; ++a) {
    if (J[a][a] != a) violated("idempotence of join", {a});
    if (M[a][a] != a) violated("idempotence of meet", {a});
    for (int b = 0; b < n; ++b) {
      if (J[a][b] != J[b][a]) violated("commutativity of join", {a, b});
      if (M[a][b] != M[b][a]) violated("commutativity of meet", {a, b});
      if (J[a][M[a][b]] != a) violated("absorption a join (a meet b) = a", {a, b});
      if (M[a][J[a][b]] != a) violated("absorption a meet (a join b) = a", {a, b});
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (J[J[a][b]][c] != J[a][J[b][c]]) violated("associativity of join", {a, b, c});
        if (M[M[a][b]][c] != M[a][M[b][c]]) violated("associativity of meet", {a, b, c});
        if (M[a][J[b][c]] != J[M[a][b]][M[a][c]]) violated("distributivity", {a, b, c});
      }
    }
  }

  auto leq = [&](int a, int b) { return M[a][b] == a; };
  int bottom = 0;
  for (int a = 1; a < n; ++a) bottom = M[bottom][a];

  std::vector<int> irreducible;
  for (int x = 0; x < n; ++x) {
    if (x == bottom) continue;
    int below = bottom;
    for (int y = 0; y < n; ++y) {
      if (y != x && leq(y, x)) below = J[below][y];
    }
    if (below != x) irreducible.push_back(x);
  }

  PosetPresentation out;
  for (int x : irreducible) out.elements.push_back(t.elements[x]);
  for (int x : irreducible) {
    for (int y : irreducible) {
      if (x == y || !leq(x, y)) continue;
      bool cover = true;
      for (int z : irreducible) {
        if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
      }
      if (cover) out.covers.emplace_back(t.elements[x], t.elements[y]);
    }
  }
  return out;
}

}  // namespace sclat
