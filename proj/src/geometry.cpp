#include "sclat/geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "sclat/embed.hpp"

namespace sclat {

Flat::Flat(std::vector<char> axis_, std::vector<mpq_class> point_) : axis(std::move(axis_)), point(std::move(point_)) {
  if (axis.size() != point.size()) fail(ErrorKind::argument, "flat needs one coordinate per axis flag");
  for (std::size_t j = 0; j < axis.size(); ++j) {
    axis[j] = axis[j] ? 1 : 0;
    if (axis[j]) point[j] = 0;
  }
}

int Flat::dim() const { return static_cast<int>(std::count(axis.begin(), axis.end(), 1)); }

bool Flat::contains(const Flat& other) const {
  if (other.ambient() != ambient()) fail(ErrorKind::base_mismatch, "flats live in different ambient spaces");
  for (int j = 0; j < ambient(); ++j) {
    if (axis[j]) continue;
    if (other.axis[j] || other.point[j] != point[j]) return false;
  }
  return true;
}

bool Flat::operator<(const Flat& other) const {
  if (dim() != other.dim()) return dim() < other.dim();
  if (axis != other.axis) return axis < other.axis;
  return point < other.point;
}

std::optional<Flat> intersect(const Flat& a, const Flat& b) {
  if (a.ambient() != b.ambient()) fail(ErrorKind::base_mismatch, "flats live in different ambient spaces");
  const int m = a.ambient();
  std::vector<char> axis(m, 0);
  std::vector<mpq_class> point(m, 0);
  for (int j = 0; j < m; ++j) {
    if (a.axis[j] && b.axis[j]) {
      axis[j] = 1;
    } else if (a.axis[j]) {
      point[j] = b.point[j];
    } else if (b.axis[j]) {
      point[j] = a.point[j];
    } else {
      if (a.point[j] != b.point[j]) return std::nullopt;
      point[j] = a.point[j];
    }
  }
  return Flat(std::move(axis), std::move(point));
}

LinearSet::LinearSet(int ambient) : ambient_(ambient) {
  if (ambient < 1) fail(ErrorKind::argument, "ambient dimension must be positive");
}

LinearSet::LinearSet(int ambient, std::vector<Flat> flats) : LinearSet(ambient) {
  for (const Flat& f : flats)
    if (f.ambient() != ambient) fail(ErrorKind::base_mismatch, "flat does not live in Q^" + std::to_string(ambient));
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  for (std::size_t i = 0; i < flats.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < flats.size() && !redundant; ++j)
      redundant = j != i && flats[j].contains(flats[i]);
    if (!redundant) flats_.push_back(flats[i]);
  }
}

int LinearSet::dim() const {
  int d = minus_infinity;
  for (const Flat& f : flats_) d = std::max(d, f.dim());
  return d;
}

bool LinearSet::contains(const Flat& f) const {
  // A flat over an infinite field lies in a finite union of flats only if it
  // lies in one of them.
  return std::any_of(flats_.begin(), flats_.end(), [&](const Flat& g) { return g.contains(f); });
}

bool LinearSet::contains(const LinearSet& other) const {
  return std::all_of(other.flats_.begin(), other.flats_.end(), [&](const Flat& f) { return contains(f); });
}

bool LinearSet::operator<(const LinearSet& other) const {
  if (ambient_ != other.ambient_) return ambient_ < other.ambient_;
  return flats_ < other.flats_;
}

namespace {

void same_ambient(const LinearSet& a, const LinearSet& b) {
  if (a.ambient() != b.ambient())
    fail(ErrorKind::base_mismatch, "sets live in Q^" + std::to_string(a.ambient()) + " and Q^" + std::to_string(b.ambient()));
}

}  // namespace

LinearSet sls_join(const LinearSet& a, const LinearSet& b) {
  same_ambient(a, b);
  auto flats = a.flats();
  flats.insert(flats.end(), b.flats().begin(), b.flats().end());
  return LinearSet(a.ambient(), std::move(flats));
}

LinearSet sls_meet(const LinearSet& a, const LinearSet& b) {
  same_ambient(a, b);
  std::vector<Flat> flats;
  for (const Flat& f : a.flats())
    for (const Flat& g : b.flats())
      if (auto h = intersect(f, g)) flats.push_back(std::move(*h));
  return LinearSet(a.ambient(), std::move(flats));
}

LinearSet sls_diff(const LinearSet& a, const LinearSet& b) {
  same_ambient(a, b);
  std::vector<Flat> flats;
  for (const Flat& f : a.flats())
    if (!b.contains(f)) flats.push_back(f);
  return LinearSet(a.ambient(), std::move(flats));
}

LinearSet sls_ck(const LinearSet& a, int k) {
  if (k < 0) fail(ErrorKind::argument, "C index must be non-negative");
  std::vector<Flat> flats;
  for (const Flat& f : a.flats())
    if (f.dim() == k) flats.push_back(f);
  return LinearSet(a.ambient(), std::move(flats));
}

Flat pad(const Flat& f, int ambient) {
  if (ambient < f.ambient()) fail(ErrorKind::argument, "cannot shrink the ambient space");
  auto axis = f.axis;
  auto point = f.point;
  axis.resize(ambient, 0);
  point.resize(ambient, 0);
  return Flat(std::move(axis), std::move(point));
}

LinearSet pad(const LinearSet& s, int ambient) {
  std::vector<Flat> flats;
  for (const Flat& f : s.flats()) flats.push_back(pad(f, ambient));
  return LinearSet(ambient, std::move(flats));
}

std::string describe(const LinearSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.flats().size(); ++i) {
    const Flat& f = s.flats()[i];
    out += i ? ", (" : "(";
    for (int j = 0; j < f.ambient(); ++j) {
      if (j) out += ",";
      out += f.axis[j] ? "*" : f.point[j].get_str();
    }
    out += ")";
  }
  return out + "}";
}

LinearSet pure_set_with_meet(const LinearSet& c, const LinearSet& b, int n) {
  same_ambient(c, b);
  if (!b.contains(c)) fail(ErrorKind::precondition, "C is not contained in B");
  if (n < 0 || (!c.empty() && n < c.dim())) fail(ErrorKind::precondition, "n is smaller than dim C");
  const int m = b.ambient();
  std::vector<Flat> flats;
  if (!c.empty()) {
    for (const Flat& ci : c.flats()) {
      Flat a = pad(ci, m + n);
      for (int j = m; j < m + n - ci.dim(); ++j) a.axis[j] = 1;
      flats.push_back(std::move(a));
    }
    return LinearSet(m + n, std::move(flats));
  }
  // Empty C: a point (v, 0, ..., 0) outside B, widened along the new axes. B
  // meets the first coordinate line in at most one point per component unless
  // it contains the line; then a fresh coordinate set to 1 is used instead.
  std::vector<char> axis(m + n, 0);
  for (int j = m; j < m + n; ++j) axis[j] = 1;
  const std::size_t tries = b.flats().size() + 1;
  for (std::size_t v = 0; v < tries; ++v) {
    std::vector<mpq_class> point(m, 0);
    point[0] = static_cast<unsigned long>(v);
    if (b.contains(Flat(std::vector<char>(m, 0), point))) continue;
    point.resize(m + n, 0);
    return LinearSet(m + n, {Flat(axis, std::move(point))});
  }
  axis.push_back(0);
  std::vector<mpq_class> point(m + n + 1, 0);
  point[m + n] = 1;
  return LinearSet(m + n + 1, {Flat(std::move(axis), std::move(point))});
}

LinearSet Representation::image(PointSet downset) const {
  LinearSet out(carrier.ambient());
  for_each_point(downset, [&](int p) { out = sls_join(out, point_images[p]); });
  return out;
}

namespace {

Representation build(const ScaledBase& base, const std::vector<int>* counts) {
  const int r = base.size();
  std::vector<int> order(r);
  for (int i = 0; i < r; ++i) order[i] = i;
  // Increasing label is a linear extension of the order.
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return base.label(x) < base.label(y); });

  int m = 1;
  std::vector<LinearSet> images(r, LinearSet(1));
  PointSet done = 0;
  int next_value = 0;
  for (int p : order) {
    LinearSet b(m);
    LinearSet c(m);
    for_each_point(done, [&](int q) { b = sls_join(b, images[q]); });
    for_each_point(base.poset().strictly_below(p), [&](int q) { c = sls_join(c, images[q]); });
    LinearSet a(m);
    if (counts && base.label(p) == 0) {
      // Label-0 points come first, so B is a set of points on the first axis.
      std::vector<Flat> flats;
      for (int i = 0; i < (*counts)[p]; ++i) {
        std::vector<mpq_class> point(m, 0);
        point[0] = next_value++;
        flats.emplace_back(std::vector<char>(m, 0), std::move(point));
      }
      a = LinearSet(m, std::move(flats));
    } else {
      a = pure_set_with_meet(c, b, base.label(p));
    }
    require_invariant(sls_meet(a, pad(b, a.ambient())) == pad(c, a.ambient()), "A meets B exactly in C");
    m = a.ambient();
    for_each_point(done, [&](int q) { images[q] = pad(images[q], m); });
    images[p] = a;
    done |= point_bit(p);
  }
  for (auto& s : images) s = pad(s, m);

  Representation out;
  out.point_images = std::move(images);
  out.carrier = LinearSet(m);
  out.carrier = out.image(base.top());
  for (PointSet x : base.elements()) out.element_images.push_back(out.image(x));
  if (out.element_images.size() <= 256) {
    const auto report = embed_check(base, GeometryTarget{out.carrier}, out.element_images);
    require_invariant(report.ok(), "the representation is an embedding: " + report.direct_failure + report.criterion_failure);
  }
  return out;
}

}  // namespace

Representation represent(const ScaledBase& base) { return build(base, nullptr); }

Representation represent_asc(const AscBase& base, int n) {
  if (n < 0) fail(ErrorKind::argument, "N must be non-negative");
  std::vector<int> counts(base.base().size(), 0);
  for (int p = 0; p < base.base().size(); ++p) counts[p] = base.weight(p) > 0 ? base.weight(p) : std::max(n, 1);
  return build(base.base(), &counts);
}

int geometric_asc(const LinearSet& s) { return s.dim() == 0 ? static_cast<int>(s.flats().size()) : 0; }

std::vector<LinearSet> close_sets(const std::vector<LinearSet>& seeds, int max_k) {
  std::set<LinearSet> seen;
  std::vector<LinearSet> all;
  std::deque<LinearSet> queue;
  auto add = [&](LinearSet s) {
    if (seen.insert(s).second) {
      all.push_back(s);
      queue.push_back(std::move(s));
    }
  };
  for (const auto& s : seeds) add(s);
  while (!queue.empty()) {
    const LinearSet x = queue.front();
    queue.pop_front();
    for (int k = 0; k <= max_k; ++k) add(sls_ck(x, k));
    const std::size_t n = all.size();
    for (std::size_t i = 0; i < n; ++i) {
      const LinearSet y = all[i];
      add(sls_join(x, y));
      add(sls_meet(x, y));
      add(sls_diff(x, y));
      add(sls_diff(y, x));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<LinearSet> geometric_prime(const LinearSet& x) {
  return close_sets({LinearSet(x.ambient()), x}, std::max(x.dim(), 0));
}

PointSet RecoveredBase::downset_of(const LinearSet& s) const {
  PointSet out = 0;
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    if (s.contains(irreducibles[i])) out |= point_bit(static_cast<int>(i));
  return out;
}

RecoveredBase recover_base(const std::vector<LinearSet>& closed, int d) {
  RecoveredBase out;
  for (const LinearSet& s : closed) {
    if (s.empty()) continue;
    LinearSet below(s.ambient());
    for (const LinearSet& t : closed)
      if (!(t == s) && s.contains(t)) below = sls_join(below, t);
    if (!(below == s)) out.irreducibles.push_back(s);
  }
  const int n = static_cast<int>(out.irreducibles.size());
  if (n > 64) fail(ErrorKind::argument, "more than 64 irreducibles");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> less;
  std::vector<int> labels;
  for (int i = 0; i < n; ++i) {
    names.push_back("f" + std::to_string(i));
    labels.push_back(out.irreducibles[i].dim());
    for (int j = 0; j < n; ++j)
      if (i != j && out.irreducibles[j].contains(out.irreducibles[i])) less.emplace_back(i, j);
  }
  out.base = ScaledBase(Poset::from_relation(std::move(names), less), d, std::move(labels));
  return out;
}

int GridHull::chain_dim(const LinearSet& s) const {
  int best = minus_infinity;
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (s.contains(flats[i])) best = std::max(best, height[i]);
  return best;
}

bool GridHull::covers(const LinearSet& s) const {
  return std::all_of(s.flats().begin(), s.flats().end(),
                     [&](const Flat& f) { return std::binary_search(flats.begin(), flats.end(), f); });
}

GridHull grid_hull(const LinearSet& carrier, const std::vector<LinearSet>& family) {
  const int m = carrier.ambient();
  std::vector<std::set<mpq_class>> values(m, std::set<mpq_class>{mpq_class(0)});
  auto collect = [&](const LinearSet& s) {
    for (const Flat& f : s.flats())
      for (int j = 0; j < m; ++j)
        if (!f.axis[j]) values[j].insert(f.point[j]);
  };
  collect(carrier);
  for (const auto& s : family) {
    if (s.ambient() != m) fail(ErrorKind::base_mismatch, "family and carrier live in different spaces");
    collect(s);
  }

  std::set<Flat> hull;
  for (const Flat& top : carrier.flats()) {
    std::vector<int> free;
    for (int j = 0; j < m; ++j)
      if (top.axis[j]) free.push_back(j);
    // Each free coordinate either stays free or takes one of its values.
    std::function<void(std::size_t, Flat&)> rec = [&](std::size_t i, Flat& f) {
      if (i == free.size()) {
        hull.insert(Flat(f.axis, f.point));
        return;
      }
      const int j = free[i];
      f.axis[j] = 1;
      f.point[j] = 0;
      rec(i + 1, f);
      f.axis[j] = 0;
      for (const mpq_class& v : values[j]) {
        f.point[j] = v;
        rec(i + 1, f);
      }
      f.axis[j] = 1;
      f.point[j] = 0;
    };
    Flat f = top;
    rec(0, f);
  }

  GridHull g;
  g.flats.assign(hull.begin(), hull.end());
  const std::size_t n = g.flats.size();
  g.leq.assign(n, std::vector<char>(n, 0));
  g.height.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    g.labels.push_back(g.flats[i].dim());
    for (std::size_t j = 0; j < n; ++j) g.leq[i][j] = g.flats[j].contains(g.flats[i]);
  }
  // Flats are sorted by dimension, so strict predecessors come first.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (g.leq[i][j] && !(g.flats[i] == g.flats[j])) g.height[j] = std::max(g.height[j], g.height[i] + 1);
  return g;
}

}  // namespace sclat
