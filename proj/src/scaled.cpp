#include "sclat/scaled.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace sclat {

namespace {

std::shared_ptr<const Poset> empty_poset() {
  static const auto p = std::make_shared<const Poset>();
  return p;
}

}  // namespace

ScaledBase::ScaledBase() : ScaledBase(empty_poset(), 0, {}) {}

ScaledBase::ScaledBase(Poset poset, int d, std::vector<int> labels)
    : ScaledBase(std::make_shared<const Poset>(std::move(poset)), d, std::move(labels)) {}

ScaledBase::ScaledBase(std::shared_ptr<const Poset> poset, int d, std::vector<int> labels)
    : poset_(std::move(poset)), d_(d), labels_(std::move(labels)) {
  if (!poset_) fail(ErrorKind::argument, "scaled base without a poset");
  if (d_ < 0) fail(ErrorKind::ill_formed_input, "d must be non-negative");
  if (static_cast<int>(labels_.size()) != poset_->size())
    fail(ErrorKind::ill_formed_input, "every point needs a dimension label");
  by_label_.assign(d_ + 1, 0);
  for (int i = 0; i < poset_->size(); ++i) {
    if (labels_[i] < 0 || labels_[i] > d_)
      fail(ErrorKind::ill_formed_input, "label of '" + poset_->name(i) + "' is outside 0.." +
                                            std::to_string(d_));
    by_label_[labels_[i]] |= point_bit(i);
  }
  for (auto [lo, hi] : poset_->covers()) {
    if (labels_[lo] >= labels_[hi])
      fail(ErrorKind::ill_formed_input, "labels must strictly increase: '" + poset_->name(lo) +
                                            "' < '" + poset_->name(hi) + "'");
  }
}

ScaledBase ScaledBase::from_presentation(const PosetPresentation& p, int d,
                                         const std::map<std::string, int>& labels) {
  Poset poset = Poset::from_presentation(p);
  std::vector<int> lab(poset.size());
  for (int i = 0; i < poset.size(); ++i) {
    auto it = labels.find(poset.name(i));
    if (it == labels.end()) fail(ErrorKind::ill_formed_input, "missing label for '" + poset.name(i) + "'");
    lab[i] = it->second;
  }
  for (const auto& [name, value] : labels) {
    if (!poset.index_of(name)) fail(ErrorKind::ill_formed_input, "unknown identifier '" + name + "'");
  }
  return ScaledBase(std::move(poset), d, std::move(lab));
}

int ScaledBase::scdim(PointSet a) const {
  int best = minus_infinity;
  for_each_point(poset_->maximal(a), [&](int i) { best = std::max(best, labels_[i]); });
  return best;
}

bool ScaledBase::is_scaled() const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] != poset_->depth(i)) return false;
  }
  return true;
}

namespace {

void same_base(const ScaledBase& base, const LatticeElement& a) {
  if (a.base_ptr() != base.poset_ptr() && !(a.base() == base.poset()))
    fail(ErrorKind::base_mismatch, "element does not belong to this base");
}

}  // namespace

LatticeElement c_k(const ScaledBase& base, const LatticeElement& a, int k) {
  same_base(base, a);
  return base.element(base.ck(a.points(), k));
}

int scdim(const ScaledBase& base, const LatticeElement& a) {
  same_base(base, a);
  return base.scdim(a.points());
}

bool is_k_sc_pure(const ScaledBase& base, const LatticeElement& a, int k) {
  same_base(base, a);
  return base.sc_pure(a.points(), k);
}

bool SubLattice::contains(PointSet x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

PointSet SubLattice::to_ambient(PointSet induced_downset) const {
  PointSet out = 0;
  for_each_point(induced_downset, [&](int i) { out |= irreducibles[i]; });
  return out;
}

PointSet SubLattice::to_induced(PointSet ambient) const {
  PointSet out = 0;
  for (int i = 0; i < size(); ++i) {
    if (is_subset(irreducibles[i], ambient)) out |= point_bit(i);
  }
  return out;
}

std::vector<PointSet> close_under_operations(const ScaledBase& base,
                                             const std::vector<PointSet>& seeds) {
  std::vector<PointSet> out;
  std::unordered_set<PointSet> seen;
  auto add = [&](PointSet x) {
    if (seen.insert(x).second) out.push_back(x);
  };
  add(0);
  add(base.top());
  for (PointSet s : seeds) {
    if (!base.poset().is_downset(s) || !is_subset(s, base.top()))
      fail(ErrorKind::argument, "seed is not an element of the base");
    add(s);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const PointSet x = out[i];
    for (int k = 0; k <= base.d(); ++k) add(base.ck(x, k));
    for (std::size_t j = 0; j <= i; ++j) {
      const PointSet y = out[j];
      add(x | y);
      add(x & y);
      add(base.diff(x, y));
      add(base.diff(y, x));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Above this size the irreducibles are read off directly instead of through
// the full law check of recover_poset, which is cubic.
constexpr std::size_t table_limit = 256;

std::vector<PointSet> irreducibles_of(const ScaledBase& base, const std::vector<PointSet>& closed) {
  const Poset& p = base.poset();
  std::vector<PointSet> out;
  if (closed.size() <= table_limit) {
    LatticeTables t;
    const int n = static_cast<int>(closed.size());
    std::unordered_map<PointSet, int> index;
    for (int i = 0; i < n; ++i) {
      index[closed[i]] = i;
      t.elements.push_back(p.describe(p.maximal(closed[i])));
    }
    t.join.assign(n, std::vector<int>(n));
    t.meet.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        auto jn = index.find(closed[i] | closed[j]);
        auto mt = index.find(closed[i] & closed[j]);
        if (jn == index.end() || mt == index.end())
          fail(ErrorKind::argument, "element set is not closed under join and meet");
        t.join[i][j] = jn->second;
        t.meet[i][j] = mt->second;
      }
    }
    const PosetPresentation pres = recover_poset(t);
    std::unordered_map<std::string, PointSet> by_name;
    for (int i = 0; i < n; ++i) by_name[t.elements[i]] = closed[i];
    for (const auto& name : pres.elements) out.push_back(by_name.at(name));
    return out;
  }
  for (PointSet x : closed) {
    if (x == 0) continue;
    PointSet below = 0;
    for (PointSet y : closed) {
      if (y != x && is_subset(y, x)) below |= y;
    }
    if (below != x) out.push_back(x);
  }
  return out;
}

SubLattice build(const ScaledBase& base, std::vector<PointSet> closed, std::vector<PointSet> irr) {
  const Poset& p = base.poset();
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> less;
  std::vector<int> labels;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    names.push_back(p.describe(p.maximal(irr[i])));
    labels.push_back(base.scdim(irr[i]));
    for (std::size_t j = 0; j < irr.size(); ++j) {
      if (i != j && is_subset(irr[i], irr[j])) less.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  SubLattice s;
  s.elements = std::move(closed);
  s.irreducibles = std::move(irr);
  s.induced = ScaledBase(Poset::from_relation(std::move(names), less), base.d(), std::move(labels));
  return s;
}

}  // namespace

SubLattice substructure(const ScaledBase& base, std::vector<PointSet> closed) {
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  auto irr = irreducibles_of(base, closed);
  return build(base, std::move(closed), std::move(irr));
}

SubLattice generate(const ScaledBase& base, const std::vector<PointSet>& seeds) {
  return substructure(base, close_under_operations(base, seeds));
}

SubLattice prime_substructure(const ScaledBase& base) { return generate(base, {}); }

SubLattice image_substructure(const ScaledBase& ambient, const ScaledBase& source,
                              const std::vector<PointSet>& point_images) {
  if (static_cast<int>(point_images.size()) != source.size())
    fail(ErrorKind::argument, "embedding must give an image for every source point");
  SubLattice s;
  s.irreducibles = point_images;
  s.induced = source;
  for (PointSet x : source.elements()) s.elements.push_back(s.to_ambient(x));
  std::sort(s.elements.begin(), s.elements.end());
  if (std::adjacent_find(s.elements.begin(), s.elements.end()) != s.elements.end())
    fail(ErrorKind::argument, "embedding is not injective");
  for (PointSet x : s.elements) {
    if (!ambient.poset().is_downset(x)) fail(ErrorKind::argument, "image is not an element of the target");
  }
  return s;
}

}  // namespace sclat
