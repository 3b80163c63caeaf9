#include "sclat/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sclat/error.hpp"

namespace sclat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ill_formed_input: return "ill-formed-input";
    case ErrorKind::base_mismatch: return "base-mismatch";
    case ErrorKind::argument: return "argument";
    case ErrorKind::ingestion: return "ingestion";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::semantic: return "semantic";
    case ErrorKind::refusal: return "refusal";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

PosetPresentation PosetPresentation::canonical() const {
  PosetPresentation out = *this;
  std::sort(out.elements.begin(), out.elements.end());
  std::sort(out.covers.begin(), out.covers.end());
  out.covers.erase(std::unique(out.covers.begin(), out.covers.end()), out.covers.end());
  return out;
}

Poset Poset::from_presentation(const PosetPresentation& p) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    if (!index.emplace(p.elements[i], static_cast<int>(i)).second)
      fail(ErrorKind::ill_formed_input, "duplicate element '" + p.elements[i] + "'");
  }
  std::vector<std::pair<int, int>> less;
  for (const auto& [lo, hi] : p.covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) fail(ErrorKind::ill_formed_input, "unknown identifier '" + lo + "'");
    if (b == index.end()) fail(ErrorKind::ill_formed_input, "unknown identifier '" + hi + "'");
    less.emplace_back(a->second, b->second);
  }
  return from_relation(p.elements, less);
}

Poset Poset::from_relation(std::vector<std::string> names,
                           const std::vector<std::pair<int, int>>& less) {
  const int n = static_cast<int>(names.size());
  if (n > max_points)
    fail(ErrorKind::ill_formed_input,
         "poset has " + std::to_string(n) + " points; at most 64 are supported");
  for (const auto& name : names) {
    if (name.empty()) fail(ErrorKind::ill_formed_input, "empty element name");
  }
  {
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) fail(ErrorKind::ill_formed_input, "duplicate element '" + *dup + "'");
  }

  Poset p;
  p.names_ = std::move(names);
  p.below_.assign(n, 0);
  for (auto [i, j] : less) {
    if (i < 0 || j < 0 || i >= n || j >= n) fail(ErrorKind::ill_formed_input, "relation index out of range");
    if (i == j) fail(ErrorKind::ill_formed_input, "element '" + p.names_[i] + "' is below itself");
    p.below_[j] |= point_bit(i);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < n; ++j) {
      PointSet grown = p.below_[j];
      for_each_point(p.below_[j], [&](int i) { grown |= p.below_[i]; });
      if (grown != p.below_[j]) {
        p.below_[j] = grown;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (has_point(p.below_[i], i))
      fail(ErrorKind::ill_formed_input, "cover relation has a cycle through '" + p.names_[i] + "'");
  }

  p.above_.assign(n, 0);
  for (int j = 0; j < n; ++j) for_each_point(p.below_[j], [&](int i) { p.above_[i] |= point_bit(j); });

  p.order_.resize(n);
  std::iota(p.order_.begin(), p.order_.end(), 0);
  std::stable_sort(p.order_.begin(), p.order_.end(), [&](int a, int b) {
    return count_points(p.below_[a]) < count_points(p.below_[b]);
  });
  p.depth_.assign(n, 0);
  for (int j : p.order_) {
    for_each_point(p.below_[j], [&](int i) { p.depth_[j] = std::max(p.depth_[j], p.depth_[i] + 1); });
  }

  for (int j = 0; j < n; ++j) {
    for_each_point(p.below_[j], [&](int i) {
      if ((p.above_[i] & p.below_[j]) == 0) p.covers_.emplace_back(i, j);
    });
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

std::optional<int> Poset::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

PointSet Poset::down_closure(PointSet s) const {
  PointSet out = s;
  for_each_point(s, [&](int i) { out |= below_[i]; });
  return out;
}

PointSet Poset::up_closure(PointSet s) const {
  PointSet out = s;
  for_each_point(s, [&](int i) { out |= above_[i]; });
  return out;
}

PointSet Poset::maximal(PointSet s) const {
  PointSet out = 0;
  for_each_point(s, [&](int i) {
    if ((above_[i] & s) == 0) out |= point_bit(i);
  });
  return out;
}

PointSet Poset::minimal(PointSet s) const {
  PointSet out = 0;
  for_each_point(s, [&](int i) {
    if ((below_[i] & s) == 0) out |= point_bit(i);
  });
  return out;
}

int Poset::height(PointSet downset) const {
  int h = -1;
  for_each_point(downset, [&](int i) { h = std::max(h, depth_[i]); });
  return h;
}

std::vector<PointSet> Poset::downsets(PointSet within) const {
  std::vector<PointSet> out;
  const int n = size();
  auto rec = [&](auto& self, int pos, PointSet cur) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    const int i = order_[pos];
    self(self, pos + 1, cur);
    if (has_point(within, i) && is_subset(below_[i], cur)) self(self, pos + 1, cur | point_bit(i));
  };
  rec(rec, 0, 0);
  return out;
}

PosetPresentation Poset::presentation() const {
  PosetPresentation p;
  p.elements = names_;
  for (auto [i, j] : covers_) p.covers.emplace_back(names_[i], names_[j]);
  return p;
}

std::string Poset::describe(PointSet s) const {
  std::string out = "{";
  bool first = true;
  for_each_point(s, [&](int i) {
    if (!first) out += ",";
    out += names_[i];
    first = false;
  });
  return out + "}";
}

}  // namespace sclat
