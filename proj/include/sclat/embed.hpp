#pragma once

#include <algorithm>
#include <concepts>
#include <string>
#include <unordered_map>
#include <vector>

#include "sclat/scaled.hpp"

namespace sclat {

// What embed_check needs from a target structure.
template <class T>
concept EmbeddingTarget = requires(const T& t, const typename T::value_type& x, int k) {
  { t.zero() } -> std::convertible_to<typename T::value_type>;
  { t.top() } -> std::convertible_to<typename T::value_type>;
  { t.join(x, x) } -> std::convertible_to<typename T::value_type>;
  { t.meet(x, x) } -> std::convertible_to<typename T::value_type>;
  { t.diff(x, x) } -> std::convertible_to<typename T::value_type>;
  { t.ck(x, k) } -> std::convertible_to<typename T::value_type>;
  { t.scdim(x) } -> std::convertible_to<int>;
  { t.max_index() } -> std::convertible_to<int>;
  { x == x } -> std::convertible_to<bool>;
};

// A finite base seen as a target.
struct LatticeTarget {
  using value_type = PointSet;
  const ScaledBase& base;

  PointSet zero() const { return 0; }
  PointSet top() const { return base.top(); }
  PointSet join(PointSet a, PointSet b) const { return a | b; }
  PointSet meet(PointSet a, PointSet b) const { return a & b; }
  PointSet diff(PointSet a, PointSet b) const { return base.diff(a, b); }
  PointSet ck(PointSet a, int k) const { return base.ck(a, k); }
  int scdim(PointSet a) const { return base.scdim(a); }
  int max_index() const { return base.d(); }
};

struct EmbeddingReport {
  bool direct = true;     // injective and commutes with every operation
  bool criterion = true;  // lattice embedding sending irreducibles to sc-pure images of equal scdim
  std::string direct_failure;
  std::string criterion_failure;

  bool consistent() const { return direct == criterion; }
  bool ok() const { return direct && criterion; }
};

struct EmbedOptions {
  bool preserve_top = true;
};

// images[i] is the image of source.elements()[i].
template <EmbeddingTarget T>
EmbeddingReport embed_check(const ScaledBase& source, const T& target,
                            const std::vector<typename T::value_type>& images, EmbedOptions options = {}) {
  const auto elems = source.elements();
  if (images.size() != elems.size()) fail(ErrorKind::argument, "the map must give an image for every source element");
  const std::size_t n = elems.size();
  std::unordered_map<PointSet, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[elems[i]] = i;
  auto image = [&](PointSet x) -> const typename T::value_type& { return images[index.at(x)]; };

  EmbeddingReport report;
  auto direct_fail = [&](const std::string& what) {
    if (report.direct) {
      report.direct = false;
      report.direct_failure = what;
    }
  };
  auto criterion_fail = [&](const std::string& what) {
    if (report.criterion) {
      report.criterion = false;
      report.criterion_failure = what;
    }
  };
  auto both_fail = [&](const std::string& what) {
    direct_fail(what);
    criterion_fail(what);
  };
  auto show = [&](PointSet x) { return source.describe(x); };

  if (!(image(0) == target.zero())) both_fail("0 is not preserved");
  if (options.preserve_top && !(image(source.top()) == target.top())) both_fail("1 is not preserved");

  const int kmax = std::max(source.d(), target.max_index()) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const PointSet a = elems[i];
    for (int k = 0; k <= kmax; ++k) {
      if (!(image(source.ck(a, k)) == target.ck(images[i], k)))
        direct_fail("C" + std::to_string(k) + " not preserved at " + show(a));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const PointSet b = elems[j];
      if (j > i && images[i] == images[j]) both_fail("not injective: " + show(a) + " and " + show(b));
      if (!(image(a | b) == target.join(images[i], images[j])))
        both_fail("join not preserved at " + show(a) + ", " + show(b));
      if (!(image(a & b) == target.meet(images[i], images[j])))
        both_fail("meet not preserved at " + show(a) + ", " + show(b));
      if (!(image(source.diff(a, b)) == target.diff(images[i], images[j])))
        direct_fail("difference not preserved at " + show(a) + ", " + show(b));
    }
  }
  for (int p = 0; p < source.size(); ++p) {
    const PointSet g = source.poset().principal(p);
    const auto& img = image(g);
    const int k = source.label(p);
    if (target.scdim(img) != k || !(target.ck(img, k) == img))
      criterion_fail("irreducible " + show(g) + " is not sent to a " + std::to_string(k) + "-sc-pure image");
  }
  return report;
}

// Images of all source elements from the images of its principal downsets.
inline std::vector<PointSet> element_images(const ScaledBase& source, const std::vector<PointSet>& point_images) {
  std::vector<PointSet> out;
  for (PointSet x : source.elements()) {
    PointSet y = 0;
    for_each_point(x, [&](int i) { y |= point_images[i]; });
    out.push_back(y);
  }
  return out;
}

}  // namespace sclat
