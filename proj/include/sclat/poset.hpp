#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sclat {

// A set of poset points, bit i standing for point i.
using PointSet = std::uint64_t;

inline constexpr int max_points = 64;

constexpr PointSet point_bit(int i) { return PointSet{1} << i; }

constexpr bool has_point(PointSet s, int i) { return (s >> i) & 1U; }

constexpr int count_points(PointSet s) { return std::popcount(s); }

constexpr bool is_subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

template <class F>
void for_each_point(PointSet s, F&& f) {
  while (s != 0) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

// Named poset as read from or written to files.
struct PosetPresentation {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;  // (lower, upper)

  // Elements and covers sorted lexicographically.
  PosetPresentation canonical() const;

  bool operator==(const PosetPresentation&) const = default;
};

// Immutable finite poset; point indices follow insertion order, which is
// also the tie-break order used throughout the library.
class Poset {
 public:
  Poset() = default;

  // Validates names and acyclicity; covers are reduced transitively.
  static Poset from_presentation(const PosetPresentation& p);

  // `less` lists pairs (i, j) with i < j; they need not be closed or reduced.
  static Poset from_relation(std::vector<std::string> names,
                             const std::vector<std::pair<int, int>>& less);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  PointSet all() const { return size() == 64 ? ~PointSet{0} : point_bit(size()) - 1; }

  bool less(int i, int j) const { return has_point(below_[j], i); }
  bool leq(int i, int j) const { return i == j || less(i, j); }
  PointSet strictly_below(int i) const { return below_[i]; }
  PointSet strictly_above(int i) const { return above_[i]; }
  PointSet principal(int i) const { return below_[i] | point_bit(i); }

  PointSet down_closure(PointSet s) const;
  PointSet up_closure(PointSet s) const;
  PointSet maximal(PointSet s) const;
  PointSet minimal(PointSet s) const;
  bool is_downset(PointSet s) const { return down_closure(s) == s; }

  // Number of points in the longest chain ending at i, minus one.
  int depth(int i) const { return depth_[i]; }

  // Longest chain inside a downset, counted in covers; -1 for the empty set.
  int height(PointSet downset) const;

  // Cover pairs of the transitive reduction, sorted by (lower, upper) index.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Points ordered so that every point follows the points below it.
  const std::vector<int>& linear_extension() const { return order_; }

  // All downsets contained in `within`, in a deterministic order starting with
  // the empty set.
  std::vector<PointSet> downsets(PointSet within) const;
  std::vector<PointSet> downsets() const { return downsets(all()); }

  PosetPresentation presentation() const;

  std::string describe(PointSet s) const;  // "{a,b}" listing the given points

  bool operator==(const Poset& other) const {
    return names_ == other.names_ && below_ == other.below_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<PointSet> below_;
  std::vector<PointSet> above_;
  std::vector<int> depth_;
  std::vector<int> order_;
  std::vector<std::pair<int, int>> covers_;
};

}  // namespace sclat
