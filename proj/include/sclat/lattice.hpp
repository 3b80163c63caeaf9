#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "sclat/poset.hpp"

namespace sclat {

// Dimension of the zero element.
inline constexpr int minus_infinity = std::numeric_limits<int>::min();

std::string dim_to_string(int dim);

// Mask-level co-Heyting operations on downsets of a poset.
inline PointSet tc_diff(const Poset& p, PointSet a, PointSet b) { return p.down_closure(a & ~b); }

inline bool strongly_below(const Poset& p, PointSet b, PointSet a) {
  return is_subset(b, tc_diff(p, a, b));
}

inline int dim(const Poset& p, PointSet a) {
  return a == 0 ? minus_infinity : p.height(a);
}

// Longest chain 0 != a0 << a1 << ... << an <= a, by search over elements below a.
int dim_via_ll(const Poset& p, PointSet a);

// An element of the lattice of downsets of a poset, stored by its antichain of
// maximal points.
class LatticeElement {
 public:
  LatticeElement(std::shared_ptr<const Poset> base, PointSet maximals);

  static LatticeElement from_downset(std::shared_ptr<const Poset> base, PointSet points);

  const Poset& base() const { return *base_; }
  const std::shared_ptr<const Poset>& base_ptr() const { return base_; }
  PointSet maximals() const { return maximals_; }
  PointSet points() const { return base_->down_closure(maximals_); }
  bool is_zero() const { return maximals_ == 0; }

  std::vector<std::string> maximal_names() const;
  std::string describe() const { return base_->describe(maximals_); }

  bool operator==(const LatticeElement& other) const;

 private:
  std::shared_ptr<const Poset> base_;
  PointSet maximals_;
};

LatticeElement downset(std::shared_ptr<const Poset> base, const std::vector<std::string>& seed);
LatticeElement bottom(std::shared_ptr<const Poset> base);
LatticeElement top(std::shared_ptr<const Poset> base);

LatticeElement join(const LatticeElement& a, const LatticeElement& b);
LatticeElement meet(const LatticeElement& a, const LatticeElement& b);
LatticeElement tc_diff(const LatticeElement& a, const LatticeElement& b);
bool leq(const LatticeElement& a, const LatticeElement& b);
bool strongly_below(const LatticeElement& b, const LatticeElement& a);
int dim(const LatticeElement& a);
int dim_via_ll(const LatticeElement& a);

// Explicit finite lattice given by element names and operation tables.
struct LatticeTables {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<int>> meet;
};

// Tables of the lattice of downsets; elements are named by their maximal points.
LatticeTables tabulate(const Poset& p);

// Checks the lattice and distributivity laws and returns the poset of
// join-irreducibles, named after the table entries.
PosetPresentation recover_poset(const LatticeTables& tables);

}  // namespace sclat
