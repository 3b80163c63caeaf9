#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "sclat/asc.hpp"
#include "sclat/scaled.hpp"

namespace sclat {

// Axis-parallel affine flat P + E(I) in Q^m. Coordinates on the axes are
// stored as 0 so that equal flats compare equal.
struct Flat {
  std::vector<char> axis;
  std::vector<mpq_class> point;

  Flat() = default;
  Flat(std::vector<char> axis, std::vector<mpq_class> point);

  int ambient() const { return static_cast<int>(axis.size()); }
  int dim() const;
  bool contains(const Flat& other) const;
  bool operator==(const Flat& other) const { return axis == other.axis && point == other.point; }
  bool operator<(const Flat& other) const;
};

std::optional<Flat> intersect(const Flat& a, const Flat& b);

// A finite union of flats, kept as its sorted maximal components.
class LinearSet {
 public:
  explicit LinearSet(int ambient = 1);
  LinearSet(int ambient, std::vector<Flat> flats);

  int ambient() const { return ambient_; }
  const std::vector<Flat>& flats() const { return flats_; }
  bool empty() const { return flats_.empty(); }
  int dim() const;  // minus_infinity when empty
  bool contains(const Flat& f) const;
  bool contains(const LinearSet& other) const;

  bool operator==(const LinearSet& other) const = default;
  bool operator<(const LinearSet& other) const;

 private:
  int ambient_;
  std::vector<Flat> flats_;
};

LinearSet sls_join(const LinearSet& a, const LinearSet& b);
LinearSet sls_meet(const LinearSet& a, const LinearSet& b);
LinearSet sls_diff(const LinearSet& a, const LinearSet& b);
LinearSet sls_ck(const LinearSet& a, int k);

// Q^m identified with Q^m x {0}^r.
Flat pad(const Flat& f, int ambient);
LinearSet pad(const LinearSet& s, int ambient);

std::string describe(const LinearSet& s);

// A pure n-dimensional set A in Q^(m+n) with A meet B = C, B and C padded.
LinearSet pure_set_with_meet(const LinearSet& c, const LinearSet& b, int n);

struct GeometryTarget {
  using value_type = LinearSet;
  LinearSet carrier;

  LinearSet zero() const { return LinearSet(carrier.ambient()); }
  LinearSet top() const { return carrier; }
  LinearSet join(const LinearSet& a, const LinearSet& b) const { return sls_join(a, b); }
  LinearSet meet(const LinearSet& a, const LinearSet& b) const { return sls_meet(a, b); }
  LinearSet diff(const LinearSet& a, const LinearSet& b) const { return sls_diff(a, b); }
  LinearSet ck(const LinearSet& a, int k) const { return sls_ck(a, k); }
  int scdim(const LinearSet& a) const { return a.dim(); }
  int max_index() const { return carrier.ambient(); }
};

struct Representation {
  LinearSet carrier;                     // image of 1
  std::vector<LinearSet> point_images;   // image of each principal downset
  std::vector<LinearSet> element_images;  // aligned to base.elements()

  LinearSet image(PointSet downset) const;
};

Representation represent(const ScaledBase& base);

// Atoms with a positive count map to that many points; the others to
// max(n, 1) points.
Representation represent_asc(const AscBase& base, int n);

// Number of points of a finite set, 0 for sets of positive dimension.
int geometric_asc(const LinearSet& s);

std::vector<LinearSet> close_sets(const std::vector<LinearSet>& seeds, int max_k);
std::vector<LinearSet> geometric_prime(const LinearSet& x);

// The finite base whose downsets are a closed family of sets.
struct RecoveredBase {
  ScaledBase base;
  std::vector<LinearSet> irreducibles;
  PointSet downset_of(const LinearSet& s) const;
};

RecoveredBase recover_base(const std::vector<LinearSet>& closed, int d);

// Every subflat of a component of the carrier whose fixed coordinates use
// values already present in the family (or 0).
struct GridHull {
  std::vector<Flat> flats;
  std::vector<std::vector<char>> leq;
  std::vector<int> labels;  // flat dimensions
  std::vector<int> height;  // longest strict chain below each flat

  // Longest chain of hull flats inside s; minus_infinity when empty.
  int chain_dim(const LinearSet& s) const;
  bool covers(const LinearSet& s) const;
};

GridHull grid_hull(const LinearSet& carrier, const std::vector<LinearSet>& family);

}  // namespace sclat
