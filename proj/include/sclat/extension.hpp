#pragma once

#include <string>
#include <vector>

#include "sclat/scaled.hpp"

namespace sclat {

// (g, {h1, h2}, q): g is a point of the base (its principal downset is the
// join-irreducible), h1 and h2 are downsets. H is a set, so (h1, h2) and
// (h2, h1) denote the same signature; the order only decides which new point
// receives which lower set in apply_signature.
struct Signature {
  int g = 0;
  PointSet h1 = 0;
  PointSet h2 = 0;
  int q = 0;

  // 1 when q < scdim g (one new point below g), 2 when g splits in two.
  int arity(const ScaledBase& base) const { return q < base.label(g) ? 1 : 2; }
  Signature normalized() const;
  bool operator==(const Signature& other) const;
};

// Total order on downsets used for deterministic listings: by size, then mask.
bool element_less(PointSet a, PointSet b);

std::string describe(const ScaledBase& base, const Signature& s);

// Empty when valid; otherwise the violated clause.
std::string signature_problem(const ScaledBase& base, const Signature& s);

std::vector<Signature> enumerate_signatures(const ScaledBase& base);

// A finite extension of a base together with the inclusion, given by the
// image of every old principal downset.
struct Extension {
  ScaledBase base;
  std::vector<PointSet> point_image;
  PointSet x1 = 0;
  PointSet x2 = 0;
  Signature sigma;

  PointSet image(PointSet old_downset) const;
};

Extension apply_signature(const ScaledBase& base, const Signature& sigma);

// Recovers the signature of an SC-primitive couple; throws a precondition
// error naming P1, P2 or P3 when the couple is not primitive.
Signature signature_of(const ScaledBase& old_base, const ScaledBase& extended,
                       const std::vector<PointSet>& point_image, PointSet x1, PointSet x2);

// Canonical form of an extension up to isomorphism fixing the old lattice.
std::string canonical_form_over(const ScaledBase& extended, const std::vector<PointSet>& point_image);

struct TowerStep {
  Signature sigma;     // a signature in `before`
  ScaledBase before;
  SubLattice after;    // the next intermediate lattice inside outer
  PointSet x1 = 0;     // generators, in outer
  PointSet x2 = 0;
};

std::vector<TowerStep> tower_decompose(const ScaledBase& outer, const SubLattice& inner);

struct SplitResult {
  Extension extension;  // x1, x2 and sigma are unused here
  PointSet a1 = 0;
  PointSet a2 = 0;
  std::vector<std::string> trace;
};

SplitResult splitting_extension(const ScaledBase& base, PointSet a, PointSet b1, PointSet b2);

struct CatenarityVerdict {
  bool pass = true;
  PointSet c = 0;
  PointSet a = 0;
  int r = 0;
  int q = 0;
  int p = 0;
  std::string witness;
};

// Exhaustive over all element pairs.
CatenarityVerdict check_catenarity(const ScaledBase& base);

// Equivalent point-level test: every z <= w admits a point of each
// intermediate label between them, and every w has points of each label
// below its own.
bool catenary_points(const std::vector<std::vector<char>>& leq, const std::vector<int>& labels,
                     std::string* witness = nullptr);

}  // namespace sclat
