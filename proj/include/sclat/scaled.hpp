#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sclat/error.hpp"
#include "sclat/lattice.hpp"
#include "sclat/poset.hpp"

namespace sclat {

// A finite d-subscaled lattice: the downsets of a poset whose points carry a
// strictly increasing dimension label in {0..d}.
class ScaledBase {
 public:
  ScaledBase();  // the trivial lattice, d = 0
  ScaledBase(std::shared_ptr<const Poset> poset, int d, std::vector<int> labels);
  ScaledBase(Poset poset, int d, std::vector<int> labels);

  static ScaledBase from_presentation(const PosetPresentation& p, int d,
                                      const std::map<std::string, int>& labels);

  const Poset& poset() const { return *poset_; }
  const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }
  int d() const { return d_; }
  int size() const { return poset_->size(); }
  int label(int point) const { return labels_[point]; }
  const std::vector<int>& labels() const { return labels_; }
  PointSet top() const { return poset_->all(); }
  PointSet with_label(int k) const { return k >= 0 && k <= d_ ? by_label_[k] : 0; }

  PointSet ck(PointSet a, int k) const {
    if (k < 0) fail(ErrorKind::argument, "C index must be non-negative");
    return poset_->down_closure(poset_->maximal(a) & with_label(k));
  }

  int scdim(PointSet a) const;
  int dim(PointSet a) const { return sclat::dim(*poset_, a); }
  PointSet diff(PointSet a, PointSet b) const { return tc_diff(*poset_, a, b); }
  bool sc_pure(PointSet a, int k) const { return ck(a, k) == a; }

  // SC0: scdim agrees with the lattice dimension everywhere.
  bool is_scaled() const;

  std::vector<PointSet> elements() const { return poset_->downsets(); }
  LatticeElement element(PointSet downset) const {
    return LatticeElement::from_downset(poset_, downset);
  }
  std::string describe(PointSet downset) const {
    return poset_->describe(poset_->maximal(downset));
  }

  bool operator==(const ScaledBase& other) const {
    return d_ == other.d_ && labels_ == other.labels_ && *poset_ == *other.poset_;
  }

 private:
  std::shared_ptr<const Poset> poset_;
  int d_ = 0;
  std::vector<int> labels_;
  std::vector<PointSet> by_label_;
};

LatticeElement c_k(const ScaledBase& base, const LatticeElement& a, int k);
int scdim(const ScaledBase& base, const LatticeElement& a);
bool is_k_sc_pure(const ScaledBase& base, const LatticeElement& a, int k);

// A finite substructure of a base, closed under join, meet, difference, every
// C^k and containing both constants.
struct SubLattice {
  std::vector<PointSet> elements;      // ambient downsets, sorted
  std::vector<PointSet> irreducibles;  // ambient image of each induced point
  ScaledBase induced;

  bool contains(PointSet x) const;
  int size() const { return static_cast<int>(irreducibles.size()); }
  PointSet to_ambient(PointSet induced_downset) const;
  PointSet to_induced(PointSet ambient) const;
};

std::vector<PointSet> close_under_operations(const ScaledBase& base,
                                             const std::vector<PointSet>& seeds);

// Builds the induced base of a closed element set; labels are ambient scdims.
SubLattice substructure(const ScaledBase& base, std::vector<PointSet> closed);

SubLattice generate(const ScaledBase& base, const std::vector<PointSet>& seeds);
SubLattice prime_substructure(const ScaledBase& base);

// The image of an embedding given by the images of the source points; the
// induced base is the source itself.
SubLattice image_substructure(const ScaledBase& ambient, const ScaledBase& source,
                              const std::vector<PointSet>& point_images);

// Complete isomorphism invariant of a labeled poset with optional extra point
// colors; the bound d is not part of the invariant.
std::string canonical_form(const ScaledBase& base, const std::vector<std::uint64_t>& colors = {});
bool is_isomorphic(const ScaledBase& a, const ScaledBase& b);

std::string to_hex(std::string_view bytes);

}  // namespace sclat
