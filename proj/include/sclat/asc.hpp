#pragma once

#include <bit>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sclat/axioms.hpp"
#include "sclat/extension.hpp"
#include "sclat/scaled.hpp"

namespace sclat {

// A finite base with atom counts. atom_asc[p] is the weight of the atom
// below minimal point p; 0 means "no finite count" and is the only value
// allowed on points of positive label or on non-minimal points.
class AscBase {
 public:
  AscBase() = default;
  AscBase(ScaledBase base, std::vector<int> atom_asc);
  static AscBase from_names(ScaledBase base, const std::map<std::string, int>& weights);

  const ScaledBase& base() const { return base_; }
  const std::vector<int>& weights() const { return atom_asc_; }
  int weight(int point) const { return atom_asc_[point]; }

  // Sum of the atom weights when a has scdim 0 and every weight is positive.
  int asc(PointSet a) const;
  bool at(int k, PointSet a) const { return k > 0 && asc(a) == k; }

  bool operator==(const AscBase& other) const = default;

 private:
  ScaledBase base_;
  std::vector<int> atom_asc_;
};

using AscTable = std::map<PointSet, int>;

AscTable asc_table(const AscBase& base);

// ASC1-ASC3 and standardness. The table form checks an arbitrary asc
// assignment on the elements of the base.
AxiomReport check_asc_axioms(const AscBase& base);
AxiomReport check_asc_axioms(const ScaledBase& base, const AscTable& table);

bool is_standard(const AscBase& base);

std::string completion_invariant(const AscBase& base);

// Throws a refusal error unless both bases are standard.
bool pre_algebraic_equiv(const AscBase& a, const AscBase& b);

// asc preserved on atoms (criterion) and on every element (direct).
struct AscEmbeddingReport {
  bool atoms = true;
  bool all = true;
  std::string failure;

  bool consistent() const { return atoms == all; }
};

// images are aligned to source.base().elements(); target_asc gives the asc
// of an image.
template <class V>
AscEmbeddingReport asc_embed_check(const AscBase& source, const std::vector<V>& images,
                                   const std::function<int(const V&)>& target_asc) {
  const auto elems = source.base().elements();
  if (images.size() != elems.size()) fail(ErrorKind::argument, "the map must give an image for every source element");
  AscEmbeddingReport report;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const int want = source.asc(elems[i]);
    const int got = target_asc(images[i]);
    if (want == got) continue;
    const bool atom = std::popcount(elems[i]) == 1;
    const std::string what = "asc of " + source.base().describe(elems[i]) + " is " + std::to_string(want) +
                             " but its image has " + std::to_string(got);
    if (report.failure.empty()) report.failure = what;
    report.all = false;
    if (atom) report.atoms = false;
  }
  return report;
}

// (g, {(h1, k1), (h2, k2)}, q).
struct AscSignature {
  Signature sc;
  int k1 = 0;
  int k2 = 0;

  AscSignature normalized() const;
  bool operator==(const AscSignature& other) const;
};

std::string describe(const AscBase& base, const AscSignature& s);

// Empty when valid; otherwise the violated condition.
std::string asc_signature_problem(const AscBase& base, const AscSignature& s);

// Atom counts range over cap plus 0. The default cap is every weight in use.
std::vector<int> default_cap(const AscBase& base);
std::vector<AscSignature> enumerate_asc_signatures(const AscBase& base, const std::vector<int>& cap);

struct AscExtension {
  AscBase base;
  Extension sc;
};

AscExtension apply_asc_signature(const AscBase& base, const AscSignature& sigma);

// Form up to isomorphism fixing the old lattice and the atom counts; at most
// 48 old points.
std::string canonical_form_over(const AscBase& extended, const std::vector<PointSet>& point_image);

}  // namespace sclat
