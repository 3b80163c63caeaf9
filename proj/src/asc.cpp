#include "sclat/asc.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "sclat/embed.hpp"

namespace sclat {

AscBase::AscBase(ScaledBase base, std::vector<int> atom_asc) : base_(std::move(base)), atom_asc_(std::move(atom_asc)) {
  if (atom_asc_.empty()) atom_asc_.assign(base_.size(), 0);
  if (static_cast<int>(atom_asc_.size()) != base_.size())
    fail(ErrorKind::ill_formed_input, "one atom count per point is required");
  const Poset& p = base_.poset();
  for (int i = 0; i < base_.size(); ++i) {
    const int w = atom_asc_[i];
    if (w < 0) fail(ErrorKind::ill_formed_input, "atom count of " + p.name(i) + " is negative");
    if (w == 0) continue;
    if (p.strictly_below(i) != 0) fail(ErrorKind::ill_formed_input, p.name(i) + " is not minimal but has an atom count");
    if (base_.label(i) != 0)
      fail(ErrorKind::ill_formed_input, p.name(i) + " has label " + std::to_string(base_.label(i)) +
                                            " but a positive atom count needs scdim 0");
  }
}

AscBase AscBase::from_names(ScaledBase base, const std::map<std::string, int>& weights) {
  std::vector<int> w(base.size(), 0);
  for (const auto& [name, k] : weights) {
    const auto i = base.poset().index_of(name);
    if (!i) fail(ErrorKind::ill_formed_input, "unknown point " + name + " in asc");
    w[*i] = k;
  }
  return AscBase(std::move(base), std::move(w));
}

int AscBase::asc(PointSet a) const {
  if (a == 0 || base_.scdim(a) != 0) return 0;
  int sum = 0;
  // scdim 0 forces every point of a to be a label-0 minimal point.
  for (int i = 0; i < base_.size(); ++i) {
    if (!has_point(a, i)) continue;
    if (atom_asc_[i] == 0) return 0;
    sum += atom_asc_[i];
  }
  return sum;
}

AscTable asc_table(const AscBase& base) {
  AscTable t;
  for (PointSet x : base.base().elements()) t[x] = base.asc(x);
  return t;
}

AxiomReport check_asc_axioms(const AscBase& base) { return check_asc_axioms(base.base(), asc_table(base)); }

AxiomReport check_asc_axioms(const ScaledBase& base, const AscTable& table) {
  AxiomReport report;
  auto add = [&](std::string name, std::string statement, bool required) -> AxiomVerdict& {
    report.verdicts.push_back({std::move(name), std::move(statement), true, required, {}});
    return report.verdicts.back();
  };
  auto failed = [](AxiomVerdict& v, const std::string& witness) {
    if (!v.pass) return;
    v.pass = false;
    v.witness = witness;
  };
  const auto elems = base.elements();
  auto value = [&](PointSet x) {
    const auto it = table.find(x);
    return it == table.end() ? -1 : it->second;
  };
  auto show = [&](PointSet x) { return base.describe(x); };

  auto& partition = add("ASC1", "each element has exactly one atom count", true);
  for (PointSet a : elems)
    if (value(a) < 0) failed(partition, "a=" + show(a) + " has no atom count");

  auto& bound = add("ASC2", "asc(a) = k > 0 implies at most 2^k elements below a and scdim a = 0", true);
  for (PointSet a : elems) {
    const int k = value(a);
    if (k <= 0) continue;
    const bool small = k >= 62 || base.poset().downsets(a).size() <= (std::size_t{1} << k);
    if (!small || base.scdim(a) != 0) failed(bound, "a=" + show(a) + ", asc=" + std::to_string(k));
  }

  auto& additive = add("ASC3", "asc is additive over disjoint nonzero decompositions", true);
  for (PointSet a : elems) {
    const int k = value(a);
    for (PointSet a1 : base.poset().downsets(a)) {
      if (a1 == 0 || a1 == a) continue;
      for (PointSet a2 : base.poset().downsets(a)) {
        if (a2 == 0 || (a1 & a2) != 0 || (a1 | a2) != a) continue;
        const int k1 = value(a1);
        const int k2 = value(a2);
        // At_j(a) iff some 0 < l < j has At_l(a1) and At_{j-l}(a2).
        const int top = std::max({k, k1 + k2, 1});
        for (int j = 1; j <= top; ++j) {
          const bool lhs = k == j;
          const bool rhs = k1 > 0 && k2 > 0 && k1 + k2 == j;
          if (lhs != rhs)
            failed(additive, "a=" + show(a) + ", a1=" + show(a1) + ", a2=" + show(a2) + ", k=" + std::to_string(j));
        }
      }
    }
  }

  auto& standard = add("standard", "every element of scdim 0 has a positive atom count", false);
  for (PointSet a : elems)
    if (a != 0 && base.scdim(a) == 0 && value(a) <= 0) failed(standard, "a=" + show(a));
  return report;
}

bool is_standard(const AscBase& base) { return check_asc_axioms(base).at("standard").pass; }

std::string completion_invariant(const AscBase& base) {
  const SubLattice prime = prime_substructure(base.base());
  std::vector<std::uint64_t> colors;
  for (PointSet x : prime.irreducibles) colors.push_back(static_cast<std::uint64_t>(base.asc(x)));
  return canonical_form(prime.induced, colors);
}

bool pre_algebraic_equiv(const AscBase& a, const AscBase& b) {
  for (const AscBase* x : {&a, &b}) {
    const auto report = check_asc_axioms(*x);
    if (!report.at("standard").pass)
      fail(ErrorKind::refusal, "only standard models are compared; element " + report.at("standard").witness +
                                   " has scdim 0 and no finite atom count");
  }
  return completion_invariant(a) == completion_invariant(b);
}

AscSignature AscSignature::normalized() const {
  AscSignature out = *this;
  const bool swap = element_less(sc.h1, sc.h2) || (sc.h1 == sc.h2 && k1 < k2);
  if (swap) {
    std::swap(out.sc.h1, out.sc.h2);
    std::swap(out.k1, out.k2);
  }
  return out;
}

bool AscSignature::operator==(const AscSignature& other) const {
  const auto a = normalized();
  const auto b = other.normalized();
  return a.sc.g == b.sc.g && a.sc.q == b.sc.q && a.sc.h1 == b.sc.h1 && a.sc.h2 == b.sc.h2 && a.k1 == b.k1 &&
         a.k2 == b.k2;
}

std::string describe(const AscBase& base, const AscSignature& s) {
  return describe(base.base(), s.sc) + " K=(" + std::to_string(s.k1) + "," + std::to_string(s.k2) + ")";
}

std::string asc_signature_problem(const AscBase& base, const AscSignature& s) {
  if (auto sc = signature_problem(base.base(), s.sc); !sc.empty()) return sc;
  if (s.k1 < 0 || s.k2 < 0) return "atom counts must be non-negative";
  const int gdim = base.base().label(s.sc.g);
  const int gasc = base.asc(base.base().poset().principal(s.sc.g));
  if (s.sc.q < gdim && s.k1 != s.k2) return "q < scdim g requires k1 = k2";
  if (s.sc.q != 0 && (s.k1 != 0 || s.k2 != 0)) return "q != 0 requires k1 = k2 = 0";
  if ((s.k1 == 0 || s.k2 == 0) && gasc != 0) return "k1 = 0 or k2 = 0 requires asc(g) = 0";
  if (s.k1 != 0 && s.k2 != 0 && gdim == 0 && gasc != s.k1 + s.k2) return "scdim g = 0 requires asc(g) = k1 + k2";
  return {};
}

std::vector<int> default_cap(const AscBase& base) {
  std::set<int> out{0};
  for (int w : base.weights()) out.insert(w);
  return {out.begin(), out.end()};
}

std::vector<AscSignature> enumerate_asc_signatures(const AscBase& base, const std::vector<int>& cap) {
  if (cap.empty()) fail(ErrorKind::argument, "the atom count cap set is empty");
  std::set<int> values(cap.begin(), cap.end());
  values.insert(0);
  if (*values.begin() < 0) fail(ErrorKind::argument, "atom counts must be non-negative");
  std::vector<AscSignature> out;
  for (const Signature& sc : enumerate_signatures(base.base())) {
    for (int k1 : values) {
      for (int k2 : values) {
        // With equal lower sets the couples form a set: list each pair once.
        if (sc.h1 == sc.h2 && k1 < k2) continue;
        const AscSignature s{sc, k1, k2};
        if (asc_signature_problem(base, s).empty()) out.push_back(s);
      }
    }
  }
  return out;
}

AscExtension apply_asc_signature(const AscBase& base, const AscSignature& sigma) {
  if (auto problem = asc_signature_problem(base, sigma); !problem.empty())
    fail(ErrorKind::argument, "invalid ASC signature: " + problem);
  AscExtension out;
  out.sc = apply_signature(base.base(), sigma.sc);
  const ScaledBase& big = out.sc.base;
  const Poset& p = big.poset();
  std::vector<int> weights(big.size(), 0);
  for (int i = 0; i < base.base().size(); ++i) {
    const PointSet top = p.maximal(out.sc.point_image[i]);
    if (std::popcount(top) == 1) weights[std::countr_zero(top)] = base.weight(i);
  }
  auto assign = [&](PointSet x, int k) {
    const PointSet top = p.maximal(x);
    require_invariant(std::popcount(top) == 1, "generators of a primitive extension are irreducible");
    const int point = std::countr_zero(top);
    // Only new atoms carry counts; larger generators have asc 0 anyway.
    if (p.strictly_below(point) == 0 && big.label(point) == 0) weights[point] = k;
  };
  assign(out.sc.x1, sigma.k1);
  assign(out.sc.x2, sigma.k2);
  out.base = AscBase(big, std::move(weights));

  require_invariant(out.base.asc(out.sc.x1) == sigma.k1 && out.base.asc(out.sc.x2) == sigma.k2,
                    "generators receive the requested atom counts");
  require_invariant(check_asc_axioms(out.base).all_required_pass(), "ASC axioms hold after the extension");
  const auto images = element_images(base.base(), out.sc.point_image);
  const std::function<int(const PointSet&)> target = [&](const PointSet& x) { return out.base.asc(x); };
  require_invariant(asc_embed_check(base, images, target).all, "the inclusion preserves atom counts");
  return out;
}

std::string canonical_form_over(const AscBase& extended, const std::vector<PointSet>& point_image) {
  if (point_image.size() > 48) fail(ErrorKind::argument, "at most 48 old points are supported");
  std::vector<std::uint64_t> colors(extended.base().size(), 0);
  for (std::size_t z = 0; z < point_image.size(); ++z)
    for_each_point(point_image[z], [&](int y) { colors[y] |= std::uint64_t{1} << z; });
  for (int y = 0; y < extended.base().size(); ++y) {
    if (extended.weight(y) >= (1 << 16)) fail(ErrorKind::argument, "atom count too large for a form");
    colors[y] |= static_cast<std::uint64_t>(extended.weight(y)) << 48;
  }
  return canonical_form(extended.base(), colors);
}

}  // namespace sclat
