#include <doctest.h>

#include "sclat/asc.hpp"
#include "sclat/embed.hpp"
#include "support.hpp"

using namespace sclat;
using fixtures::pts;

namespace {

// asc from the join-of-atoms reading: a > 0 has count k when it is the join
// of atoms, each with a positive count, summing to k.
int oracle_asc(const AscBase& b, PointSet a) {
  if (a == 0) return 0;
  const Poset& p = b.base().poset();
  std::vector<int> atoms;
  for (int i = 0; i < p.size(); ++i)
    if (p.strictly_below(i) == 0 && has_point(a, i)) atoms.push_back(i);
  const int n = static_cast<int>(atoms.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    PointSet join = 0;
    int sum = 0;
    bool positive = true;
    for (int j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      join |= point_bit(atoms[j]);
      // An atom's own count: its weight if it is a label-0 point.
      const int w = b.base().label(atoms[j]) == 0 ? b.weight(atoms[j]) : 0;
      if (w == 0) positive = false;
      sum += w;
    }
    if (join == a && positive) return sum;
  }
  return 0;
}

std::vector<AscBase> weightings(const ScaledBase& base, const std::vector<int>& values) {
  std::vector<int> slots;
  for (int i = 0; i < base.size(); ++i)
    if (base.poset().strictly_below(i) == 0 && base.label(i) == 0) slots.push_back(i);
  std::vector<AscBase> out;
  std::vector<int> w(base.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == slots.size()) {
      out.emplace_back(base, w);
      return;
    }
    for (int v : values) {
      w[slots[j]] = v;
      rec(j + 1);
    }
    w[slots[j]] = 0;
  };
  rec(0);
  return out;
}

std::vector<AscBase> small_asc_bases(int max_points, int d, const std::vector<int>& values) {
  std::vector<AscBase> out;
  for (int n = 0; n <= max_points; ++n)
    for (const auto& [o, lab] : oracle::labeled_posets(n, d))
      for (auto& b : weightings(oracle::to_base(o, lab, d), values)) out.push_back(std::move(b));
  return out;
}

using AscTuple = std::tuple<int, int, std::multiset<std::pair<PointSet, int>>>;

std::set<AscTuple> literal_asc_signatures(const AscBase& b, const std::vector<int>& cap) {
  std::set<AscTuple> out;
  std::set<int> ks(cap.begin(), cap.end());
  ks.insert(0);
  for (const auto& [g, h1, h2, q] : oracle::signatures(b.base())) {
    const int gdim = b.base().label(g);
    const int gasc = oracle_asc(b, b.base().poset().principal(g));
    for (int k1 : ks) {
      for (int k2 : ks) {
        if (q < gdim && k1 != k2) continue;
        if (q != 0 && !(k1 == 0 && k2 == 0)) continue;
        if ((k1 == 0 || k2 == 0) && gasc != 0) continue;
        if (k1 != 0 && k2 != 0 && gdim == 0 && gasc != k1 + k2) continue;
        out.insert({g, q, {{h1, k1}, {h2, k2}}});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("atom counts") {
  const AscBase ac(fixtures::ac2(), {1, 2});
  CHECK(ac.asc(ac.base().top()) == 3);
  CHECK(ac.asc(pts(ac.base(), {"a0"})) == 1);
  CHECK(ac.asc(0) == 0);
  CHECK_FALSE(ac.at(1, 0));
  CHECK(ac.at(3, ac.base().top()));

  const AscBase half(fixtures::ac2(), {0, 2});
  CHECK(half.asc(half.base().top()) == 0);

  const AscBase ch(fixtures::ch2(), {1, 0});
  CHECK(ch.asc(ch.base().top()) == 0);
  CHECK(ch.asc(pts(ch.base(), {"x0"})) == 1);

  CHECK_THROWS_AS(AscBase(fixtures::pt(1), {1}), Error);
  CHECK_THROWS_AS(AscBase(fixtures::ch2(), {0, 1}), Error);
  CHECK_THROWS_AS(AscBase(fixtures::pt(0), {-1}), Error);
  CHECK_THROWS_AS(AscBase::from_names(fixtures::pt(0), {{"nope", 1}}), Error);
  CHECK(AscBase::from_names(fixtures::ac2(), {{"a1", 2}}).weight(1) == 2);
}

TEST_CASE("asc agrees with the join-of-atoms reading") {
  for (const auto& b : small_asc_bases(4, 2, {0, 1, 2})) {
    for (PointSet a : b.base().elements()) CHECK(b.asc(a) == oracle_asc(b, a));
  }
}

TEST_CASE("ASC axioms") {
  const auto full = check_asc_axioms(AscBase(fixtures::ac2(), {1, 2}));
  CHECK(full.all_required_pass());
  CHECK(full.at("standard").pass);

  const auto half = check_asc_axioms(AscBase(fixtures::ac2(), {0, 2}));
  CHECK(half.all_required_pass());
  CHECK_FALSE(half.at("standard").pass);

  for (const auto& b : small_asc_bases(4, 2, {0, 1, 3})) CHECK(check_asc_axioms(b).all_required_pass());

  // Broken tables are caught.
  const auto ac = fixtures::ac2();
  const PointSet a0 = pts(ac, {"a0"});
  const PointSet a1 = pts(ac, {"a1"});
  CHECK_FALSE(check_asc_axioms(ac, {{0, 0}, {a0, 1}, {a1, 1}}).at("ASC1").pass);
  CHECK_FALSE(check_asc_axioms(ac, {{0, 0}, {a0, 1}, {a1, 1}, {ac.top(), 3}}).at("ASC3").pass);
  CHECK_FALSE(check_asc_axioms(ac, {{0, 0}, {a0, 1}, {a1, 0}, {ac.top(), 2}}).at("ASC3").pass);
  const auto pt1 = fixtures::pt(1);
  CHECK_FALSE(check_asc_axioms(pt1, {{0, 0}, {pt1.top(), 1}}).at("ASC2").pass);
}

TEST_CASE("completion invariants") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      CHECK((completion_invariant(AscBase(fixtures::pt(m), {})) ==
             completion_invariant(AscBase(fixtures::pt(n), {}))) == (m == n));

  const auto lp = fixtures::lp();
  CHECK(completion_invariant(AscBase(lp, {0, 1})) != completion_invariant(AscBase(lp, {0, 2})));
  const auto renamed = fixtures::make_base({"b", "z"}, {}, {0, 1}, 1);
  CHECK(completion_invariant(AscBase(lp, {0, 1})) == completion_invariant(AscBase(renamed, {1, 0})));

  const AscBase one(fixtures::pt(1), {});
  CHECK(pre_algebraic_equiv(one, AscBase(fixtures::ac2(1, 1), {})));
  CHECK_FALSE(pre_algebraic_equiv(one, AscBase(fixtures::pt(2), {})));
  CHECK(pre_algebraic_equiv(one, one));
  try {
    pre_algebraic_equiv(one, AscBase(fixtures::pt(0), {0}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::refusal);
  }
}

TEST_CASE("ASC signature examples") {
  const AscBase ch(fixtures::ch2(), {1, 0});
  const auto sigs = enumerate_asc_signatures(ch, {0, 1, 2});
  bool seen = false;
  for (const auto& s : sigs) {
    if (s.sc.g == 1 && s.sc.q == 1) {
      seen = true;
      CHECK(s.k1 == 0);
      CHECK(s.k2 == 0);
    }
  }
  CHECK(seen);
  CHECK(asc_signature_problem(ch, {{1, pts(ch.base(), {"x0"}), 0, 1}, 1, 1}).find("q != 0") != std::string::npos);

  const AscBase three(fixtures::pt(0), {3});
  CHECK(asc_signature_problem(three, {{0, 0, 0, 0}, 1, 2}).empty());
  CHECK(asc_signature_problem(three, {{0, 0, 0, 0}, 1, 1}).find("k1 + k2") != std::string::npos);

  const AscBase one(fixtures::pt(1), {});
  CHECK(asc_signature_problem(one, {{0, 0, 0, 0}, 1, 2}).find("k1 = k2") != std::string::npos);
  CHECK_THROWS_AS(enumerate_asc_signatures(one, {}), Error);
  CHECK(default_cap(three) == std::vector<int>{0, 3});

  const auto split = apply_asc_signature(three, {{0, 0, 0, 0}, 2, 1});
  CHECK(split.base.asc(split.sc.x1) == 2);
  CHECK(split.base.asc(split.sc.x2) == 1);
  CHECK(split.base.asc(split.base.base().top()) == 3);
  CHECK_THROWS_AS(apply_asc_signature(three, {{0, 0, 0, 0}, 1, 1}), Error);
}

TEST_CASE("ASC signature enumeration matches the definition") {
  const std::vector<int> cap{1, 2, 3};
  for (const auto& b : small_asc_bases(3, 2, {0, 1, 3})) {
    std::set<AscTuple> got;
    for (const auto& s : enumerate_asc_signatures(b, cap))
      got.insert({s.sc.g, s.sc.q, {{s.sc.h1, s.k1}, {s.sc.h2, s.k2}}});
    CHECK(got == literal_asc_signatures(b, cap));
  }
}

TEST_CASE("ASC extensions") {
  for (const auto& b : small_asc_bases(3, 2, {0, 1, 3})) {
    const std::string invariant = completion_invariant(b);
    std::set<std::string> forms;
    const auto sigs = enumerate_asc_signatures(b, {1, 2, 3});
    for (const auto& s : sigs) {
      const auto e = apply_asc_signature(b, s);
      const auto images = element_images(b.base(), e.sc.point_image);
      CHECK(embed_check(b.base(), LatticeTarget{e.base.base()}, images).ok());
      const std::function<int(const PointSet&)> target = [&](const PointSet& x) { return e.base.asc(x); };
      const auto rep = asc_embed_check(b, images, target);
      CHECK(rep.all);
      CHECK(rep.consistent());
      // The prime substructure of an extension is the image of the old one.
      CHECK(completion_invariant(e.base) == invariant);
      forms.insert(canonical_form_over(e.base, e.sc.point_image));
    }
    // Distinct signatures give extensions that differ over the base.
    CHECK(forms.size() == sigs.size());
  }
}

TEST_CASE("ASC extensions found by brute force are classified by signatures") {
  const std::vector<int> cap{1, 2, 3, 4};
  for (const auto& old : small_asc_bases(2, 1, {0, 1, 2})) {
    std::map<std::string, std::string> form_by_signature;
    for (const auto& big_sc : [&] {
           std::vector<ScaledBase> v;
           for (const auto& [o, lab] : oracle::labeled_posets(old.base().size() + 1, 1)) v.push_back(oracle::to_base(o, lab, 1));
           return v;
         }()) {
      for (const auto& big : weightings(big_sc, {0, 1, 2, 3, 4})) {
        for (const auto& images : oracle::embeddings(old.base(), big.base())) {
          const std::function<int(const PointSet&)> target = [&](const PointSet& x) { return big.asc(x); };
          const auto elem_images = element_images(old.base(), images);
          const auto rep = asc_embed_check(old, elem_images, target);
          CHECK(rep.consistent());
          if (!rep.atoms) continue;
          const SubLattice inner = image_substructure(big.base(), old.base(), images);
          const auto tower = tower_decompose(big.base(), inner);
          REQUIRE(tower.size() == 1);
          const auto& step = tower.front();
          const AscSignature s{step.sigma, big.asc(step.x1), big.asc(step.x2)};
          CHECK(asc_signature_problem(old, s).empty());
          const std::string key = describe(old, s.normalized());
          const std::string form = canonical_form_over(big, images);
          auto [it, fresh] = form_by_signature.emplace(key, form);
          CHECK(it->second == form);
          const auto built = apply_asc_signature(old, s);
          CHECK(canonical_form_over(built.base, built.sc.point_image) == form);
        }
      }
    }
    std::set<std::string> forms;
    for (const auto& [k, f] : form_by_signature) forms.insert(f);
    CHECK(forms.size() == form_by_signature.size());
  }
}
