#include "sclat/extension.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "sclat/embed.hpp"

namespace sclat {

bool element_less(PointSet a, PointSet b) {
  const int ca = count_points(a);
  const int cb = count_points(b);
  return ca != cb ? ca < cb : a < b;
}

Signature Signature::normalized() const {
  Signature s = *this;
  if (element_less(s.h1, s.h2)) std::swap(s.h1, s.h2);
  return s;
}

bool Signature::operator==(const Signature& other) const {
  const Signature a = normalized();
  const Signature b = other.normalized();
  return a.g == b.g && a.q == b.q && a.h1 == b.h1 && a.h2 == b.h2;
}

std::string describe(const ScaledBase& base, const Signature& s) {
  std::string h = base.describe(s.h1);
  if (s.h1 != s.h2) h += ", " + base.describe(s.h2);
  return "(g=" + base.describe(base.poset().principal(s.g)) + ", H=[" + h + "], q=" + std::to_string(s.q) + ")";
}

std::string signature_problem(const ScaledBase& base, const Signature& s) {
  const Poset& p = base.poset();
  if (s.g < 0 || s.g >= base.size()) return "g is not a join-irreducible of the base";
  if (!is_subset(s.h1, base.top()) || !p.is_downset(s.h1) || !is_subset(s.h2, base.top()) || !p.is_downset(s.h2))
    return "H must consist of elements of the base";
  const PointSet g = p.principal(s.g);
  const PointSet g_minus = p.strictly_below(s.g);
  const int sg = base.label(s.g);
  if (s.q < 0) return "q must be non-negative";
  if (s.q < sg) {
    if (s.h1 != s.h2) return "q < scdim g requires h1 = h2";
    if (!is_subset(s.h1, g) || s.h1 == g) return "q < scdim g requires h1 < g";
    if (base.scdim(s.h1) >= s.q) return "q < scdim g requires scdim h1 < q";
    return {};
  }
  if (s.q > sg) return "q exceeds scdim g";
  if ((s.h1 | s.h2) != g_minus) return "q = scdim g requires h1 v h2 = g^-";
  return {};
}

std::vector<Signature> enumerate_signatures(const ScaledBase& base) {
  const Poset& p = base.poset();
  std::vector<Signature> out;
  for (int g = 0; g < base.size(); ++g) {
    const PointSet g_minus = p.strictly_below(g);
    auto below = p.downsets(g_minus);
    std::sort(below.begin(), below.end(), [](PointSet a, PointSet b) { return element_less(b, a); });
    const int sg = base.label(g);
    for (int q = sg; q >= 0; --q) {
      if (q == sg) {
        for (std::size_t i = 0; i < below.size(); ++i) {
          for (std::size_t j = i; j < below.size(); ++j) {
            if ((below[i] | below[j]) == g_minus) out.push_back({g, below[i], below[j], q});
          }
        }
      } else {
        for (PointSet h : below) {
          if (base.scdim(h) < q) out.push_back({g, h, h, q});
        }
      }
    }
  }
  return out;
}

PointSet Extension::image(PointSet old_downset) const {
  PointSet out = 0;
  for_each_point(old_downset, [&](int i) { out |= point_image[i]; });
  return out;
}

namespace {

std::string fresh_name(std::set<std::string>& used, const std::string& stem) {
  for (int i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (used.insert(candidate).second) return candidate;
  }
}

Extension identity_extension(const ScaledBase& base) {
  Extension e;
  e.base = base;
  for (int i = 0; i < base.size(); ++i) e.point_image.push_back(base.poset().principal(i));
  return e;
}

// first then next, as one extension of first's source.
Extension compose(const Extension& first, const Extension& next) {
  Extension e;
  e.base = next.base;
  for (PointSet x : first.point_image) e.point_image.push_back(next.image(x));
  return e;
}

}  // namespace

Extension apply_signature(const ScaledBase& base, const Signature& sigma) {
  if (auto why = signature_problem(base, sigma); !why.empty()) fail(ErrorKind::argument, "invalid signature: " + why);
  const Poset& p = base.poset();
  const int n = base.size();
  const bool split = sigma.arity(base) == 2;

  std::set<std::string> used(p.names().begin(), p.names().end());
  std::vector<int> where(n, -1);
  std::vector<std::string> names;
  std::vector<int> labels;
  for (int i = 0; i < n; ++i) {
    if (split && i == sigma.g) continue;
    where[i] = static_cast<int>(names.size());
    names.push_back(p.name(i));
    labels.push_back(base.label(i));
  }
  const int x1 = static_cast<int>(names.size());
  names.push_back(fresh_name(used, split ? p.name(sigma.g) + "_" : "e"));
  labels.push_back(sigma.q);
  int x2 = x1;
  if (split) {
    x2 = x1 + 1;
    names.push_back(fresh_name(used, p.name(sigma.g) + "_"));
    labels.push_back(sigma.q);
  }

  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(i, j) && where[i] >= 0 && where[j] >= 0) less.emplace_back(where[i], where[j]);
  const PointSet above = split ? p.strictly_above(sigma.g) : p.strictly_above(sigma.g) | point_bit(sigma.g);
  for (auto [x, h] : {std::pair{x1, sigma.h1}, std::pair{x2, sigma.h2}}) {
    for_each_point(h, [&](int z) { less.emplace_back(where[z], x); });
    for_each_point(above, [&](int u) { less.emplace_back(x, where[u]); });
  }

  Extension e;
  e.base = ScaledBase(Poset::from_relation(std::move(names), less), base.d(), std::move(labels));
  const Poset& np = e.base.poset();
  for (int z = 0; z < n; ++z) {
    PointSet s = 0;
    for_each_point(p.principal(z), [&](int w) {
      s |= where[w] >= 0 ? point_bit(where[w]) : point_bit(x1) | point_bit(x2);
    });
    e.point_image.push_back(np.down_closure(s));
  }
  e.x1 = np.principal(x1);
  e.x2 = np.principal(x2);
  e.sigma = sigma;
  require_invariant(e.base.size() == n + 1, "a primitive extension adds exactly one irreducible");
  return e;
}

Signature signature_of(const ScaledBase& old_base, const ScaledBase& extended,
                       const std::vector<PointSet>& point_image, PointSet x1, PointSet x2) {
  const SubLattice sub = image_substructure(extended, old_base, point_image);
  const auto report = embed_check(old_base, LatticeTarget{extended}, element_images(old_base, point_image));
  if (!report.direct) fail(ErrorKind::argument, "the old lattice is not embedded: " + report.direct_failure);
  const Poset& np = extended.poset();
  for (PointSet x : {x1, x2}) {
    if (x == 0 || !np.is_downset(x) || !is_subset(x, extended.top()))
      fail(ErrorKind::precondition, "x1 and x2 must be non-zero elements of the extension");
  }

  PointSet g = extended.top();
  for (PointSet y : sub.elements) {
    if (is_subset(x1, y)) g &= y;
  }
  int gp = -1;
  for (int z = 0; z < old_base.size(); ++z) {
    if (point_image[z] == g) gp = z;
  }
  if (gp < 0) fail(ErrorKind::precondition, "P2 fails: g(x1, L0) is not join-irreducible in L0");
  const PointSet g_minus = sub.to_ambient(old_base.poset().strictly_below(gp));
  const PointSet m1 = g_minus & x1;
  const PointSet m2 = g_minus & x2;
  if (!sub.contains(m1) || !sub.contains(m2)) fail(ErrorKind::precondition, "P1 fails: g^- ^ x_i is not in L0");

  if (x1 == x2) {
    if (!strongly_below(np, m1, x1) || !strongly_below(np, x1, g))
      fail(ErrorKind::precondition, "P2 fails: x1 = x2 requires g^- ^ x1 << x1 << g");
  } else {
    if (!sub.contains(x1 & x2)) fail(ErrorKind::precondition, "P2 fails: x1 ^ x2 is not in L0");
    if (extended.diff(g, x1) != x2 || extended.diff(g, x2) != x1)
      fail(ErrorKind::precondition, "P2 fails: g - x1 = x2 and g - x2 = x1 are required");
  }
  const int s1 = extended.scdim(x1);
  const int s2 = extended.scdim(x2);
  if (!extended.sc_pure(x1, s1) || !extended.sc_pure(x2, s2) || s1 != s2)
    fail(ErrorKind::precondition, "P3 fails: x1 and x2 must be sc-pure of the same sc-dimension");

  Signature s{gp, sub.to_induced(m1), sub.to_induced(m2), s1};
  require_invariant(signature_problem(old_base, s).empty(), "a primitive couple yields a valid signature");
  return s;
}

std::string canonical_form_over(const ScaledBase& extended, const std::vector<PointSet>& point_image) {
  std::vector<std::uint64_t> colors(extended.size(), 0);
  for (std::size_t z = 0; z < point_image.size(); ++z) {
    for_each_point(point_image[z], [&](int y) { colors[y] |= std::uint64_t{1} << z; });
  }
  return canonical_form(extended, colors);
}

std::vector<TowerStep> tower_decompose(const ScaledBase& outer, const SubLattice& inner) {
  auto sorted = inner.elements;
  std::sort(sorted.begin(), sorted.end());
  if (close_under_operations(outer, sorted) != sorted) fail(ErrorKind::argument, "inner is not a substructure of outer");

  const Poset& p = outer.poset();
  std::vector<TowerStep> steps;
  // Keep the caller's point order when the induced base is supplied.
  SubLattice cur = inner.irreducibles.empty() ? substructure(outer, sorted) : inner;
  cur.elements = sorted;
  while (cur.size() < outer.size()) {
    PointSet missing = 0;
    for (int v = 0; v < outer.size(); ++v) {
      if (!cur.contains(p.principal(v))) missing |= point_bit(v);
    }
    // Least minimal missing irreducible.
    int v = -1;
    for_each_point(missing, [&](int w) {
      if (v < 0 && (p.strictly_below(w) & missing) == 0) v = w;
    });
    const PointSet x1 = p.principal(v);
    PointSet g = outer.top();
    for (PointSet y : cur.elements) {
      if (is_subset(x1, y)) g &= y;
    }
    const PointSet x2 = strongly_below(p, x1, g) ? x1 : outer.diff(g, x1);

    TowerStep step;
    step.before = cur.induced;
    step.sigma = signature_of(cur.induced, outer, cur.irreducibles, x1, x2);
    step.x1 = x1;
    step.x2 = x2;
    auto seeds = cur.elements;
    seeds.push_back(x1);
    seeds.push_back(x2);
    step.after = substructure(outer, close_under_operations(outer, seeds));
    require_invariant(step.after.size() == cur.size() + 1, "each tower step adds one irreducible");

    // The step is the primitive extension named by its signature.
    const Extension built = apply_signature(cur.induced, step.sigma);
    std::vector<PointSet> inside;
    for (PointSet x : cur.irreducibles) inside.push_back(step.after.to_induced(x));
    require_invariant(canonical_form_over(built.base, built.point_image) == canonical_form_over(step.after.induced, inside),
                      "tower step matches the extension built from its signature");

    cur = step.after;
    steps.push_back(std::move(step));
  }
  return steps;
}

namespace {

struct Splitter {
  std::vector<std::string>& trace;

  // Extends `base` so that a1, a2 split a along b1, b2. New irreducibles lie
  // below a, and none has label 0 when C^0(a) = 0.
  SplitResult run(const ScaledBase& base, PointSet a, PointSet b1, PointSet b2) {
    const Poset& p = base.poset();
    const int d = base.scdim(a);
    std::vector<int> comps;
    for_each_point(p.maximal(a), [&](int g) { comps.push_back(g); });

    SplitResult out;
    if (d == 0) {
      require_invariant(b1 == 0 && b2 == 0, "b1 v b2 << a forces b1 = b2 = 0 in dimension 0");
      if (comps.size() == 1) {
        const Signature sigma{comps[0], 0, 0, 0};
        trace.push_back("split atom " + describe(base, sigma));
        Extension e = apply_signature(base, sigma);
        out.a1 = e.x1;
        out.a2 = e.x2;
        out.extension = std::move(e);
      } else {
        out.extension = identity_extension(base);
        out.a1 = p.principal(comps[0]);
        out.a2 = base.diff(a, out.a1);
        trace.push_back("separate components of " + base.describe(a));
      }
      return out;
    }

    PointSet g_minus_join = 0;
    for (int g : comps) g_minus_join |= p.strictly_below(g);
    require_invariant(is_subset(b1 | b2, g_minus_join), "b1 v b2 lies below the predecessors of the components");
    const PointSet u = base.diff(g_minus_join, b1 | b2);
    const PointSet c0u = base.ck(u, 0);
    const PointSet u_star = base.diff(u, c0u);

    Extension cur = identity_extension(base);
    PointSet u1_star = 0;
    PointSet u2_star = 0;
    if (base.scdim(u) > 0) {
      trace.push_back("recurse on " + base.describe(u_star));
      SplitResult inner = run(base, u_star, b1 & u_star, b2 & u_star);
      cur = std::move(inner.extension);
      u1_star = inner.a1;
      u2_star = inner.a2;
      for (int g : comps) {
        const PointSet img = cur.image(p.principal(g));
        const PointSet top_point = cur.base.poset().maximal(img);
        require_invariant(count_points(top_point) == 1 &&
                              cur.base.poset().strictly_below(std::countr_zero(top_point)) ==
                                  cur.image(p.strictly_below(g)),
                          "components of a keep their predecessor through the recursion");
      }
    }
    const PointSet B1 = cur.image(b1);
    const PointSet B2 = cur.image(b2);
    const PointSet U1 = cur.image(c0u) | u1_star;
    const PointSet U2 = u2_star;
    require_invariant((U1 | U2) == cur.base.diff(cur.image(g_minus_join), B1 | B2), "u1 v u2 = (v g_i^-) - (b1 v b2)");
    require_invariant(((B1 | U1) & (B2 | U2)) == (B1 & B2), "(b1 v u1) ^ (b2 v u2) = b1 ^ b2");

    PointSet left = B1 | U1;
    PointSet right = B2 | U2;
    PointSet a1 = 0;
    PointSet a2 = 0;
    for (int g : comps) {
      const PointSet gi = cur.image(p.principal(g));
      const int point = std::countr_zero(cur.base.poset().maximal(gi));
      const PointSet gi_minus = cur.base.poset().strictly_below(point);
      const Signature sigma{point, gi_minus & left, gi_minus & right, cur.base.label(point)};
      trace.push_back("apply " + describe(cur.base, sigma));
      const Extension step = apply_signature(cur.base, sigma);
      left = step.image(left);
      right = step.image(right);
      a1 = step.image(a1) | step.x1;
      a2 = step.image(a2) | step.x2;
      cur = compose(cur, step);
    }
    out.extension = std::move(cur);
    out.a1 = a1;
    out.a2 = a2;
    return out;
  }
};

}  // namespace

SplitResult splitting_extension(const ScaledBase& base, PointSet a, PointSet b1, PointSet b2) {
  const Poset& p = base.poset();
  for (PointSet x : {a, b1, b2}) {
    if (!is_subset(x, base.top()) || !p.is_downset(x)) fail(ErrorKind::argument, "arguments must be elements of the base");
  }
  if (a == 0 || !strongly_below(p, b1 | b2, a))
    fail(ErrorKind::argument, "splitting requires b1 v b2 << a != 0");

  std::vector<std::string> trace;
  SplitResult r = Splitter{trace}.run(base, a, b1, b2);
  r.trace = std::move(trace);

  const Extension& e = r.extension;
  const ScaledBase& L = e.base;
  const PointSet A = e.image(a);
  const PointSet B1 = e.image(b1);
  const PointSet B2 = e.image(b2);
  require_invariant(r.a1 != 0 && r.a2 != 0, "split parts are non-zero");
  require_invariant(r.a1 == L.diff(A, r.a2) && r.a2 == L.diff(A, r.a1), "a1 = a - a2 and a2 = a - a1");
  require_invariant((r.a1 & r.a2) == (B1 & B2), "a1 ^ a2 = b1 ^ b2");
  require_invariant(is_subset(B1, r.a1) && is_subset(B2, r.a2), "a_i >= b_i");
  std::unordered_set<PointSet> old(e.point_image.begin(), e.point_image.end());
  for (int y = 0; y < L.size(); ++y) {
    const PointSet py = L.poset().principal(y);
    if (old.count(py)) continue;
    require_invariant(is_subset(py, A), "new irreducibles lie below a");
    if (base.ck(a, 0) == 0) require_invariant(L.label(y) > 0, "no new atoms of dimension 0 when C0(a) = 0");
  }
  return r;
}

CatenarityVerdict check_catenarity(const ScaledBase& base) {
  const auto elems = base.elements();
  const int d = base.d();
  CatenarityVerdict v;
  auto pure_dim = [&](PointSet x) {
    const int s = base.scdim(x);
    return base.sc_pure(x, s) ? s : -1;
  };
  for (PointSet a : elems) {
    if (a == 0) continue;
    const int p = pure_dim(a);
    if (p < 0) continue;
    for (PointSet c : elems) {
      if (!is_subset(c, a)) continue;
      // c = 0 is r-pure for every r; r = 0 is then the weakest case.
      const int r = c == 0 ? 0 : pure_dim(c);
      if (r < 0 || r > p) continue;
      for (int q = r; q <= p && q <= d; ++q) {
        bool found = false;
        for (PointSet b : elems) {
          if (b != 0 && is_subset(c, b) && is_subset(b, a) && base.sc_pure(b, q)) {
            found = true;
            break;
          }
        }
        if (!found) {
          v.pass = false;
          v.c = c;
          v.a = a;
          v.r = r;
          v.q = q;
          v.p = p;
          v.witness = "c=" + base.describe(c) + ", a=" + base.describe(a) + ", r=" + std::to_string(r) +
                      ", q=" + std::to_string(q) + ", p=" + std::to_string(p);
          return v;
        }
      }
    }
  }
  return v;
}

bool catenary_points(const std::vector<std::vector<char>>& leq, const std::vector<int>& labels, std::string* witness) {
  const std::size_t n = labels.size();
  auto report = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  for (std::size_t w = 0; w < n; ++w) {
    for (int q = 0; q <= labels[w]; ++q) {
      bool found = false;
      for (std::size_t y = 0; y < n && !found; ++y) found = leq[y][w] && labels[y] == q;
      if (!found) return report("point " + std::to_string(w) + " has nothing of label " + std::to_string(q) + " below");
    }
    for (std::size_t z = 0; z < n; ++z) {
      if (z == w || !leq[z][w]) continue;
      for (int q = labels[z] + 1; q < labels[w]; ++q) {
        bool found = false;
        for (std::size_t y = 0; y < n && !found; ++y) found = leq[z][y] && leq[y][w] && labels[y] == q;
        if (!found)
          return report("no point of label " + std::to_string(q) + " between " + std::to_string(z) + " and " +
                        std::to_string(w));
      }
    }
  }
  return true;
}

}  // namespace sclat
