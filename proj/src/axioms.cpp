#include "sclat/axioms.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace sclat {

const AxiomVerdict& AxiomReport::at(std::string_view name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return v;
  }
  fail(ErrorKind::argument, "no verdict named " + std::string(name));
}

bool AxiomReport::all_required_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return !v.required || v.pass; });
}

int scdim_by_definition(const ScaledBase& base, PointSet a) {
  if (a == 0) return minus_infinity;
  PointSet acc = 0;
  for (int k = 0; k <= base.d(); ++k) {
    acc |= base.ck(a, k);
    if (acc == a) return k;
  }
  return base.d() + 1;  // not a join of its components: reported by SS1
}

bool is_lattice_pure(const ScaledBase& base, PointSet a, int k, const std::vector<PointSet>& universe) {
  for (PointSet b : universe) {
    const PointSet r = base.diff(a, b);
    if (r != 0 && base.dim(r) != k) return false;
  }
  return true;
}

namespace {

class Run {
 public:
  Run(const ScaledBase& base, AxiomReport& report) : base_(base), report_(report) {}

  void declare(const std::string& name, const std::string& statement, bool required = true) {
    index_[name] = report_.verdicts.size();
    report_.verdicts.push_back({name, statement, true, required, {}});
  }

  template <class Witness>
  void expect(const std::string& name, bool ok, Witness&& witness) {
    if (ok) return;
    auto& v = report_.verdicts[index_.at(name)];
    if (v.pass) {
      v.pass = false;
      v.witness = witness();
    }
  }

  bool passed(const std::string& name) const { return report_.verdicts[index_.at(name)].pass; }

  std::string show(std::initializer_list<std::pair<const char*, PointSet>> elems,
                   std::initializer_list<std::pair<const char*, int>> ints = {}) const {
    std::string out;
    for (const auto& [n, x] : elems) out += (out.empty() ? "" : ", ") + std::string(n) + "=" + base_.describe(x);
    for (const auto& [n, v] : ints) out += (out.empty() ? "" : ", ") + std::string(n) + "=" + dim_to_string(v);
    return out;
  }

 private:
  const ScaledBase& base_;
  AxiomReport& report_;
  std::unordered_map<std::string, std::size_t> index_;
};

std::vector<PointSet> random_downsets(const ScaledBase& base, std::mt19937_64& rng, std::size_t count) {
  std::unordered_set<PointSet> seen{0, base.top()};
  std::vector<PointSet> out{0, base.top()};
  std::uniform_int_distribution<int> keep(0, 3);
  for (std::size_t attempt = 0; out.size() < count && attempt < 50 * count; ++attempt) {
    PointSet s = 0;
    for (int i = 0; i < base.size(); ++i) {
      if (keep(rng) == 0) s |= point_bit(i);
    }
    s = base.poset().down_closure(s);
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

}  // namespace

AxiomReport check_axioms(const ScaledBase& base, const AxiomOptions& options) {
  AxiomReport report;
  Run run(base, report);
  const int d = base.d();
  const int kmax = d + 1;  // one past d exercises the vanishing clause
  const Poset& poset = base.poset();

  report.sampled = options.force_sampling || base.size() > options.exhaustive_limit;
  report.seed = options.seed;
  std::mt19937_64 rng(options.seed);

  std::vector<PointSet> universe;
  if (!report.sampled || base.size() <= 16) {
    universe = base.elements();
  } else {
    universe = random_downsets(base, rng, 256);
  }
  const std::size_t n = universe.size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  report.tuples = report.sampled ? options.samples : 0;

  auto unary = [&](auto&& body) {
    if (!report.sampled) {
      for (PointSet a : universe) body(a);
    } else {
      for (std::size_t t = 0; t < options.samples; ++t) body(universe[pick(rng)]);
    }
  };
  auto binary = [&](auto&& body) {
    if (!report.sampled) {
      for (PointSet a : universe)
        for (PointSet b : universe) body(a, b);
    } else {
      for (std::size_t t = 0; t < options.samples; ++t) body(universe[pick(rng)], universe[pick(rng)]);
    }
  };
  auto ternary = [&](auto&& body) {
    if (!report.sampled) {
      for (PointSet a : universe)
        for (PointSet b : universe)
          for (PointSet c : universe) body(a, b, c);
    } else {
      for (std::size_t t = 0; t < options.samples; ++t)
        body(universe[pick(rng)], universe[pick(rng)], universe[pick(rng)]);
    }
  };

  auto scd = [&](PointSet a) { return scdim_by_definition(base, a); };
  auto C = [&](PointSet a, int k) { return base.ck(a, k); };
  auto diff = [&](PointSet a, PointSet b) { return base.diff(a, b); };
  auto join_of = [&](PointSet a, unsigned subset) {
    PointSet out = 0;
    for (int i = 0; i <= d; ++i) {
      if (subset >> i & 1U) out |= C(a, i);
    }
    return out;
  };
  const unsigned all_indices = (1U << (d + 1)) - 1;

  // Purity by definition, tabulated over the universe.
  std::unordered_map<PointSet, std::vector<char>> sc_pure;
  std::unordered_map<PointSet, std::vector<char>> lat_pure;
  for (PointSet x : universe) {
    auto& sp = sc_pure[x];
    auto& lp = lat_pure[x];
    sp.assign(kmax + 1, 1);
    lp.assign(kmax + 1, 1);
    for (PointSet b : universe) {
      const PointSet r = diff(x, b);
      if (r == 0) continue;
      for (int k = 0; k <= kmax; ++k) {
        if (scd(r) != k) sp[k] = 0;
        if (base.dim(r) != k) lp[k] = 0;
      }
    }
  }
  auto is_sc_pure = [&](PointSet x, int k) { return sc_pure.at(x)[k] != 0; };
  auto is_lat_pure = [&](PointSet x, int k) { return lat_pure.at(x)[k] != 0; };

  run.declare("TC0", "a - b is the least c with a <= b v c");
  run.declare("TC1", "a = (a ^ b) v (a - b)");
  run.declare("TC2", "(a1 v a2) - b = (a1 - b) v (a2 - b)");
  run.declare("TC3", "(a - b) - b = a - b");
  run.declare("TC4", "a - (b1 v b2) = (a - b1) - b2");
  run.declare("SS1", "a = C^0(a) v .. v C^d(a) and C^i(a) = 0 for i > d");
  run.declare("SS2", "C^k of a join of components of a is C^k(a) or 0");
  run.declare("SS3", "C^k(a v b) = C^k(a) v C^k(b) for k >= scdim a, scdim b");
  run.declare("SS4", "scdim(C^i(a) ^ C^j(a)) < min(i, j) for i != j");
  run.declare("SS5", "C^k(a) - b = C^k(a) - C^k(b) for k >= scdim b");
  run.declare("SS6", "b << a, a != 0 implies scdim b < scdim a");
  run.declare("SS7", "scdim a = max{k : C^k(a) != 0}");
  run.declare("SS8", "k >= scdim a and scdim(b ^ a) < k imply C^k(a) - b = C^k(a)");
  run.declare("SS9", "scdim(a v b) = max(scdim a, scdim b)");
  run.declare("SS10", "C^k(a) is the largest k-sc-pure element below a, k >= scdim a");
  run.declare("SS11", "dim a <= scdim a");
  run.declare("SS12", "a minus the components indexed by I is the join of the others");
  run.declare("SS13", "C^k(a) = a iff a is k-sc-pure");
  run.declare("SC0", "scdim a = dim a", false);
  run.declare("SC1", "a = C^0(a) v .. v C^d(a) and C^i(a) = 0 for i > d", false);
  run.declare("SC2", "C^i(a) is i-pure in the lattice sense", false);
  run.declare("SC3", "dim(C^i(a) ^ C^j(a)) < min(i, j) for i != j", false);
  run.declare("SC-equivalence", "SC1, SC2 and SC3 hold exactly when SC0 holds");
  run.declare("pure-decomposition", "a pure decomposition with fixed top degree is unique");
  run.declare("sc-pure-components", "sc-pure parts with small pairwise meets are the C^i components");

  unary([&](PointSet a) {
    // SS1 / SC1
    const bool ss1 = join_of(a, all_indices) == a && C(a, d + 1) == 0 && C(a, d + 2) == 0;
    run.expect("SS1", ss1, [&] { return run.show({{"a", a}}); });
    run.expect("SC1", ss1, [&] { return run.show({{"a", a}}); });
    // SS2
    for (unsigned I = 0; I <= all_indices; ++I) {
      const PointSet x = join_of(a, I);
      for (int k = 0; k <= kmax; ++k) {
        const bool in = k <= d && (I >> k & 1U);
        run.expect("SS2", C(x, k) == (in ? C(a, k) : 0),
                   [&] { return run.show({{"a", a}}, {{"I", static_cast<int>(I)}, {"k", k}}); });
      }
    }
    // SS4, SC3
    for (int i = 0; i <= kmax; ++i) {
      for (int j = 0; j <= kmax; ++j) {
        if (i == j) continue;
        const PointSet m = C(a, i) & C(a, j);
        run.expect("SS4", scd(m) < std::min(i, j), [&] { return run.show({{"a", a}}, {{"i", i}, {"j", j}}); });
        if (i <= d && j <= d)
          run.expect("SC3", base.dim(m) < std::min(i, j),
                     [&] { return run.show({{"a", a}}, {{"i", i}, {"j", j}}); });
      }
    }
    // SS7
    int top_k = minus_infinity;
    for (int k = 0; k <= kmax; ++k) {
      if (C(a, k) != 0) top_k = k;
    }
    run.expect("SS7", scd(a) == top_k && base.scdim(a) == scd(a),
               [&] { return run.show({{"a", a}}, {{"scdim", scd(a)}, {"max k", top_k}}); });
    // SS10
    for (int k = std::max(scd(a), 0); k <= kmax; ++k) {
      const PointSet c = C(a, k);
      bool ok = is_subset(c, a) && is_sc_pure(c, k);
      for (PointSet y : universe) {
        if (is_subset(y, a) && is_sc_pure(y, k) && !is_subset(y, c)) ok = false;
      }
      run.expect("SS10", ok, [&] { return run.show({{"a", a}}, {{"k", k}}); });
    }
    // SS11, SC0
    run.expect("SS11", base.dim(a) <= scd(a), [&] { return run.show({{"a", a}}); });
    run.expect("SC0", base.dim(a) == scd(a),
               [&] { return run.show({{"a", a}}, {{"scdim", scd(a)}, {"dim", base.dim(a)}}); });
    // SS12
    for (unsigned I = 0; I <= all_indices; ++I) {
      run.expect("SS12", diff(a, join_of(a, I)) == join_of(a, all_indices & ~I),
                 [&] { return run.show({{"a", a}}, {{"I", static_cast<int>(I)}}); });
    }
    // SS13, SC2
    for (int k = 0; k <= kmax; ++k) {
      run.expect("SS13", (C(a, k) == a) == is_sc_pure(a, k), [&] { return run.show({{"a", a}}, {{"k", k}}); });
      if (k <= d)
        run.expect("SC2", is_lat_pure(C(a, k), k), [&] { return run.show({{"a", a}}, {{"i", k}}); });
    }
    // Uniqueness of pure decompositions a = a_0 v .. v a_t.
    for (int t = 0; t <= d; ++t) {
      std::vector<std::vector<PointSet>> candidates(t + 1);
      for (int i = 0; i <= t; ++i) {
        for (PointSet y : universe) {
          if (is_subset(y, a) && is_lat_pure(y, i)) candidates[i].push_back(y);
        }
      }
      std::vector<PointSet> parts(t + 1);
      std::vector<std::vector<PointSet>> found;
      std::function<void(int, PointSet)> rec = [&](int i, PointSet acc) {
        if (i < 0) {
          if (acc == a) found.push_back(parts);
          return;
        }
        for (PointSet y : candidates[i]) {
          bool ok = true;
          for (int j = i + 1; j <= t && ok; ++j) {
            if (base.dim(y & parts[j]) >= std::min(i, j)) ok = false;
          }
          if (!ok) continue;
          parts[i] = y;
          rec(i - 1, acc | y);
        }
      };
      rec(t, 0);
      run.expect("pure-decomposition", found.size() <= 1,
                 [&] { return run.show({{"a", a}}, {{"top", t}, {"count", static_cast<int>(found.size())}}); });
      if (found.size() == 1) {
        const auto& dec = found.front();
        PointSet lower = 0;
        for (int i = 0; i < t; ++i) lower |= dec[i];
        bool largest = true;
        for (PointSet y : candidates[t]) {
          if (!is_subset(y, dec[t])) largest = false;
        }
        run.expect("pure-decomposition", largest && diff(a, dec[t]) == lower,
                   [&] { return run.show({{"a", a}, {"top part", dec[t]}}, {{"top", t}}); });
      }
    }
  });

  binary([&](PointSet a, PointSet b) {
    const PointSet ab = diff(a, b);
    bool least = is_subset(a, b | ab);
    for (PointSet c : universe) {
      if (is_subset(a, b | c) && !is_subset(ab, c)) least = false;
    }
    run.expect("TC0", least, [&] { return run.show({{"a", a}, {"b", b}}); });
    run.expect("TC1", ((a & b) | ab) == a, [&] { return run.show({{"a", a}, {"b", b}}); });
    run.expect("TC3", diff(ab, b) == ab, [&] { return run.show({{"a", a}, {"b", b}}); });
    for (int k = std::max({scd(a), scd(b), 0}); k <= kmax; ++k) {
      run.expect("SS3", C(a | b, k) == (C(a, k) | C(b, k)), [&] { return run.show({{"a", a}, {"b", b}}, {{"k", k}}); });
    }
    for (int k = std::max(scd(b), 0); k <= kmax; ++k) {
      run.expect("SS5", diff(C(a, k), b) == diff(C(a, k), C(b, k)),
                 [&] { return run.show({{"a", a}, {"b", b}}, {{"k", k}}); });
    }
    if (a != 0 && strongly_below(poset, b, a))
      run.expect("SS6", scd(b) < scd(a), [&] { return run.show({{"a", a}, {"b", b}}); });
    for (int k = std::max(scd(a), 0); k <= kmax; ++k) {
      if (scd(b & a) < k)
        run.expect("SS8", diff(C(a, k), b) == C(a, k), [&] { return run.show({{"a", a}, {"b", b}}, {{"k", k}}); });
    }
    run.expect("SS9", scd(a | b) == std::max(scd(a), scd(b)) && (!is_subset(b, a) || scd(b) <= scd(a)),
               [&] { return run.show({{"a", a}, {"b", b}}); });
  });

  ternary([&](PointSet a, PointSet b, PointSet c) {
    run.expect("TC2", diff(a | b, c) == (diff(a, c) | diff(b, c)),
               [&] { return run.show({{"a1", a}, {"a2", b}, {"b", c}}); });
    run.expect("TC4", diff(a, b | c) == diff(diff(a, b), c),
               [&] { return run.show({{"a", a}, {"b1", b}, {"b2", c}}); });
  });

  // sc-pure parts a_i with small pairwise meets are recovered by C^i.
  {
    std::vector<std::vector<PointSet>> pure(d + 1);
    for (int i = 0; i <= d; ++i) {
      for (PointSet y : universe) {
        if (C(y, i) == y) pure[i].push_back(y);
      }
    }
    std::vector<PointSet> parts(d + 1);
    std::size_t budget = report.sampled ? options.samples : static_cast<std::size_t>(-1);
    std::function<void(int)> rec = [&](int i) {
      if (budget == 0) return;
      if (i > d) {
        --budget;
        PointSet a = 0;
        for (PointSet y : parts) a |= y;
        for (int k = 0; k <= d; ++k) {
          run.expect("sc-pure-components", C(a, k) == parts[k],
                     [&] { return run.show({{"a", a}, {"part", parts[k]}}, {{"i", k}}); });
        }
        return;
      }
      for (PointSet y : pure[i]) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          if (scd(y & parts[j]) >= std::min(i, j)) ok = false;
        }
        if (!ok) continue;
        parts[i] = y;
        rec(i + 1);
      }
    };
    rec(0);
  }

  const bool sc_conditions = run.passed("SC1") && run.passed("SC2") && run.passed("SC3");
  run.expect("SC-equivalence", sc_conditions == run.passed("SC0"), [&] {
    return std::string("SC1-SC3 ") + (sc_conditions ? "hold" : "fail") + " but SC0 " +
           (run.passed("SC0") ? "holds" : "fails");
  });
  return report;
}

}  // namespace sclat
