#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "sclat/logic.hpp"

namespace sclat {

namespace {

template <class AtFn>
PointSet term_value(const ScaledBase& base, const std::vector<PointSet>& env, const Term& t) {
  switch (t.kind) {
    case Term::Kind::zero: return 0;
    case Term::Kind::one: return base.top();
    case Term::Kind::var:
      if (t.index < 0 || t.index >= static_cast<int>(env.size()))
        fail(ErrorKind::argument, "variable #" + std::to_string(t.index + 1) + " is unbound");
      return env[t.index];
    case Term::Kind::ck: return base.ck(term_value<AtFn>(base, env, t.args[0]), t.index);
    case Term::Kind::join: return term_value<AtFn>(base, env, t.args[0]) | term_value<AtFn>(base, env, t.args[1]);
    case Term::Kind::meet: return term_value<AtFn>(base, env, t.args[0]) & term_value<AtFn>(base, env, t.args[1]);
    case Term::Kind::diff:
      return base.diff(term_value<AtFn>(base, env, t.args[0]), term_value<AtFn>(base, env, t.args[1]));
  }
  fail(ErrorKind::internal, "unknown term kind");
}

template <class AtFn>
bool holds(const ScaledBase& base, const std::vector<PointSet>& env, const Formula& f, const AtFn& at) {
  auto value = [&](int i) { return term_value<AtFn>(base, env, f.terms[i]); };
  switch (f.kind) {
    case Formula::Kind::eq: return value(0) == value(1);
    case Formula::Kind::leq: return is_subset(value(0), value(1));
    case Formula::Kind::neq: return value(0) != value(1);
    case Formula::Kind::at: return at(f.index, value(0));
    case Formula::Kind::negation: return !holds(base, env, f.args[0], at);
    case Formula::Kind::conjunction: return holds(base, env, f.args[0], at) && holds(base, env, f.args[1], at);
    case Formula::Kind::disjunction: return holds(base, env, f.args[0], at) || holds(base, env, f.args[1], at);
  }
  fail(ErrorKind::internal, "unknown formula kind");
}

struct NoAt {
  bool operator()(int, PointSet) const { fail(ErrorKind::semantic, "At predicates need atom counts"); }
};

// Calls visit on every assignment of n values from elems until it returns true.
template <class F>
bool for_each_assignment(const std::vector<PointSet>& elems, int n, F&& visit) {
  std::vector<std::size_t> pos(n, 0);
  std::vector<PointSet> env(n, elems.front());
  while (true) {
    if (visit(env)) return true;
    int i = n - 1;
    while (i >= 0 && ++pos[i] == elems.size()) {
      pos[i] = 0;
      env[i] = elems[0];
      --i;
    }
    if (i < 0) return false;
    env[i] = elems[pos[i]];
  }
}

template <class Model>
bool sentence_holds(const Model& model, const ScaledBase& base, const Sentence& s, const std::vector<PointSet>& given) {
  if (s.quantifier == Quantifier::none) return eval(model, given, s.matrix);
  const int n = static_cast<int>(s.variables.size());
  const bool found = for_each_assignment(base.elements(), n, [&](const std::vector<PointSet>& env) {
    return eval(model, env, s.matrix) == (s.quantifier == Quantifier::exists);
  });
  return s.quantifier == Quantifier::exists ? found : !found;
}

// Bases one point larger: a new maximal point over each downset, labeled
// above everything in it.
std::vector<ScaledBase> grow(const std::vector<ScaledBase>& level, int d, std::set<std::string>& seen) {
  std::vector<std::pair<std::string, ScaledBase>> out;
  for (const auto& base : level) {
    const Poset& p = base.poset();
    const int n = p.size();
    for (PointSet below : p.downsets()) {
      int lowest = 0;
      for_each_point(below, [&](int i) { lowest = std::max(lowest, base.label(i) + 1); });
      for (int label = lowest; label <= d; ++label) {
        std::vector<std::string> names = p.names();
        names.push_back("p" + std::to_string(n));
        std::vector<std::pair<int, int>> less;
        for (int j = 0; j < n; ++j)
          for_each_point(p.strictly_below(j), [&](int i) { less.emplace_back(i, j); });
        for_each_point(below, [&](int i) { less.emplace_back(i, n); });
        std::vector<int> labels = base.labels();
        labels.push_back(label);
        ScaledBase grown(Poset::from_relation(std::move(names), less), d, std::move(labels));
        std::string form = canonical_form(grown);
        if (seen.insert(form).second) out.emplace_back(std::move(form), std::move(grown));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ScaledBase> bases;
  for (auto& [form, b] : out) bases.push_back(std::move(b));
  return bases;
}

ScaledBase trivial(int d) { return ScaledBase(Poset(), d, {}); }

std::vector<AscBase> weightings(const ScaledBase& base, const std::vector<int>& values) {
  std::vector<int> slots;
  for (int i = 0; i < base.size(); ++i)
    if (base.label(i) == 0) slots.push_back(i);  // label 0 points are minimal
  std::vector<std::pair<std::string, AscBase>> out;
  std::set<std::string> seen;
  std::vector<std::size_t> pos(slots.size(), 0);
  while (true) {
    std::vector<int> weights(base.size(), 0);
    std::vector<std::uint64_t> colors(base.size(), 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      weights[slots[s]] = values[pos[s]];
      colors[slots[s]] = static_cast<std::uint64_t>(values[pos[s]]);
    }
    std::string form = canonical_form(base, colors);
    if (seen.insert(form).second) out.emplace_back(std::move(form), AscBase(base, weights));
    std::size_t i = 0;
    while (i < slots.size() && ++pos[i] == values.size()) pos[i++] = 0;
    if (i == slots.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AscBase> bases;
  for (auto& [form, b] : out) bases.push_back(std::move(b));
  return bases;
}

std::vector<int> weight_values(std::vector<int> k_cap) {
  k_cap.push_back(0);
  std::sort(k_cap.begin(), k_cap.end());
  k_cap.erase(std::unique(k_cap.begin(), k_cap.end()), k_cap.end());
  if (k_cap.front() < 0) fail(ErrorKind::argument, "atom counts must be non-negative");
  return k_cap;
}

std::string prime_form(const ScaledBase& base) {
  const SubLattice prime = prime_substructure(base);
  return std::to_string(prime.size()) + ":" + canonical_form(prime.induced);
}

// The shared search: bases level by level, every assignment, first hit wins.
struct Search {
  const Formula& target;
  int n;
  int d;
  int bound;
  std::uint64_t budget;
  bool asc;
  std::vector<int> values;
  std::function<bool(const ScaledBase&)> keep_base;
  std::function<bool(const AscBase&)> keep_asc;

  DecisionOutcome run() {
    DecisionOutcome out;
    out.bound_used = bound;
    std::set<std::string> seen{canonical_form(trivial(d))};
    std::vector<ScaledBase> level{trivial(d)};
    for (int size = 0; size <= bound && !level.empty(); ++size) {
      for (const auto& base : level) {
        if (keep_base && !keep_base(base)) continue;
        if (!asc) {
          if (try_model(base, base, std::nullopt, out)) return out;
        } else {
          for (const auto& weighted : weightings(base, values)) {
            if (keep_asc && !keep_asc(weighted)) continue;
            if (try_model(weighted, base, weighted, out)) return out;
          }
        }
        if (out.interrupted) return out;
      }
      if (size < bound) level = grow(level, d, seen);
    }
    return out;
  }

  template <class Model>
  bool try_model(const Model& model, const ScaledBase& base, const std::optional<AscBase>& weighted, DecisionOutcome& out) {
    ++out.bases_searched;
    std::vector<PointSet> elems = base.elements();
    std::sort(elems.begin(), elems.end(), [](PointSet a, PointSet b) { return element_less(a, b); });
    std::vector<PointSet> hit;
    const bool found = for_each_assignment(elems, n, [&](const std::vector<PointSet>& env) {
      if (out.evaluations >= budget) {
        out.interrupted = true;
        return true;
      }
      ++out.evaluations;
      if (!eval(model, env, target)) return false;
      hit = env;
      return true;
    });
    if (!found || out.interrupted) return false;
    out.witness = Witness{base, weighted, {}, hit};
    return true;
  }
};

int mu_as_int(int n, int d) {
  const mpz_class m = mu_capped(n, d, mpz_class(1) << 30);
  return static_cast<int>(m.get_si());
}

int choose_bound(int n, int d, const SearchOptions& options) {
  if (options.bound) {
    if (*options.bound < 0) fail(ErrorKind::argument, "the bound must be non-negative");
    return *options.bound;
  }
  if (options.ceiling < 0) fail(ErrorKind::argument, "the ceiling must be non-negative");
  return std::min(mu_as_int(n, d), options.ceiling);
}

void check_witness(const Formula& target, const Witness& w, int n, int d) {
  const bool ok = w.asc ? eval(*w.asc, w.assignment, target) : eval(w.base, w.assignment, target);
  require_invariant(ok, "witness re-evaluates to true");
  const int generated = generate(w.base, w.assignment).size();
  require_invariant(generated <= mu_as_int(n, d), "generated substructure within the irreducible bound");
}

Formula negate(const Formula& f) {
  Formula out;
  out.kind = Formula::Kind::negation;
  out.args.push_back(f);
  return out;
}

std::vector<int> asc_cap(const Sentence& phi, const std::vector<int>& weights, const SearchOptions& options) {
  if (!options.k_cap.empty()) return options.k_cap;
  int top = phi.max_at_index();
  for (int w : weights) top = std::max(top, w);
  std::vector<int> cap;
  for (int k = 1; k <= top + 1; ++k) cap.push_back(k);
  return cap;
}

DecisionOutcome decide_impl(const ScaledBase& prime_base, const std::optional<AscBase>& prime_asc, const Sentence& phi,
                            int d, const SearchOptions& options) {
  if (d < 0) fail(ErrorKind::argument, "d must be non-negative");
  for (int l : prime_base.labels())
    if (l > d) fail(ErrorKind::argument, "the prime has a point labeled " + std::to_string(l) + " above d");
  const SubLattice generated = prime_substructure(prime_base);
  if (generated.elements.size() != prime_base.elements().size()) {
    std::string extra;
    for (PointSet x : prime_base.elements())
      if (!generated.contains(x)) extra += (extra.empty() ? "" : ", ") + prime_base.describe(x);
    fail(ErrorKind::refusal, "the input is not generated by the constants; not generated: " + extra);
  }
  if (phi.quantifier == Quantifier::none && !phi.variables.empty())
    fail(ErrorKind::argument, "decide needs a sentence; bind the variables with E or A");
  if (prime_asc && !is_standard(*prime_asc))
    fail(ErrorKind::refusal, "the prime is not standard: some scdim 0 element has no finite atom count");
  if (!prime_asc && phi.uses_at()) fail(ErrorKind::semantic, "At predicates need an ASC prime");

  const bool universal = phi.quantifier == Quantifier::forall;
  const Formula target = universal ? negate(phi.matrix) : phi.matrix;
  const int n = static_cast<int>(phi.variables.size());
  Search search{target, n, d, choose_bound(n, d, options), options.budget, prime_asc.has_value(), {}, {}, {}};
  if (prime_asc) {
    search.values = weight_values(asc_cap(phi, prime_asc->weights(), options));
    const std::string invariant = completion_invariant(*prime_asc);
    search.keep_asc = [invariant](const AscBase& b) { return completion_invariant(b) == invariant; };
  } else {
    const std::string form = prime_form(prime_base);
    search.keep_base = [form](const ScaledBase& b) { return prime_form(b) == form; };
  }
  DecisionOutcome out = search.run();
  const bool exhaustive_bound = search.bound >= mu_as_int(n, d) && !out.interrupted;
  if (out.witness) {
    check_witness(target, *out.witness, n, d);
    out.witness->variables = phi.variables;
    out.verdict = universal ? Verdict::false_ : Verdict::true_;
    out.exhaustive = true;
  } else {
    out.verdict = universal ? Verdict::true_ : Verdict::false_;
    out.exhaustive = exhaustive_bound && !prime_asc;
    if (prime_asc) out.note = "atom counts were capped, so the verdict covers the cap only";
  }
  if (!out.exhaustive && out.interrupted) out.note = "the work budget ran out";
  return out;
}

}  // namespace

PointSet eval_term(const ScaledBase& base, const std::vector<PointSet>& assignment, const Term& t) {
  return term_value<NoAt>(base, assignment, t);
}

bool eval(const ScaledBase& base, const std::vector<PointSet>& assignment, const Formula& f) {
  return holds(base, assignment, f, NoAt{});
}

bool eval(const AscBase& base, const std::vector<PointSet>& assignment, const Formula& f) {
  return holds(base.base(), assignment, f, [&](int k, PointSet a) { return base.at(k, a); });
}

bool eval_sentence(const ScaledBase& base, const Sentence& s, const std::vector<PointSet>& assignment) {
  return sentence_holds(base, base, s, assignment);
}

bool eval_sentence(const AscBase& base, const Sentence& s, const std::vector<PointSet>& assignment) {
  return sentence_holds(base, base.base(), s, assignment);
}

mpz_class mu(const mpz_class& n, int d) {
  if (d < 0) return 0;
  if (n < 0) fail(ErrorKind::argument, "mu needs n >= 0");
  if (n > (1 << 24)) fail(ErrorKind::argument, "mu: 2^n is too large to build");
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, n.get_ui());
  return power + mu(2 * power, d - 1);
}

mpz_class mu_capped(const mpz_class& n, int d, const mpz_class& cap) {
  if (d < 0 || cap <= 0) return 0;
  if (n < 0) fail(ErrorKind::argument, "mu needs n >= 0");
  // 2^n >= cap as soon as n reaches the bit length of cap.
  if (n >= static_cast<long>(mpz_sizeinbase(cap.get_mpz_t(), 2))) return cap;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, n.get_ui());
  if (power >= cap) return cap;
  return power + mu_capped(2 * power, d - 1, cap - power);
}

std::vector<ScaledBase> enumerate_bases(int d, int max_irr) {
  if (d < 0 || max_irr < 0) fail(ErrorKind::argument, "d and max_irr must be non-negative");
  if (max_irr > max_points) fail(ErrorKind::argument, "at most 64 points are supported");
  std::set<std::string> seen{canonical_form(trivial(d))};
  std::vector<ScaledBase> level{trivial(d)};
  std::vector<ScaledBase> out = level;
  for (int size = 1; size <= max_irr && !level.empty(); ++size) {
    level = grow(level, d, seen);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<AscBase> enumerate_asc_bases(int d, int max_irr, const std::vector<int>& k_cap) {
  const auto values = weight_values(k_cap);
  std::vector<AscBase> out;
  for (const auto& base : enumerate_bases(d, max_irr)) {
    auto more = weightings(base, values);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::sat: return "SAT";
    case Verdict::unsat: return "UNSAT";
    case Verdict::true_: return "TRUE";
    case Verdict::false_: return "FALSE";
  }
  return "?";
}

DecisionOutcome sat_qf(const Sentence& phi, int d, const SearchOptions& options) {
  if (phi.quantifier != Quantifier::none) fail(ErrorKind::argument, "sat needs a quantifier-free formula");
  if (d < 0) fail(ErrorKind::argument, "d must be non-negative");
  const int n = static_cast<int>(phi.variables.size());
  const bool asc = phi.uses_at();
  Search search{phi.matrix, n, d, choose_bound(n, d, options), options.budget, asc, {}, {}, {}};
  if (asc) search.values = weight_values(asc_cap(phi, {}, options));
  DecisionOutcome out = search.run();
  if (out.witness) {
    check_witness(phi.matrix, *out.witness, n, d);
    out.witness->variables = phi.variables;
    out.verdict = Verdict::sat;
    out.exhaustive = true;
  } else {
    out.verdict = Verdict::unsat;
    out.exhaustive = !asc && !out.interrupted && search.bound >= mu_as_int(n, d);
    if (asc) out.note = "atom counts were capped, so the verdict covers the cap only";
    if (out.interrupted) out.note = "the work budget ran out";
  }
  return out;
}

DecisionOutcome decide(const ScaledBase& prime, const Sentence& phi, int d, const SearchOptions& options) {
  return decide_impl(prime, std::nullopt, phi, d, options);
}

DecisionOutcome decide(const AscBase& prime, const Sentence& phi, int d, const SearchOptions& options) {
  return decide_impl(prime.base(), prime, phi, d, options);
}

Formula prime_diagram(const ScaledBase& prime) {
  const SubLattice generated = prime_substructure(prime);
  if (generated.elements.size() != prime.elements().size())
    fail(ErrorKind::refusal, "the diagram needs a base generated by the constants");
  auto closed = [](Term::Kind k, std::vector<Term> args = {}, int index = 0) { return Term{k, index, std::move(args)}; };
  std::map<PointSet, Term> name;
  name.emplace(PointSet{0}, closed(Term::Kind::zero));
  name.emplace(prime.top(), closed(Term::Kind::one));
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = name;
    auto add = [&](PointSet x, Term t) { grew = name.emplace(x, std::move(t)).second || grew; };
    for (const auto& [a, ta] : snapshot) {
      for (int k = 0; k <= prime.d(); ++k) add(prime.ck(a, k), closed(Term::Kind::ck, {ta}, k));
      for (const auto& [b, tb] : snapshot) {
        add(a | b, closed(Term::Kind::join, {ta, tb}));
        add(a & b, closed(Term::Kind::meet, {ta, tb}));
        add(prime.diff(a, b), closed(Term::Kind::diff, {ta, tb}));
      }
    }
  }
  std::vector<Formula> facts;
  auto fact = [&](Formula::Kind k, Term l, Term r) { facts.push_back(Formula{k, 0, {std::move(l), std::move(r)}, {}}); };
  for (auto a = name.begin(); a != name.end(); ++a) {
    for (auto b = std::next(a); b != name.end(); ++b) fact(Formula::Kind::neq, a->second, b->second);
    for (int k = 0; k <= prime.d() + 1; ++k)
      fact(Formula::Kind::eq, closed(Term::Kind::ck, {a->second}, k), name.at(prime.ck(a->first, k)));
    for (const auto& [b, tb] : name) {
      fact(Formula::Kind::eq, closed(Term::Kind::join, {a->second, tb}), name.at(a->first | b));
      fact(Formula::Kind::eq, closed(Term::Kind::meet, {a->second, tb}), name.at(a->first & b));
      fact(Formula::Kind::eq, closed(Term::Kind::diff, {a->second, tb}), name.at(prime.diff(a->first, b)));
    }
  }
  Formula all = facts.front();
  for (std::size_t i = 1; i < facts.size(); ++i) all = Formula{Formula::Kind::conjunction, 0, {}, {all, facts[i]}};
  return all;
}

bool theory_equal(const ScaledBase& a, const ScaledBase& b) { return prime_form(a) == prime_form(b); }

bool theory_equal(const AscBase& a, const AscBase& b) { return completion_invariant(a) == completion_invariant(b); }

}  // namespace sclat
