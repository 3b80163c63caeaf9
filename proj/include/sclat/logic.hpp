#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sclat/asc.hpp"
#include "sclat/scaled.hpp"

namespace sclat {

struct Term {
  enum class Kind { zero, one, var, join, meet, diff, ck };
  Kind kind = Kind::zero;
  int index = 0;  // variable number or C index
  std::vector<Term> args;

  bool operator==(const Term&) const = default;
};

struct Formula {
  enum class Kind { eq, leq, neq, at, negation, conjunction, disjunction };
  Kind kind = Kind::eq;
  int index = 0;  // At index
  std::vector<Term> terms;
  std::vector<Formula> args;

  bool operator==(const Formula&) const = default;
};

enum class Quantifier { none, exists, forall };

// A formula together with its variables. Quantified sentences bind every
// variable in one leading block.
struct Sentence {
  Quantifier quantifier = Quantifier::none;
  std::vector<std::string> variables;
  Formula matrix;

  bool operator==(const Sentence&) const = default;
  bool uses_at() const;
  int max_at_index() const;
};

Sentence parse_formula(std::string_view text);
std::string render(const Sentence& s);

PointSet eval_term(const ScaledBase& base, const std::vector<PointSet>& assignment, const Term& t);
// At_k needs atom counts: the ScaledBase overload rejects it.
bool eval(const ScaledBase& base, const std::vector<PointSet>& assignment, const Formula& f);
bool eval(const AscBase& base, const std::vector<PointSet>& assignment, const Formula& f);
// Quantifiers range over all elements of the finite base.
bool eval_sentence(const ScaledBase& base, const Sentence& s, const std::vector<PointSet>& assignment = {});
bool eval_sentence(const AscBase& base, const Sentence& s, const std::vector<PointSet>& assignment = {});

// The bound on irreducibles of an n-generated d-subscaled lattice.
mpz_class mu(const mpz_class& n, int d);
// min(mu(n, d), cap) without building huge powers.
mpz_class mu_capped(const mpz_class& n, int d, const mpz_class& cap);

// Bases with at most max_irr points up to isomorphism, by size then
// canonical form. In ASC mode every weighting of the label-0 points with
// values in k_cap plus 0 is listed, again up to isomorphism.
std::vector<ScaledBase> enumerate_bases(int d, int max_irr);
std::vector<AscBase> enumerate_asc_bases(int d, int max_irr, const std::vector<int>& k_cap);

enum class Verdict { sat, unsat, true_, false_ };
std::string_view to_string(Verdict v);

struct Witness {
  ScaledBase base;
  std::optional<AscBase> asc;
  std::vector<std::string> variables;
  std::vector<PointSet> assignment;
};

struct DecisionOutcome {
  Verdict verdict = Verdict::unsat;
  std::optional<Witness> witness;
  int bound_used = 0;
  bool exhaustive = false;
  bool interrupted = false;  // the work budget ran out before the bound
  std::uint64_t bases_searched = 0;
  std::uint64_t evaluations = 0;
  std::string note;
};

struct SearchOptions {
  std::optional<int> bound;          // irreducibles; defaults to min(mu, ceiling)
  int ceiling = 6;
  std::uint64_t budget = 100'000'000;  // formula evaluations
  std::vector<int> k_cap;            // ASC mode only; empty means the default cap
};

DecisionOutcome sat_qf(const Sentence& phi, int d, const SearchOptions& options = {});

// prime must be generated by the constants. Existential sentences are decided
// directly, universal ones through their negation.
DecisionOutcome decide(const ScaledBase& prime, const Sentence& phi, int d, const SearchOptions& options = {});
DecisionOutcome decide(const AscBase& prime, const Sentence& phi, int d, const SearchOptions& options = {});

// Conjunction of the atomic facts of a constant-generated base, written
// with closed terms.
Formula prime_diagram(const ScaledBase& prime);

bool theory_equal(const ScaledBase& a, const ScaledBase& b);
bool theory_equal(const AscBase& a, const AscBase& b);

}  // namespace sclat
