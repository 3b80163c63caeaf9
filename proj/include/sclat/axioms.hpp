#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sclat/scaled.hpp"

namespace sclat {

struct AxiomVerdict {
  std::string name;
  std::string statement;
  bool pass = true;
  // Axioms and derived rules must hold on every valid base; classifications
  // such as SC0 may legitimately fail.
  bool required = true;
  std::string witness;  // first counterexample found
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::size_t tuples = 0;  // tuples evaluated per arity when sampled

  const AxiomVerdict& at(std::string_view name) const;
  bool all_required_pass() const;
  bool scaled() const { return at("SC0").pass; }
};

struct AxiomOptions {
  int exhaustive_limit = 8;  // sampling above this many irreducibles
  bool force_sampling = false;
  std::uint64_t seed = 1;
  std::size_t samples = 4000;
};

AxiomReport check_axioms(const ScaledBase& base, const AxiomOptions& options = {});

// Lattice-dimension purity: every nonzero a - b has dimension k.
bool is_lattice_pure(const ScaledBase& base, PointSet a, int k, const std::vector<PointSet>& universe);

// scdim as the least k with a = join of C^0(a) .. C^k(a).
int scdim_by_definition(const ScaledBase& base, PointSet a);

}  // namespace sclat
