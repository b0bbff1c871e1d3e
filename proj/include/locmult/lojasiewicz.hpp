#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "locmult/ideal.hpp"
#include "locmult/multiplicity.hpp"
#include "locmult/rational.hpp"
#include "locmult/reduction.hpp"

namespace locmult {

enum class NuRoute {
  kAuto,      ///< monomial test for monomial ideals, Rees otherwise
  kRees,      ///< closure membership through certified multiplicities
  kMonomial,  ///< Newton-polyhedron test; monomial ideals only
};

/// nu(q) = least p with m^p inside closure(I^q), plus the evidence for it.
struct NuEntry {
  unsigned q = 0;
  unsigned nu = 0;
  NuRoute route = NuRoute::kMonomial;
  /// Rees route: one witness per degree-nu monomial, all members.
  std::vector<std::pair<Monomial, ClosureWitness>> at_nu;
  /// Rees route with nu > 1: a degree-(nu-1) monomial outside the closure.
  std::optional<std::pair<Monomial, ClosureWitness>> below_nu;
};

/// Throws ResourceCapError when m^pmax is not inside closure(I^q).
/// pmax defaults to q * colength(I).
unsigned nu(const Ideal& ideal, unsigned q, std::optional<unsigned> pmax = std::nullopt,
            const CertifyOptions& options = {}, NuRoute route = NuRoute::kAuto);

NuEntry nu_entry(const Ideal& ideal, unsigned q, std::optional<unsigned> pmax,
                 const CertifyOptions& options, NuRoute route = NuRoute::kAuto);

/// The Lojasiewicz exponent lies in (lower, upper].
struct LojaBracket {
  std::vector<NuEntry> table;
  Rational lower;
  Rational upper;
  /// Largest axis intercept of the Newton polyhedron, monomial ideals only.
  std::optional<Rational> exact;
  /// Rees route, non-monomial I with more than n generators: the parameter
  /// reduction whose powers stand in for those of I.
  std::optional<FoundReduction> reduction;
};

LojaBracket loja_bracket(const Ideal& ideal, unsigned qmax, const CertifyOptions& options = {},
                         NuRoute route = NuRoute::kAuto);

/// Re-checks every table entry and the bracket arithmetic.
bool verify_loja(const LojaBracket& bracket, const Ideal& ideal);

}  // namespace locmult
