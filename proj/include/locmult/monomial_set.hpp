#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "locmult/monomial.hpp"

namespace locmult {

// Helpers for monomial ideals given by a list of generating exponents.

/// Minimal generating antichain, duplicates removed, sorted by MonomialLess.
std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens);

bool in_monomial_ideal(const Monomial& m, std::span<const Monomial> gens);

/// Exponent of the smallest pure power of each variable among `gens`;
/// nullopt when some variable has none (the staircase is infinite).
std::optional<std::vector<unsigned>> pure_power_box(std::span<const Monomial> gens, std::size_t nvars);

/// Calls `visit` on every monomial outside the ideal. Requires a finite
/// staircase; returns the number visited, or nullopt when infinite.
std::optional<std::size_t> for_each_standard_monomial(
    std::span<const Monomial> gens, std::size_t nvars,
    const std::function<void(const Monomial&)>& visit);

std::optional<std::size_t> count_standard_monomials(std::span<const Monomial> gens, std::size_t nvars);

/// Least D with every monomial of degree D in the ideal (0 for the unit
/// ideal); nullopt when the staircase is infinite.
std::optional<unsigned> power_containment_degree(std::span<const Monomial> gens, std::size_t nvars);

/// All monomials of total degree d in n variables, in descending revlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

}  // namespace locmult
