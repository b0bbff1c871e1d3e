#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "locmult/polynomial.hpp"
#include "locmult/term_order.hpp"

namespace locmult {

/// Limits for a single standard-basis run. Exceeding either raises
/// ResourceCapError.
struct Caps {
  std::size_t max_pairs = 250'000;
  std::size_t max_reductions = 50'000'000;
};

struct SbOptions {
  Caps caps;
  /// Known D with m^D contained in the ideal (local order only). Lets the
  /// engine drop every term of degree >= D from the start.
  std::optional<unsigned> power_bound;
  /// Monomials known to lie in the ideal. They join the basis and every term
  /// they divide is dropped on sight.
  std::vector<Monomial> known_monomials;
  /// Local order without power_bound: try zero_dimensional_basis before Mora.
  bool degree_probe = true;
};

namespace detail {

/// Terms sorted descending in the computation order; front() is the leading term.
struct OrderedPoly {
  std::vector<Term> terms;
  unsigned ecart = 0;
};

}  // namespace detail

/// Standard basis (local order) or Groebner basis (global order).
/// `leading_monomials()` is the minimal generating set of the leading ideal.
class StandardBasis {
 public:
  StandardBasis(RingPtr ring, TermOrder order, std::vector<detail::OrderedPoly> elements,
                std::optional<unsigned> degree_bound);

  const RingPtr& ring() const { return ring_; }
  TermOrder order() const { return order_; }
  std::span<const Polynomial> elements() const { return elements_; }
  std::span<const Monomial> leading_monomials() const { return leading_; }
  /// Least D with m^D inside the ideal; local order and zero-dimensional only.
  std::optional<unsigned> degree_bound() const { return degree_bound_; }

  bool is_zero_ideal() const { return elements_.empty(); }

  const std::vector<detail::OrderedPoly>& ordered() const { return ordered_; }

 private:
  RingPtr ring_;
  TermOrder order_;
  std::vector<detail::OrderedPoly> ordered_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leading_;
  std::optional<unsigned> degree_bound_;
};

/// Local order: zero_dimensional_basis first, then Mora's tangent-cone
/// algorithm for ideals that are not m-primary. Global order: Buchberger.
/// Zero generators are ignored.
StandardBasis compute_standard_basis(const RingPtr& ring, std::span<const Polynomial> generators,
                                     TermOrder order, const SbOptions& options = {});

/// Probe degrees beyond this are not attempted.
inline constexpr unsigned kBezoutCeiling = 512;

/// m^delta^n lies in every m-primary ideal generated in degrees <= delta, so
/// this is a D with m^D in I whenever I is m-primary.
unsigned bezout_bound(const RingPtr& ring, std::span<const Polynomial> generators);

/// Local standard basis computed modulo growing powers of m. Returns nullopt
/// when the ideal is provably not m-primary (no covered degree up to the
/// Bezout bound). Throws ResourceCapError past kBezoutCeiling.
std::optional<StandardBasis> zero_dimensional_basis(const RingPtr& ring,
                                                    std::span<const Polynomial> generators,
                                                    const Caps& caps = {});

/// Local order: weak normal form (u*f - result lies in the ideal for a unit u),
/// fully tail-reduced when the ideal is zero-dimensional. Global order: full
/// remainder of division. Zero iff f is in the (localized) ideal.
Polynomial normal_form(const Polynomial& f, const StandardBasis& basis, const Caps& caps = {});

/// normal_form(f) == 0 without building the full remainder.
bool reduces_to_zero(const Polynomial& f, const StandardBasis& basis, const Caps& caps = {});

/// Monomials outside the leading ideal; nullopt when infinite.
std::optional<std::vector<Monomial>> staircase(const StandardBasis& basis);

}  // namespace locmult
