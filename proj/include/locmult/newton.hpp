#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "locmult/ideal.hpp"
#include "locmult/monomial.hpp"
#include "locmult/rational.hpp"
#include "locmult/ring.hpp"

namespace locmult {

/// Default cap on the number of variables for the brute-force hull.
inline constexpr std::size_t kNewtonMaxVariables = 4;

/// Monomial ideal by its minimal generating exponents.
class MonomialIdeal {
 public:
  /// Minimizes `generators`; all must have ring->size() entries.
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);
  /// Throws HypothesisError when some generator is not a single term.
  static MonomialIdeal from_ideal(const Ideal& ideal);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  std::span<const Monomial> generators() const { return generators_; }
  /// Every axis carries a pure power and 1 is not a generator.
  bool is_m_primary() const;
  bool contains(const Monomial& m) const;

  Ideal to_ideal() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.generators_ == b.generators_;
  }

 private:
  RingPtr ring_;
  std::vector<Monomial> generators_;
};

/// <normal, a> >= rhs, normal a primitive nonnegative integer vector.
struct Facet {
  std::vector<Rational> normal;
  Rational rhs;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// conv(generator exponents) + nonnegative orthant. `facets` omits the
/// orthant constraints a_i >= 0, which always apply.
struct NewtonPolyhedron {
  std::size_t nvars = 0;
  std::vector<Facet> facets;
  std::vector<Monomial> vertices;

  bool contains(std::span<const Rational> point) const;
  bool contains(const Monomial& m) const;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// Monomials with exponent in the Newton polyhedron, minimized.
MonomialIdeal monomial_closure(const MonomialIdeal& ideal);

/// n! times the volume of the orthant minus the polyhedron.
std::size_t monomial_multiplicity(const MonomialIdeal& ideal);

/// Largest axis intercept of the polyhedron.
Rational monomial_loja(const MonomialIdeal& ideal);

/// p * e_i lies in q * polyhedron for every axis i.
bool monomial_power_test(const MonomialIdeal& ideal, unsigned p, unsigned q);

}  // namespace locmult
