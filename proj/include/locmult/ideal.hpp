#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locmult/kernels.hpp"
#include "locmult/polynomial.hpp"
#include "locmult/standard_basis.hpp"

namespace locmult {

/// Ideal of the local ring given by generators. Immutable; copies share a
/// write-once standard-basis cache per term order. Zero generators are
/// dropped, so an empty generator list is the zero ideal.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators,
        std::optional<unsigned> power_bound_hint = std::nullopt);

  const RingPtr& ring() const { return ring_; }
  std::span<const Polynomial> generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  /// Every generator is a single term.
  bool is_monomial() const;

  /// A D with m^D inside the ideal, when one is already known without
  /// further computation (construction hint or cached local basis).
  std::optional<unsigned> known_power_bound() const;

  const StandardBasis& standard_basis(TermOrder order = TermOrder::local(),
                                      const Caps& caps = {}) const;

  /// The local basis when the ideal is m-primary, nullptr otherwise. Never
  /// runs Mora's algorithm, so it stays cheap on ideals of positive dimension.
  const StandardBasis* zero_dimensional_basis(const Caps& caps = {}) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const StandardBasis> local;
    std::shared_ptr<const StandardBasis> global;
    std::optional<bool> m_primary;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::optional<unsigned> power_bound_hint_;
  std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& f, const Ideal& ideal);

/// Membership in the localized ring (unit multiples allowed).
bool is_member(const Polynomial& f, const Ideal& ideal);

/// dim O_n / I; nullopt encodes +infinity.
std::optional<std::size_t> colength(const Ideal& ideal);

bool is_m_primary(const Ideal& ideal);

/// Every generator of `small` lies in `big`.
bool contains(const Ideal& big, const Ideal& small, Execution exec = Execution::kParallel);

/// Mutual generator membership.
bool ideals_equal(const Ideal& a, const Ideal& b);

/// Pairwise products of generators; exact duplicates and monomial multiples
/// of other generators are dropped.
Ideal ideal_product(const Ideal& a, const Ideal& b);

Ideal ideal_power(const Ideal& ideal, unsigned k);

Ideal ideal_sum(const Ideal& ideal, std::span<const Polynomial> extra);

/// I^(r+1) inside J * I^r, checked on the generators of I^(r+1). Assumes J is
/// contained in I, so this is the equality I^(r+1) = J * I^r.
bool satisfies_reduction_equation(const Ideal& j, const Ideal& i, unsigned r,
                                  Execution exec = Execution::kParallel);

/// Least r in [1, rmax] with I^(r+1) = J * I^r, assuming J inside I.
std::optional<unsigned> reduction_exponent(const Ideal& j, const Ideal& i, unsigned rmax,
                                           Execution exec = Execution::kParallel);

}  // namespace locmult
