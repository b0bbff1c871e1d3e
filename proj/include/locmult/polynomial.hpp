#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "locmult/monomial.hpp"
#include "locmult/rational.hpp"
#include "locmult/ring.hpp"
#include "locmult/term_order.hpp"

namespace locmult {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coeff == b.coeff;
  }
};

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// descending global degrevlex order with no zero coefficients, so equality
/// is structural and independent of whichever order a computation uses.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& coeff = 1);
  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// A single term c*x^a (c != 0).
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;

  /// Order of vanishing at the origin; nullopt encodes +infinity (zero polynomial).
  std::optional<unsigned> ord() const;
  /// Largest total degree of a term; nullopt for zero.
  std::optional<unsigned> degree() const;

  /// Leading term with respect to `order`; requires !is_zero().
  const Term& leading_term(TermOrder order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& factor) const;
  Polynomial times_monomial(const Monomial& m, const Rational& coeff = 1) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical text, readable back by parse_polynomial.
  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

/// Sum of the terms of minimal total degree. Throws HypothesisError on zero.
Polynomial initial_form(const Polynomial& p);

/// Substitutes variable `param_index` of p's ring by `value` and rewrites the
/// result over `target`, whose variables must be p's variables with the
/// parameter removed (same relative order).
Polynomial specialize_parameter(const Polynomial& p, std::size_t param_index,
                                const Rational& value, const RingPtr& target);

/// Rewrites p (over `from`) into a ring that contains the same variables plus
/// possibly more; used to lift x-polynomials into the parameter ring.
Polynomial embed(const Polynomial& p, const RingPtr& target);

}  // namespace locmult
