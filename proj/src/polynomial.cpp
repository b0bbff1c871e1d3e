#include "locmult/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "locmult/errors.hpp"

namespace locmult {

namespace {

constexpr TermOrder kCanonical = TermOrder::global();

bool canonical_greater(const Term& a, const Term& b) {
  return kCanonical.greater(a.monomial, b.monomial);
}

// Merges two canonically sorted term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = kCanonical.compare(a[i].monomial, b[j].monomial);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(sign > 0 ? b[j] : Term{b[j].monomial, -b[j].coeff});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& value) {
  const std::size_t n = ring->size();
  if (value == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {Term{Monomial(n), value}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->size();
  return Polynomial(std::move(ring), {Term{Monomial::unit(n, index), 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& coeff) {
  if (m.size() != ring->size()) throw RingMismatch("monomial length differs from ring size");
  if (coeff == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {Term{m, coeff}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (auto& t : terms) {
    if (t.monomial.size() != ring->size()) throw RingMismatch("monomial length differs from ring size");
    acc[t.monomial] += t.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back(Term{m, c});
  }
  std::sort(out.begin(), out.end(), canonical_greater);
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::optional<unsigned> Polynomial::ord() const {
  if (terms_.empty()) return std::nullopt;
  // Canonical order is degree-descending, so the last term has minimal degree.
  return terms_.back().monomial.degree();
}

std::optional<unsigned> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().monomial.degree();
}

const Term& Polynomial::leading_term(TermOrder order) const {
  if (terms_.empty()) throw HypothesisError("leading term of the zero polynomial");
  if (!order.is_local()) return terms_.front();
  // Local leading term: minimal degree, ties broken by the same revlex rule,
  // i.e. the first term of the last degree block.
  const unsigned low = terms_.back().monomial.degree();
  std::size_t i = terms_.size() - 1;
  while (i > 0 && terms_[i - 1].monomial.degree() == low) --i;
  return terms_[i];
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge(terms_, other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.size() == 1) return b.times_monomial(a.terms_[0].monomial, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].monomial, b.terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      acc[s.monomial * t.monomial] += s.coeff * t.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back(Term{m, c});
  }
  std::sort(out.begin(), out.end(), canonical_greater);
  return Polynomial(a.ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= factor;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& coeff) const {
  if (coeff == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) out.push_back(Term{t.monomial * m, t.coeff * coeff});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += locmult::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += locmult::to_string(c) + "*" + mono;
    }
  }
  return out;
}

Polynomial initial_form(const Polynomial& p) {
  const auto low = p.ord();
  if (!low) throw HypothesisError("initial form of the zero polynomial");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() == *low) out.push_back(t);
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial specialize_parameter(const Polynomial& p, std::size_t param_index,
                                const Rational& value, const RingPtr& target) {
  const Ring& src = *p.ring();
  if (param_index >= src.size() || target->size() + 1 != src.size()) {
    throw RingMismatch("target ring must be the source ring without the parameter");
  }
  for (std::size_t i = 0, j = 0; i < src.size(); ++i) {
    if (i == param_index) continue;
    if (src.name(i) != target->name(j++)) {
      throw RingMismatch("target ring must be the source ring without the parameter");
    }
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0, j = 0; i < src.size(); ++i) {
      if (i == param_index) continue;
      m.set(j++, t.monomial[i]);
    }
    Rational factor = 1;
    for (unsigned k = 0; k < t.monomial[param_index]; ++k) factor *= value;
    out.push_back(Term{m, t.coeff * factor});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial embed(const Polynomial& p, const RingPtr& target) {
  const Ring& src = *p.ring();
  std::vector<std::size_t> position(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto idx = target->index_of(src.name(i));
    if (!idx) throw RingMismatch("variable '" + src.name(i) + "' missing from target ring");
    position[i] = *idx;
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < src.size(); ++i) m.set(position[i], t.monomial[i]);
    out.push_back(Term{m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

}  // namespace locmult
