#include "locmult/ideal.hpp"

#include <algorithm>

#include "locmult/errors.hpp"
#include "locmult/monomial_set.hpp"

namespace locmult {

namespace {

StandardBasis monomial_basis(const RingPtr& ring, std::span<const Polynomial> gens, TermOrder order) {
  std::vector<Monomial> ms;
  ms.reserve(gens.size());
  for (const auto& g : gens) ms.push_back(g.terms().front().monomial);
  ms = minimize_monomials(std::move(ms));
  std::vector<detail::OrderedPoly> elements;
  elements.reserve(ms.size());
  for (const auto& m : ms) elements.push_back(detail::OrderedPoly{{Term{m, 1}}, 0});
  std::optional<unsigned> bound;
  if (order.is_local()) bound = power_containment_degree(ms, ring->size());
  return StandardBasis(ring, order, std::move(elements), bound);
}

// g is c * mu * h for some monomial mu and scalar c.
bool is_monomial_multiple(const Polynomial& g, const Polynomial& h) {
  if (g.size() != h.size()) return false;
  const Term& gl = g.terms().front();
  const Term& hl = h.terms().front();
  if (!hl.monomial.divides(gl.monomial)) return false;
  const Monomial mu = gl.monomial / hl.monomial;
  const Rational c = gl.coeff / hl.coeff;
  // Multiplication by a monomial preserves the canonical order term by term.
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Term& a = g.terms()[i];
    const Term& b = h.terms()[i];
    if (!(a.monomial == b.monomial * mu) || a.coeff != c * b.coeff) return false;
  }
  return true;
}

std::vector<Polynomial> prune_generators(std::vector<Polynomial> gens) {
  // Smaller leading degree first so a divisor precedes its multiples.
  const TermOrder local = TermOrder::local();
  std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    const auto& la = a.leading_term(local).monomial;
    const auto& lb = b.leading_term(local).monomial;
    if (la.degree() != lb.degree()) return la.degree() < lb.degree();
    return a.size() < b.size();
  });
  std::vector<Polynomial> kept;
  for (auto& g : gens) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Polynomial& h) {
      return is_monomial_multiple(g, h);
    });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators, std::optional<unsigned> power_bound_hint)
    : ring_(std::move(ring)), power_bound_hint_(power_bound_hint), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

bool Ideal::is_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

std::optional<unsigned> Ideal::known_power_bound() const {
  std::optional<unsigned> cached;
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->local) cached = cache_->local->degree_bound();
  }
  if (cached && power_bound_hint_) return std::min(*cached, *power_bound_hint_);
  return cached ? cached : power_bound_hint_;
}

const StandardBasis& Ideal::standard_basis(TermOrder order, const Caps& caps) const {
  auto& slot = order.is_local() ? cache_->local : cache_->global;
  {
    std::lock_guard lock(cache_->mutex);
    if (slot) return *slot;
  }
  // Computed outside the lock; concurrent callers may both compute, and the
  // first stored result wins (results are deterministic).
  std::shared_ptr<const StandardBasis> computed;
  if (is_monomial() && !generators_.empty()) {
    computed = std::make_shared<const StandardBasis>(monomial_basis(ring_, generators_, order));
  } else if (order.is_local() && !power_bound_hint_ && !generators_.empty() &&
             zero_dimensional_basis(caps) != nullptr) {
    std::lock_guard lock(cache_->mutex);
    return *slot;
  } else {
    SbOptions options;
    options.caps = caps;
    // In local order the degree probe has already failed or does not apply.
    options.degree_probe = false;
    if (order.is_local()) options.power_bound = power_bound_hint_;
    computed = std::make_shared<const StandardBasis>(
        compute_standard_basis(ring_, generators_, order, options));
  }
  std::lock_guard lock(cache_->mutex);
  if (!slot) slot = std::move(computed);
  return *slot;
}

const StandardBasis* Ideal::zero_dimensional_basis(const Caps& caps) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->local) {
      return cache_->local->degree_bound() ? cache_->local.get() : nullptr;
    }
    if (cache_->m_primary && !*cache_->m_primary) return nullptr;
  }
  if (generators_.empty()) return nullptr;
  if (is_monomial() || power_bound_hint_) {
    const StandardBasis& sb = standard_basis(TermOrder::local(), caps);
    return sb.degree_bound() ? &sb : nullptr;
  }
  auto probed = locmult::zero_dimensional_basis(ring_, generators_, caps);
  std::lock_guard lock(cache_->mutex);
  cache_->m_primary = probed.has_value();
  if (!probed) return nullptr;
  if (!cache_->local) cache_->local = std::make_shared<const StandardBasis>(std::move(*probed));
  return cache_->local.get();
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ")";
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) {
  return normal_form(f, ideal.standard_basis());
}

bool is_member(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  const auto gens = ideal.generators();
  if (std::find(gens.begin(), gens.end(), f) != gens.end()) return true;
  if (ideal.is_monomial()) {
    const auto& lms = ideal.standard_basis().leading_monomials();
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const Term& t) { return in_monomial_ideal(t.monomial, lms); });
  }
  return reduces_to_zero(f, ideal.standard_basis());
}

std::optional<std::size_t> colength(const Ideal& ideal) {
  const StandardBasis* sb = ideal.zero_dimensional_basis();
  if (sb == nullptr) return std::nullopt;
  return count_standard_monomials(sb->leading_monomials(), ideal.ring()->size());
}

bool is_m_primary(const Ideal& ideal) {
  // The unit ideal has colength 0 and radical (1), not m.
  const StandardBasis* sb = ideal.zero_dimensional_basis();
  return sb != nullptr && sb->degree_bound() != 0U;
}

bool contains(const Ideal& big, const Ideal& small, Execution exec) {
  require_same_ring(big.ring(), small.ring());
  if (small.is_zero()) return true;
  if (big.is_zero()) return false;
  big.standard_basis();  // build once before fanning out
  const auto gens = small.generators();
  return all_of_indices(gens.size(), [&](std::size_t i) { return is_member(gens[i], big); }, exec);
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
  return contains(a, b) && contains(b, a);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::optional<unsigned> hint;
  const auto ba = a.known_power_bound();
  const auto bb = b.known_power_bound();
  if (ba && bb) hint = *ba + *bb;
  std::vector<Polynomial> products;
  products.reserve(a.size() * b.size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      Polynomial p = f * g;
      if (std::find(products.begin(), products.end(), p) == products.end()) {
        products.push_back(std::move(p));
      }
    }
  }
  return Ideal(a.ring(), prune_generators(std::move(products)), hint);
}

Ideal ideal_power(const Ideal& ideal, unsigned k) {
  if (k == 0) throw HypothesisError("ideal_power needs k >= 1");
  Ideal result = ideal;
  for (unsigned i = 1; i < k; ++i) result = ideal_product(result, ideal);
  return result;
}

Ideal ideal_sum(const Ideal& ideal, std::span<const Polynomial> extra) {
  std::vector<Polynomial> gens(ideal.generators().begin(), ideal.generators().end());
  for (const auto& p : extra) {
    require_same_ring(ideal.ring(), p.ring());
    if (!p.is_zero() && std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(p);
  }
  return Ideal(ideal.ring(), std::move(gens), ideal.known_power_bound());
}

namespace {

// next = power * I inside J * power. With m^D inside next, Nakayama lets the
// check run modulo m^(D+1) (and modulo m * next when that is monomial),
// both inside m * next: next inside J*power + m*next forces next = J*power.
bool reduction_step_holds(const Ideal& j, const Ideal& power, const Ideal& next, Execution exec) {
  if (next.is_monomial()) next.standard_basis();
  const auto bound = next.known_power_bound();
  const Ideal product = ideal_product(j, power);
  if (!bound) return contains(product, next, exec);
  SbOptions options;
  options.power_bound = *bound + 1;
  if (next.is_monomial()) {
    // m * next itself is a monomial ideal, a much smaller modulus.
    for (const auto& g : next.generators()) {
      for (std::size_t v = 0; v < g.ring()->size(); ++v) {
        options.known_monomials.push_back(g.terms().front().monomial * Monomial::unit(g.ring()->size(), v));
      }
    }
  }
  const StandardBasis sb =
      compute_standard_basis(product.ring(), product.generators(), TermOrder::local(), options);
  const auto gens = next.generators();
  return all_of_indices(gens.size(), [&](std::size_t k) { return reduces_to_zero(gens[k], sb); }, exec);
}

}  // namespace

bool satisfies_reduction_equation(const Ideal& j, const Ideal& i, unsigned r, Execution exec) {
  require_same_ring(j.ring(), i.ring());
  if (r == 0) throw HypothesisError("reduction exponent must be positive");
  const Ideal power = ideal_power(i, r);
  return reduction_step_holds(j, power, ideal_product(power, i), exec);
}

std::optional<unsigned> reduction_exponent(const Ideal& j, const Ideal& i, unsigned rmax,
                                           Execution exec) {
  require_same_ring(j.ring(), i.ring());
  Ideal power = i;
  for (unsigned r = 1; r <= rmax; ++r) {
    Ideal next = ideal_product(power, i);
    if (reduction_step_holds(j, power, next, exec)) return r;
    power = std::move(next);
  }
  return std::nullopt;
}

}  // namespace locmult
