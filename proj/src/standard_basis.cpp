#include "locmult/standard_basis.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <unordered_set>

#include "locmult/errors.hpp"
#include "locmult/monomial_set.hpp"

namespace locmult {

using detail::OrderedPoly;

namespace {

struct Context {
  TermOrder order;
  std::optional<unsigned> truncate;  // terms of degree >= *truncate are dropped
  const Caps& caps;
  std::size_t reductions = 0;

  void count_reduction() {
    if (++reductions > caps.max_reductions) {
      throw ResourceCapError("standard basis: reduction step cap exceeded");
    }
  }

  // Monomials known to lie in the ideal; `known_below` lists the ones
  // under the truncation degree so the check is a lookup.
  std::vector<Monomial> known;
  std::unordered_set<Monomial, MonomialHash> known_below;

  bool dropped(const Monomial& m) const {
    if (truncate && m.degree() >= *truncate) return true;
    if (known.empty()) return false;
    if (truncate) return known_below.contains(m);
    return in_monomial_ideal(m, known);
  }
};

unsigned ecart_of(const std::vector<Term>& terms, TermOrder order) {
  if (!order.is_local() || terms.empty()) return 0;
  // Local order: degrees are nondecreasing along the sorted list.
  return terms.back().monomial.degree() - terms.front().monomial.degree();
}

void sort_terms(std::vector<Term>& terms, TermOrder order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
}

void drop_high_terms(OrderedPoly& p, const Context& ctx) {
  if (!ctx.truncate) return;
  std::erase_if(p.terms, [&](const Term& t) { return ctx.dropped(t.monomial); });
  p.ecart = ecart_of(p.terms, ctx.order);
}

OrderedPoly to_ordered(const Polynomial& p, const Context& ctx) {
  OrderedPoly out;
  out.terms.assign(p.terms().begin(), p.terms().end());
  sort_terms(out.terms, ctx.order);
  drop_high_terms(out, ctx);
  out.ecart = ecart_of(out.terms, ctx.order);
  return out;
}

void make_monic(OrderedPoly& p) {
  if (p.terms.empty() || p.terms.front().coeff == 1) return;
  const Rational inv = 1 / p.terms.front().coeff;
  for (auto& t : p.terms) t.coeff *= inv;
}

// h := h - c * mu * g, both sorted descending in ctx.order.
void subtract_multiple(std::vector<Term>& h, const Rational& c, const Monomial& mu,
                       const std::vector<Term>& g, const Context& ctx) {
  std::vector<Term> out;
  out.reserve(h.size() + g.size());
  std::size_t i = 0, j = 0;
  Monomial next;
  bool have_next = false;
  auto advance_g = [&] {
    have_next = false;
    while (j < g.size()) {
      next = g[j].monomial * mu;
      if (!ctx.dropped(next)) {
        have_next = true;
        return;
      }
      ++j;
    }
  };
  advance_g();
  while (i < h.size() || have_next) {
    int cmp;
    if (i == h.size()) {
      cmp = -1;
    } else if (!have_next) {
      cmp = 1;
    } else {
      cmp = ctx.order.compare(h[i].monomial, next);
    }
    if (cmp > 0) {
      out.push_back(std::move(h[i++]));
    } else if (cmp < 0) {
      out.push_back(Term{next, -(c * g[j].coeff)});
      ++j;
      advance_g();
    } else {
      Rational s = h[i].coeff - c * g[j].coeff;
      if (s != 0) out.push_back(Term{next, std::move(s)});
      ++i;
      ++j;
      advance_g();
    }
  }
  h = std::move(out);
}

OrderedPoly multiply_monomial(const OrderedPoly& p, const Monomial& mu, const Context& ctx) {
  OrderedPoly out;
  out.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    Monomial m = t.monomial * mu;
    if (!ctx.dropped(m)) out.terms.push_back(Term{m, t.coeff});
  }
  out.ecart = ecart_of(out.terms, ctx.order);
  return out;
}

// Reducer with minimal ecart, earliest position on ties.
template <typename Range>
const OrderedPoly* pick_reducer(const Monomial& lm, const Range& candidates, const OrderedPoly* best) {
  for (const OrderedPoly& g : candidates) {
    if (g.terms.empty() || !g.terms.front().monomial.divides(lm)) continue;
    if (best == nullptr || g.ecart < best->ecart) best = &g;
  }
  return best;
}

// Weak normal form. With a local order and no truncation this is Mora's
// algorithm: a reducer of larger ecart puts the current remainder into the
// reducer set before the step.
template <typename Range>
OrderedPoly weak_normal_form(OrderedPoly h, const Range& basis, Context& ctx) {
  std::deque<OrderedPoly> extra;
  const bool mora = ctx.order.is_local() && !ctx.truncate;
  while (!h.terms.empty()) {
    const Monomial lm = h.terms.front().monomial;
    const OrderedPoly* g = pick_reducer(lm, basis, nullptr);
    if (mora) {
      const OrderedPoly* alt = pick_reducer(lm, extra, nullptr);
      if (alt != nullptr && (g == nullptr || alt->ecart < g->ecart)) g = alt;
    }
    if (g == nullptr) break;
    if (mora && g->ecart > h.ecart) extra.push_back(h);
    ctx.count_reduction();
    const Rational c = h.terms.front().coeff / g->terms.front().coeff;
    subtract_multiple(h.terms, c, lm / g->terms.front().monomial, g->terms, ctx);
    h.ecart = ecart_of(h.terms, ctx.order);
  }
  return h;
}

// Tail-reduces after the weak normal form whenever division terminates
// (global order, or local order modulo a power of m).
template <typename Range>
OrderedPoly full_normal_form(OrderedPoly h, const Range& basis, Context& ctx) {
  h = weak_normal_form(std::move(h), basis, ctx);
  if (ctx.order.is_local() && !ctx.truncate) return h;
  std::vector<Term> remainder;
  while (!h.terms.empty()) {
    remainder.push_back(std::move(h.terms.front()));
    h.terms.erase(h.terms.begin());
    h.ecart = ecart_of(h.terms, ctx.order);
    h = weak_normal_form(std::move(h), basis, ctx);
  }
  OrderedPoly out;
  out.terms = std::move(remainder);
  out.ecart = ecart_of(out.terms, ctx.order);
  return out;
}

Polynomial to_polynomial(const RingPtr& ring, const OrderedPoly& p) {
  return Polynomial::from_terms(ring, p.terms);
}

struct Element {
  OrderedPoly poly;
  Monomial lm;
  bool active = true;
};

struct Pair {
  unsigned degree;
  bool initial;
  std::size_t seq;
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  bool alive = true;
};

struct PairAfter {
  const std::vector<Pair>* pairs;
  bool operator()(std::size_t x, std::size_t y) const {
    const Pair& a = (*pairs)[x];
    const Pair& b = (*pairs)[y];
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.initial != b.initial) return !a.initial;
    return a.seq > b.seq;
  }
};

class Engine {
 public:
  Engine(const RingPtr& ring, TermOrder order, const SbOptions& options)
      : ring_(ring), ctx_{order, order.is_local() ? options.power_bound : std::nullopt, options.caps} {
    if (options.known_monomials.empty()) return;
    ctx_.known = minimize_monomials(options.known_monomials);
    if (!ctx_.truncate) return;
    for (unsigned d = 0; d < *ctx_.truncate; ++d) {
      for (const auto& m : monomials_of_degree(ring_->size(), d)) {
        if (in_monomial_ideal(m, ctx_.known)) ctx_.known_below.insert(m);
      }
    }
  }

  StandardBasis run(std::span<const Polynomial> generators) {
    for (const auto& g : generators) {
      require_same_ring(ring_, g.ring());
      if (g.is_zero()) continue;
      OrderedPoly p = to_ordered(g, ctx_);
      if (p.terms.empty()) continue;
      inputs_.push_back(std::move(p));
      const Monomial lm = inputs_.back().terms.front().monomial;
      push(Pair{lm.degree(), true, seq_++, inputs_.size() - 1, 0, lm});
    }
    for (const auto& m : ctx_.known) {
      if (m.size() != ring_->size()) throw RingMismatch("known monomial has the wrong length");
      if (!ctx_.truncate || m.degree() < *ctx_.truncate) add_element(OrderedPoly{{Term{m, 1}}, 0});
    }
    if (ctx_.truncate && *ctx_.truncate == 0) {
      // m^0 is the unit ideal.
      inputs_.clear();
      queue_ = decltype(queue_)(PairAfter{&pairs_});
      add_element(OrderedPoly{{Term{Monomial(ring_->size()), 1}}, 0});
    }
    while (!queue_.empty()) {
      const Pair item = pairs_[queue_.top()];
      queue_.pop();
      if (!item.alive) continue;
      OrderedPoly s;
      if (item.initial) {
        s = inputs_[item.i];
        drop_high_terms(s, ctx_);
      } else {
        if (!elements_[item.i].active || !elements_[item.j].active) continue;
        s = s_polynomial(elements_[item.i], elements_[item.j]);
      }
      OrderedPoly h = weak_normal_form(std::move(s), active_view(), ctx_);
      if (h.terms.empty()) continue;
      make_monic(h);
      add_element(std::move(h));
    }
    return finish();
  }

 private:
  struct ActiveView {
    const std::vector<Element>* elements;
    struct Iterator {
      const std::vector<Element>* elements;
      std::size_t i;
      void skip() {
        while (i < elements->size() && !(*elements)[i].active) ++i;
      }
      const OrderedPoly& operator*() const { return (*elements)[i].poly; }
      Iterator& operator++() {
        ++i;
        skip();
        return *this;
      }
      bool operator!=(const Iterator& o) const { return i != o.i; }
    };
    Iterator begin() const {
      Iterator it{elements, 0};
      it.skip();
      return it;
    }
    Iterator end() const { return Iterator{elements, elements->size()}; }
  };

  ActiveView active_view() const { return ActiveView{&elements_}; }

  void push(Pair pair) {
    pairs_.push_back(std::move(pair));
    queue_.push(pairs_.size() - 1);
    if (queue_.size() > ctx_.caps.max_pairs) {
      throw ResourceCapError("standard basis: pair queue cap exceeded");
    }
  }

  OrderedPoly s_polynomial(const Element& f, const Element& g) const {
    const Monomial l = f.lm.lcm(g.lm);
    OrderedPoly s = multiply_monomial(f.poly, l / f.lm, ctx_);
    subtract_multiple(s.terms, 1, l / g.lm, g.poly.terms, ctx_);
    s.ecart = ecart_of(s.terms, ctx_.order);
    return s;
  }

  // Gebauer-Moeller update. The chain criterion only uses the leading
  // monomials, so it holds for local orders too; the product criterion is
  // applied for the global order only.
  void add_element(OrderedPoly h) {
    const std::size_t k = elements_.size();
    const Monomial lm = h.terms.front().monomial;
    elements_.push_back(Element{std::move(h), lm, true});
    for (Pair& p : pairs_) {
      if (!p.alive || p.initial) continue;
      if (lm.divides(p.lcm) && !(elements_[p.i].lm.lcm(lm) == p.lcm) &&
          !(elements_[p.j].lm.lcm(lm) == p.lcm)) {
        p.alive = false;
      }
    }
    struct Candidate {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (!elements_[i].active) continue;
      // Two monomials have a zero s-polynomial.
      if (elements_[i].poly.terms.size() == 1 && elements_[k].poly.terms.size() == 1) continue;
      fresh.push_back(Candidate{i, elements_[i].lm.lcm(lm), elements_[i].lm.coprime(lm)});
    }
    for (auto& c : fresh) {
      for (const auto& d : fresh) {
        if (&c == &d) continue;
        // A strictly smaller lcm makes this syzygy redundant; equal lcms
        // keep only the first.
        if (d.lcm.divides(c.lcm) && (!(d.lcm == c.lcm) || (d.keep && d.i < c.i))) {
          c.keep = false;
          break;
        }
      }
    }
    for (const auto& c : fresh) {
      if (!c.keep) continue;
      if (!ctx_.order.is_local() && c.coprime) continue;
      push(Pair{c.lcm.degree(), false, seq_++, c.i, k, c.lcm});
    }
    if (ctx_.order.is_local()) update_highest_corner();
  }

  std::vector<Monomial> leading_with_virtual() const {
    std::vector<Monomial> lms;
    for (const auto& e : elements_) {
      if (e.active) lms.push_back(e.lm);
    }
    if (ctx_.truncate) {
      auto high = monomials_of_degree(ring_->size(), *ctx_.truncate);
      lms.insert(lms.end(), high.begin(), high.end());
    }
    return lms;
  }

  // Once the leading monomials cover every monomial of some degree D, m^D
  // lies in the ideal (Nakayama), and all terms of degree >= D can go.
  void update_highest_corner() {
    const auto lms = leading_with_virtual();
    if (!pure_power_box(lms, ring_->size())) return;
    const auto d = power_containment_degree(lms, ring_->size());
    if (!d || (ctx_.truncate && *d >= *ctx_.truncate)) return;
    ctx_.truncate = d;
    for (auto& e : elements_) {
      if (!e.active) continue;
      drop_high_terms(e.poly, ctx_);
      if (e.poly.terms.empty()) e.active = false;
    }
  }

  StandardBasis finish() {
    std::vector<OrderedPoly> kept;
    std::vector<Monomial> kept_lms;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const Element& e = elements_[i];
      if (!e.active) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < elements_.size() && !redundant; ++j) {
        if (j == i || !elements_[j].active) continue;
        if (elements_[j].lm.divides(e.lm) && (!(elements_[j].lm == e.lm) || j < i)) redundant = true;
      }
      if (!redundant) {
        kept.push_back(e.poly);
        kept_lms.push_back(e.lm);
      }
    }
    std::optional<unsigned> bound;
    if (ctx_.order.is_local()) {
      if (ctx_.truncate) {
        // Degree-D monomials of the virtual m^D that are not yet leading
        // monomials become explicit elements.
        for (const auto& m : monomials_of_degree(ring_->size(), *ctx_.truncate)) {
          if (in_monomial_ideal(m, kept_lms)) continue;
          kept.push_back(OrderedPoly{{Term{m, 1}}, 0});
          kept_lms.push_back(m);
        }
      }
      bound = power_containment_degree(minimize_monomials(kept_lms), ring_->size());
    }
    return StandardBasis(ring_, ctx_.order, std::move(kept), bound);
  }

  RingPtr ring_;
  Context ctx_;
  std::vector<OrderedPoly> inputs_;
  std::vector<Element> elements_;
  std::vector<Pair> pairs_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, PairAfter> queue_{PairAfter{&pairs_}};
  std::size_t seq_ = 0;
};

}  // namespace

StandardBasis::StandardBasis(RingPtr ring, TermOrder order, std::vector<OrderedPoly> elements,
                             std::optional<unsigned> degree_bound)
    : ring_(std::move(ring)), order_(order), ordered_(std::move(elements)), degree_bound_(degree_bound) {
  std::vector<Monomial> lms;
  elements_.reserve(ordered_.size());
  for (const auto& p : ordered_) {
    elements_.push_back(to_polynomial(ring_, p));
    lms.push_back(p.terms.front().monomial);
  }
  leading_ = minimize_monomials(std::move(lms));
}

unsigned bezout_bound(const RingPtr& ring, std::span<const Polynomial> generators) {
  unsigned delta = 1;
  for (const auto& g : generators) {
    if (auto d = g.degree()) delta = std::max(delta, *d);
  }
  unsigned long long bound = 1;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    bound = std::min<unsigned long long>(bound * delta, kBezoutCeiling);
  }
  return static_cast<unsigned>(bound);
}

std::optional<StandardBasis> zero_dimensional_basis(const RingPtr& ring,
                                                    std::span<const Polynomial> generators,
                                                    const Caps& caps) {
  const unsigned bound = bezout_bound(ring, generators);
  SbOptions options;
  options.caps = caps;
  for (unsigned D = std::min(8u, bound + 1);; D = std::min(2 * D, bound + 1)) {
    options.power_bound = D;
    StandardBasis sb = Engine(ring, TermOrder::local(), options).run(generators);
    // A covered degree below D gives m^d in I + m^(d+1), hence m^d in I.
    if (sb.degree_bound() && *sb.degree_bound() < D) return sb;
    if (D == bound + 1) {
      if (bound == kBezoutCeiling) {
        throw ResourceCapError("standard basis: degree probe ceiling reached");
      }
      return std::nullopt;
    }
  }
}

StandardBasis compute_standard_basis(const RingPtr& ring, std::span<const Polynomial> generators,
                                     TermOrder order, const SbOptions& options) {
  if (order.is_local() && !options.power_bound && options.known_monomials.empty() && options.degree_probe) {
    const bool nonzero = std::any_of(generators.begin(), generators.end(),
                                     [](const Polynomial& g) { return !g.is_zero(); });
    if (nonzero) {
      if (auto sb = zero_dimensional_basis(ring, generators, options.caps)) return std::move(*sb);
    }
  }
  return Engine(ring, order, options).run(generators);
}

Polynomial normal_form(const Polynomial& f, const StandardBasis& basis, const Caps& caps) {
  require_same_ring(f.ring(), basis.ring());
  Context ctx{basis.order(), basis.order().is_local() ? basis.degree_bound() : std::nullopt, caps};
  OrderedPoly h = to_ordered(f, ctx);
  h = full_normal_form(std::move(h), basis.ordered(), ctx);
  return to_polynomial(f.ring(), h);
}

bool reduces_to_zero(const Polynomial& f, const StandardBasis& basis, const Caps& caps) {
  require_same_ring(f.ring(), basis.ring());
  Context ctx{basis.order(), basis.order().is_local() ? basis.degree_bound() : std::nullopt, caps};
  OrderedPoly h = to_ordered(f, ctx);
  return weak_normal_form(std::move(h), basis.ordered(), ctx).terms.empty();
}

std::optional<std::vector<Monomial>> staircase(const StandardBasis& basis) {
  std::vector<Monomial> out;
  const auto count = for_each_standard_monomial(basis.leading_monomials(), basis.ring()->size(),
                                                [&](const Monomial& m) { out.push_back(m); });
  if (!count) return std::nullopt;
  return out;
}

}  // namespace locmult
