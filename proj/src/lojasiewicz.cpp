#include "locmult/lojasiewicz.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "locmult/errors.hpp"
#include "locmult/monomial_set.hpp"
#include "locmult/newton.hpp"

namespace locmult {

namespace {

NuRoute resolve(const Ideal& ideal, NuRoute route) {
  if (route == NuRoute::kAuto) return ideal.is_monomial() ? NuRoute::kMonomial : NuRoute::kRees;
  if (route == NuRoute::kMonomial && !ideal.is_monomial()) {
    throw HypothesisError("monomial route needs a monomial ideal");
  }
  return route;
}

// Least p in [lo, hi] with holds(p), given holds(hi); holds is monotone in p.
unsigned least_true(unsigned lo, unsigned hi, const std::function<bool(unsigned)>& holds) {
  while (lo < hi) {
    const unsigned mid = lo + (hi - lo) / 2;
    if (holds(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

// Upper end of the search: `known` (already proved) when it fits under pmax,
// else pmax after checking it.
unsigned search_ceiling(std::optional<unsigned> known, unsigned pmax,
                        const std::function<bool(unsigned)>& holds) {
  if (known && *known <= pmax) return *known;
  if (!holds(pmax)) throw ResourceCapError("nu: pmax " + std::to_string(pmax) + " exceeded");
  return pmax;
}

// Closure tests of degree-p monomials against base^q, memoized across probes.
class ReesProbe {
 public:
  ReesProbe(const Ideal& base, unsigned q, const CertifyOptions& options)
      : ring_(base.ring()), base_(base), q_(q), power_(ideal_power(base, q)), options_(options) {}

  bool holds(unsigned p) {
    const auto mons = monomials_of_degree(ring_->size(), p);
    // Cheap decisions for every monomial before any certified multiplicity.
    std::vector<Monomial> open;
    for (const auto& m : mons) {
      auto it = memo_.find(m);
      if (it == memo_.end()) {
        auto w = closure_shortcut(Polynomial::monomial(ring_, m), power_, options_);
        if (!w) {
          open.push_back(m);
          continue;
        }
        it = memo_.emplace(m, std::move(*w)).first;
      }
      if (!it->second.member) return false;
    }
    if (open.empty()) return true;
    if (!e_power_) e_power_ = certify_power();
    std::vector<std::optional<ClosureWitness>> slots(open.size());
    const bool all = all_of_indices(open.size(), [&](std::size_t i) {
      slots[i] = closure_member(Polynomial::monomial(ring_, open[i]), power_, *e_power_, options_);
      return slots[i]->member;
    }, options_.exec);
    for (std::size_t i = 0; i < open.size(); ++i) {
      if (slots[i]) memo_.emplace(open[i], std::move(*slots[i]));
    }
    return all;
  }

  // For base = (g_1..g_n) a parameter ideal, (g_1^q..g_n^q) is a reduction
  // of base^q; its generators are among those of the power.
  MultiplicityCertificate certify_power() const {
    const std::size_t n = ring_->size();
    if (base_.size() == n && power_.size() > n) {
      const auto gens = power_.generators();
      Matrix a(n, gens.size());
      bool found = true;
      for (std::size_t i = 0; i < n && found; ++i) {
        const Polynomial target = base_.generators()[i].pow(q_);
        const auto it = std::find(gens.begin(), gens.end(), target);
        found = it != gens.end();
        if (found) a(i, static_cast<std::size_t>(it - gens.begin())) = 1;
      }
      if (found) {
        const Ideal pure(ring_, combine(a, gens));
        if (auto r = reduction_exponent(pure, power_, std::max<unsigned>(options_.rmax, n), options_.exec)) {
          MultiplicityCertificate c;
          c.route = MultiplicityRoute::kGenericReduction;
          c.e = *colength(pure);
          c.generic = GenericWitness{options_.seed, 0, std::move(a), *r, c.e};
          c.diagnostics.push_back("reduction by the q-th powers of the parameter generators");
          return c;
        }
      }
    }
    return e_certified(power_, options_);
  }

  // Requires holds(p) to have returned true.
  std::vector<std::pair<Monomial, ClosureWitness>> members(unsigned p) const {
    std::vector<std::pair<Monomial, ClosureWitness>> out;
    for (const auto& m : monomials_of_degree(ring_->size(), p)) out.emplace_back(m, memo_.at(m));
    return out;
  }

  // The first degree-p monomial outside the closure, in monomial order, so
  // the choice does not depend on which tests a parallel probe skipped.
  std::pair<Monomial, ClosureWitness> outsider(unsigned p) {
    for (const auto& m : monomials_of_degree(ring_->size(), p)) {
      auto it = memo_.find(m);
      if (it == memo_.end()) {
        const Polynomial f = Polynomial::monomial(ring_, m);
        auto w = closure_shortcut(f, power_, options_);
        if (!w) {
          if (!e_power_) e_power_ = certify_power();
          w = closure_member(f, power_, *e_power_, options_);
        }
        it = memo_.emplace(m, std::move(*w)).first;
      }
      if (!it->second.member) return *it;
    }
    throw Error("nu: every monomial of degree " + std::to_string(p) + " is in the closure");
  }

 private:
  RingPtr ring_;
  Ideal base_;
  unsigned q_;
  Ideal power_;
  CertifyOptions options_;
  std::optional<MultiplicityCertificate> e_power_;
  std::unordered_map<Monomial, ClosureWitness, MonomialHash> memo_;
};

// nu(q) of the monomial ideal of all generator terms; a lower bound for
// nu(q) of base, since base lies in that ideal.
unsigned term_lower_bound(const Ideal& base, unsigned q, unsigned hi) {
  if (base.ring()->size() > kNewtonMaxVariables) return 1;
  std::vector<Monomial> terms;
  for (const auto& g : base.generators()) {
    for (const auto& t : g.terms()) terms.push_back(t.monomial);
  }
  const MonomialIdeal support(base.ring(), std::move(terms));
  for (unsigned p = 1; p < hi; ++p) {
    if (monomial_power_test(support, p, q)) return p;
  }
  return hi;
}

// The per-q search, with `base` the ideal whose powers are tested and
// `known` a p already proved to satisfy the test.
NuEntry search(const Ideal& base, unsigned q, unsigned pmax, std::optional<unsigned> known,
               const CertifyOptions& options, NuRoute route) {
  NuEntry entry;
  entry.q = q;
  entry.route = route;
  if (route == NuRoute::kMonomial) {
    const MonomialIdeal mono = MonomialIdeal::from_ideal(base);
    auto holds = [&](unsigned p) { return monomial_power_test(mono, p, q); };
    entry.nu = least_true(1, search_ceiling(known, pmax, holds), holds);
    return entry;
  }
  ReesProbe probe(base, q, options);
  auto holds = [&](unsigned p) { return probe.holds(p); };
  const unsigned hi = search_ceiling(known, pmax, holds);
  entry.nu = least_true(term_lower_bound(base, q, hi), hi, holds);
  probe.holds(entry.nu);
  entry.at_nu = probe.members(entry.nu);
  if (entry.nu > 1) {
    entry.below_nu = probe.outsider(entry.nu - 1);
  }
  return entry;
}

unsigned default_pmax(const Ideal& ideal, unsigned q) {
  // m^c lies in I for c = colength(I), hence m^(q c) lies in I^q.
  return q * static_cast<unsigned>(*colength(ideal));
}

}  // namespace

NuEntry nu_entry(const Ideal& ideal, unsigned q, std::optional<unsigned> pmax,
                 const CertifyOptions& options, NuRoute route) {
  require_m_primary(ideal, "nu");
  if (q == 0) throw HypothesisError("nu needs q >= 1");
  return search(ideal, q, pmax.value_or(default_pmax(ideal, q)), std::nullopt, options, resolve(ideal, route));
}

unsigned nu(const Ideal& ideal, unsigned q, std::optional<unsigned> pmax, const CertifyOptions& options,
            NuRoute route) {
  return nu_entry(ideal, q, pmax, options, route).nu;
}

namespace {

void fill_bracket(LojaBracket& b) {
  bool first = true;
  for (const auto& e : b.table) {
    Rational up(e.nu, e.q);
    Rational low(e.nu - 1, e.q);
    up.canonicalize();
    low.canonicalize();
    if (first || up < b.upper) b.upper = up;
    if (first || low > b.lower) b.lower = low;
    first = false;
  }
}

}  // namespace

LojaBracket loja_bracket(const Ideal& ideal, unsigned qmax, const CertifyOptions& options, NuRoute route) {
  require_m_primary(ideal, "loja_bracket");
  if (qmax == 0) throw HypothesisError("loja_bracket needs qmax >= 1");
  const NuRoute used = resolve(ideal, route);
  LojaBracket b;
  const Ideal* base = &ideal;
  if (used == NuRoute::kRees && !ideal.is_monomial() && ideal.size() > ideal.ring()->size()) {
    // closure(J^q) = closure(I^q) for a reduction J, and J^q is far smaller.
    // Monomial powers stay cheap, so monomial input keeps its own powers.
    b.reduction = find_generic_reduction(ideal, options);
    base = &b.reduction->j;
  }
  for (unsigned q = 1; q <= qmax; ++q) {
    // Subadditivity: nu(q) <= nu(q - 1) + nu(1).
    std::optional<unsigned> known;
    if (q > 1) known = b.table.back().nu + b.table.front().nu;
    b.table.push_back(search(*base, q, default_pmax(ideal, q), known, options, used));
  }
  fill_bracket(b);
  if (ideal.is_monomial()) b.exact = monomial_loja(MonomialIdeal::from_ideal(ideal));
  return b;
}

bool verify_loja(const LojaBracket& bracket, const Ideal& ideal) {
  if (!is_m_primary(ideal) || bracket.table.empty()) return false;
  Ideal base = ideal;
  if (bracket.reduction) {
    const FoundReduction& red = *bracket.reduction;
    if (red.a.rows() != ideal.ring()->size() || red.a.cols() != ideal.size()) return false;
    Ideal j(ideal.ring(), combine(red.a, ideal.generators()));
    if (!red.certificate.r || !satisfies_reduction_equation(j, ideal, *red.certificate.r)) return false;
    base = std::move(j);
  }
  const std::size_t n = ideal.ring()->size();
  for (std::size_t k = 0; k < bracket.table.size(); ++k) {
    const NuEntry& e = bracket.table[k];
    if (e.q != k + 1 || e.nu == 0) return false;
    if (e.route == NuRoute::kMonomial) {
      if (!base.is_monomial()) return false;
      const MonomialIdeal mono = MonomialIdeal::from_ideal(base);
      if (!monomial_power_test(mono, e.nu, e.q)) return false;
      if (e.nu > 1 && monomial_power_test(mono, e.nu - 1, e.q)) return false;
      continue;
    }
    const Ideal power = ideal_power(base, e.q);
    const auto mons = monomials_of_degree(n, e.nu);
    if (e.at_nu.size() != mons.size()) return false;
    for (std::size_t i = 0; i < mons.size(); ++i) {
      const auto& [m, w] = e.at_nu[i];
      if (!(m == mons[i]) || !w.member) return false;
      if (!verify_closure(w, Polynomial::monomial(ideal.ring(), m), power)) return false;
    }
    if (e.nu > 1) {
      if (!e.below_nu) return false;
      const auto& [m, w] = *e.below_nu;
      if (m.degree() != e.nu - 1 || w.member) return false;
      if (!verify_closure(w, Polynomial::monomial(ideal.ring(), m), power)) return false;
    }
  }
  LojaBracket check;
  check.table = bracket.table;
  fill_bracket(check);
  if (check.lower != bracket.lower || check.upper != bracket.upper) return false;
  if (ideal.is_monomial()) {
    return bracket.exact && *bracket.exact == monomial_loja(MonomialIdeal::from_ideal(ideal));
  }
  return !bracket.exact;
}

}  // namespace locmult
