#include "locmult/reduction.hpp"

#include <algorithm>
#include <limits>

#include "locmult/errors.hpp"
#include "locmult/newton.hpp"
#include "locmult/random.hpp"

namespace locmult {

std::string to_string(ReductionVerdict verdict) {
  switch (verdict) {
    case ReductionVerdict::kYesWithR:
      return "yes-with-r";
    case ReductionVerdict::kYesByMultiplicity:
      return "yes-by-multiplicity";
    case ReductionVerdict::kNoByMultiplicity:
      return "no-by-multiplicity";
    case ReductionVerdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

ReductionVerdict parse_verdict(const std::string& text) {
  for (auto v : {ReductionVerdict::kYesWithR, ReductionVerdict::kYesByMultiplicity,
                 ReductionVerdict::kNoByMultiplicity, ReductionVerdict::kInconclusive}) {
    if (to_string(v) == text) return v;
  }
  throw ParseError("unknown verdict '" + text + "'", 0);
}

namespace {

void require_inside(const Ideal& j, const Ideal& i, Execution exec) {
  require_same_ring(j.ring(), i.ring());
  if (!contains(i, j, exec)) throw HypothesisError("J is not contained in I");
}

unsigned weighted_order(const Polynomial& f, std::span<const unsigned> w) {
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const auto& t : f.terms()) {
    unsigned v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) v += w[i] * t.monomial[i];
    best = std::min(best, v);
  }
  return best;
}

unsigned weighted_order(const Ideal& ideal, std::span<const unsigned> w) {
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const auto& g : ideal.generators()) best = std::min(best, weighted_order(g, w));
  return best;
}

// A facet of the Newton polyhedron of all generator terms that f falls below.
std::optional<std::vector<unsigned>> separating_weight(const Polynomial& f, const Ideal& ideal) {
  const std::size_t n = ideal.ring()->size();
  if (n > kNewtonMaxVariables) return std::nullopt;
  std::vector<Monomial> terms;
  for (const auto& g : ideal.generators()) {
    for (const auto& t : g.terms()) terms.push_back(t.monomial);
  }
  const MonomialIdeal support(ideal.ring(), std::move(terms));
  if (!support.is_m_primary()) return std::nullopt;
  for (const Facet& facet : newton_polyhedron(support).facets) {
    std::vector<unsigned> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<unsigned>(facet.normal[i].get_num().get_ui());
    if (weighted_order(f, w) < weighted_order(ideal, w)) return w;
  }
  return std::nullopt;
}

// The first random n-generated m-primary L inside the ideal, with colength(L).
std::optional<GenericWitness> colength_bound(const Ideal& ideal, const CertifyOptions& options) {
  const std::size_t n = ideal.ring()->size();
  const CounterRng rng(options.seed);
  for (std::uint64_t draw = 0; draw < options.trials; ++draw) {
    Matrix a = random_matrix(rng, draw, n, ideal.size());
    const Ideal l(ideal.ring(), combine(a, ideal.generators()));
    if (l.size() != n || !is_m_primary(l)) continue;
    return GenericWitness{options.seed, draw, std::move(a), 0, *colength(l)};
  }
  return std::nullopt;
}

}  // namespace

ReductionCertificate is_reduction_direct(const Ideal& j, const Ideal& i, unsigned rmax,
                                         Execution exec) {
  require_inside(j, i, exec);
  require_m_primary(i, "is_reduction_direct");
  ReductionCertificate c;
  if (auto r = reduction_exponent(j, i, rmax, exec)) {
    c.verdict = ReductionVerdict::kYesWithR;
    c.r = r;
  }
  return c;
}

ReductionCertificate is_reduction_rees(const Ideal& j, const Ideal& i, const CertifyOptions& options) {
  require_inside(j, i, options.exec);
  require_m_primary(i, "is_reduction_rees");
  require_m_primary(j, "is_reduction_rees");
  ReductionCertificate c;
  c.e_i = e_certified(i, options);
  c.e_j = e_certified(j, options);
  if (c.e_j->e == c.e_i->e) {
    c.r = reduction_exponent(j, i, options.rmax, options.exec);
    c.verdict = c.r ? ReductionVerdict::kYesWithR : ReductionVerdict::kYesByMultiplicity;
  } else if (c.e_j->e > c.e_i->e) {
    c.verdict = ReductionVerdict::kNoByMultiplicity;
  }
  // e(J) < e(I) is impossible for J inside I; it stays inconclusive.
  return c;
}

std::optional<ClosureWitness> closure_shortcut(const Polynomial& f, const Ideal& ideal,
                                               const CertifyOptions& options) {
  require_same_ring(f.ring(), ideal.ring());
  ClosureWitness w;
  if (is_member(f, ideal)) {
    w.member = true;
    w.shortcut = "in the ideal";
    return w;
  }
  if (f.ord() == 0U) {
    w.shortcut = "unit";
    return w;
  }
  if (options.closure_shortcuts) {
    if (auto weight = separating_weight(f, ideal)) {
      w.shortcut = "weight";
      w.weight = std::move(weight);
      return w;
    }
  }
  return std::nullopt;
}

ClosureWitness closure_member(const Polynomial& f, const Ideal& ideal, const CertifyOptions& options) {
  require_m_primary(ideal, "closure_member");
  if (auto w = closure_shortcut(f, ideal, options)) return *w;
  return closure_member(f, ideal, e_certified(ideal, options), options);
}

ClosureWitness closure_member(const Polynomial& f, const Ideal& ideal, const MultiplicityCertificate& e_i,
                              const CertifyOptions& options) {
  if (auto w = closure_shortcut(f, ideal, options)) return *w;
  ClosureWitness w;
  const Polynomial extra[] = {f};
  const Ideal widened = ideal_sum(ideal, extra);
  if (options.closure_shortcuts) {
    if (auto bound = colength_bound(widened, options); bound && bound->colength_j < e_i.e) {
      w.e_i = e_i;
      w.bound = std::move(bound);
      return w;
    }
    if (auto r = reduction_exponent(ideal, widened, options.rmax, options.exec)) {
      w.member = true;
      w.integral_r = r;
      return w;
    }
  }
  w.e_i = e_i;
  w.e_ix = e_certified(widened, options);
  w.member = w.e_i->e == w.e_ix->e;
  return w;
}

FoundReduction find_generic_reduction(const Ideal& ideal, const CertifyOptions& options) {
  require_m_primary(ideal, "find_generic_reduction");
  if (ideal.size() < ideal.ring()->size()) {
    throw HypothesisError("find_generic_reduction needs at least n generators");
  }
  std::vector<std::string> diagnostics;
  auto found = search_generic_reduction(ideal, options, diagnostics);
  if (!found) {
    throw TrialsExhausted("find_generic_reduction: no verified reduction in " +
                              std::to_string(options.trials) + " trials",
                          std::move(diagnostics));
  }
  ReductionCertificate c;
  c.verdict = ReductionVerdict::kYesWithR;
  c.r = found->witness.r;
  return FoundReduction{std::move(found->j), found->witness.a, std::move(c), found->witness};
}

bool verify_reduction(const ReductionCertificate& certificate, const Ideal& j, const Ideal& i) {
  if (!is_m_primary(i) || !contains(i, j)) return false;
  switch (certificate.verdict) {
    case ReductionVerdict::kYesWithR:
      return certificate.r && *certificate.r > 0 && satisfies_reduction_equation(j, i, *certificate.r);
    case ReductionVerdict::kYesByMultiplicity:
    case ReductionVerdict::kNoByMultiplicity: {
      if (!certificate.e_i || !certificate.e_j) return false;
      if (!verify_multiplicity(*certificate.e_i, i) || !verify_multiplicity(*certificate.e_j, j)) return false;
      if (certificate.verdict == ReductionVerdict::kYesByMultiplicity) {
        return certificate.e_i->e == certificate.e_j->e;
      }
      return certificate.e_j->e > certificate.e_i->e;
    }
    case ReductionVerdict::kInconclusive:
      return true;
  }
  return false;
}

bool verify_closure(const ClosureWitness& witness, const Polynomial& f, const Ideal& ideal) {
  if (!is_m_primary(ideal)) return false;
  if (witness.shortcut) {
    if (*witness.shortcut == "in the ideal") return witness.member && is_member(f, ideal);
    if (*witness.shortcut == "unit") return !witness.member && f.ord() == 0U;
    if (*witness.shortcut == "weight") {
      if (witness.member || !witness.weight || witness.weight->size() != f.ring()->size()) return false;
      const auto& w = *witness.weight;
      if (std::all_of(w.begin(), w.end(), [](unsigned x) { return x == 0; })) return false;
      return weighted_order(f, w) < weighted_order(ideal, w);
    }
    return false;
  }
  const Polynomial extra[] = {f};
  if (witness.integral_r) {
    return witness.member && *witness.integral_r > 0 &&
           satisfies_reduction_equation(ideal, ideal_sum(ideal, extra), *witness.integral_r);
  }
  if (witness.bound) {
    const GenericWitness& b = *witness.bound;
    if (witness.member || !witness.e_i || !verify_multiplicity(*witness.e_i, ideal)) return false;
    const Ideal widened = ideal_sum(ideal, extra);
    if (b.a.rows() != f.ring()->size() || b.a.cols() != widened.size()) return false;
    const Ideal l(f.ring(), combine(b.a, widened.generators()));
    if (l.size() != f.ring()->size() || !is_m_primary(l)) return false;
    return *colength(l) == b.colength_j && b.colength_j < witness.e_i->e;
  }
  if (!witness.e_i || !witness.e_ix) return false;
  if (!verify_multiplicity(*witness.e_i, ideal)) return false;
  if (!verify_multiplicity(*witness.e_ix, ideal_sum(ideal, extra))) return false;
  return witness.member == (witness.e_i->e == witness.e_ix->e);
}

}  // namespace locmult
