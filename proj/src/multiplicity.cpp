#include "locmult/multiplicity.hpp"

#include <string>

#include "locmult/errors.hpp"
#include "locmult/random.hpp"

namespace locmult {

void require_m_primary(const Ideal& ideal, const char* what) {
  if (!is_m_primary(ideal)) throw HypothesisError(std::string(what) + ": ideal is not m-primary");
}

std::size_t hs_length(const Ideal& ideal, unsigned k) {
  require_m_primary(ideal, "hs_length");
  if (k == 0) throw HypothesisError("hs_length needs k >= 1");
  return *colength(ideal_power(ideal, k));
}

namespace {

long long nth_difference(const std::vector<HSSample>& samples, std::size_t start, std::size_t n) {
  std::vector<long long> v;
  for (std::size_t i = start; i <= start + n; ++i) v.push_back(static_cast<long long>(samples[i].length));
  for (std::size_t order = 0; order < n; ++order) {
    for (std::size_t i = 0; i + 1 < v.size() - order; ++i) v[i] = v[i + 1] - v[i];
  }
  return v.front();
}

// First index i with d[i] == d[i + 1] > 0.
std::optional<std::size_t> stable_value(const std::vector<long long>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] == d[i + 1] && d[i] > 0) return static_cast<std::size_t>(d[i]);
  }
  return std::nullopt;
}

}  // namespace

MultiplicityCertificate DifferencesResult::certificate() const {
  if (!e) throw HypothesisError("the n-th differences never settled; no certificate");
  MultiplicityCertificate c;
  c.e = *e;
  c.route = MultiplicityRoute::kDifferences;
  c.differences = witness;
  return c;
}

DifferencesResult e_by_differences(const Ideal& ideal, unsigned kmax) {
  require_m_primary(ideal, "e_by_differences");
  const std::size_t n = ideal.ring()->size();
  DifferencesResult out;
  Ideal power = ideal;
  for (unsigned k = 1; k <= kmax; ++k) {
    if (k > 1) power = ideal_product(power, ideal);
    out.witness.samples.push_back(HSSample{k, *colength(power)});
    if (out.witness.samples.size() > n) {
      out.witness.differences.push_back(
          nth_difference(out.witness.samples, out.witness.samples.size() - n - 1, n));
      if ((out.e = stable_value(out.witness.differences))) break;
    }
  }
  return out;
}

std::size_t e_parameter(const Ideal& j) {
  if (j.size() != j.ring()->size()) {
    throw HypothesisError("e_parameter: expected " + std::to_string(j.ring()->size()) +
                          " generators, got " + std::to_string(j.size()));
  }
  require_m_primary(j, "e_parameter");
  return *colength(j);
}

std::optional<GenericReduction> search_generic_reduction(const Ideal& ideal,
                                                         const CertifyOptions& options,
                                                         std::vector<std::string>& diagnostics) {
  require_m_primary(ideal, "generic reduction");
  const std::size_t n = ideal.ring()->size();
  const std::size_t m = ideal.size();
  if (m == n) {
    // An n-generated ideal is its own reduction: I^2 = I * I.
    GenericWitness w{options.seed, 0, Matrix::identity(n), 1, *colength(ideal)};
    return GenericReduction{ideal, std::move(w)};
  }
  const CounterRng rng(options.seed);
  struct Candidate {
    Matrix a;
    std::optional<Ideal> j;
    std::size_t colength = 0;
  };
  // colength(J) = e(J) >= e(I) for every parameter ideal J inside I, with
  // equality iff J is a reduction. So only draws of least colength can
  // succeed, and the costly reduction equation is tried on those alone.
  const std::vector<Candidate> candidates = map_indices<Candidate>(
      options.trials,
      [&](std::size_t draw) {
        Candidate c{random_matrix(rng, draw, n, m), std::nullopt, 0};
        Ideal j(ideal.ring(), combine(c.a, ideal.generators()));
        if (j.size() == n && is_m_primary(j)) {
          c.colength = *colength(j);
          c.j = std::move(j);
        }
        return c;
      },
      options.exec);
  std::optional<std::size_t> least;
  for (const auto& c : candidates) {
    if (c.j && (!least || c.colength < *least)) least = c.colength;
  }
  std::vector<std::string> notes(options.trials);
  const std::function<std::optional<GenericReduction>(std::size_t)> attempt =
      [&](std::size_t draw) -> std::optional<GenericReduction> {
    const Candidate& c = candidates[draw];
    if (!c.j) {
      notes[draw] = "draw " + std::to_string(draw) + ": combination is not a system of parameters";
      return std::nullopt;
    }
    if (c.colength > *least) {
      notes[draw] = "draw " + std::to_string(draw) + ": colength " + std::to_string(c.colength) +
                    " exceeds another draw's " + std::to_string(*least) + ", so e(J) > e(I)";
      return std::nullopt;
    }
    // Trials already run side by side; the inner fan-out stays serial.
    const auto r = reduction_exponent(*c.j, ideal, options.rmax, Execution::kSerial);
    if (!r) {
      notes[draw] = "draw " + std::to_string(draw) + ": I^(r+1) = J*I^r failed for every r <= " +
                    std::to_string(options.rmax);
      return std::nullopt;
    }
    return GenericReduction{*c.j, GenericWitness{options.seed, draw, c.a, *r, c.colength}};
  };
  auto found = first_success<GenericReduction>(options.trials, attempt, options.exec);
  const std::size_t tried = found ? found->first : options.trials;
  for (std::size_t d = 0; d < tried; ++d) diagnostics.push_back(notes[d]);
  if (!found) return std::nullopt;
  return std::move(found->second);
}

MultiplicityCertificate e_certified(const Ideal& ideal, const CertifyOptions& options) {
  require_m_primary(ideal, "e_certified");
  std::vector<std::string> diagnostics;
  if (auto red = search_generic_reduction(ideal, options, diagnostics)) {
    MultiplicityCertificate c;
    c.e = red->witness.colength_j;
    c.route = MultiplicityRoute::kGenericReduction;
    c.generic = std::move(red->witness);
    c.diagnostics = std::move(diagnostics);
    return c;
  }
  const unsigned kmax = options.kmax.value_or(static_cast<unsigned>(ideal.ring()->size()) + 6);
  DifferencesResult diff = e_by_differences(ideal, kmax);
  if (!diff.e) {
    diagnostics.push_back("differences did not stabilize up to k = " + std::to_string(kmax));
    throw TrialsExhausted("e_certified: all trials failed and differences did not stabilize",
                          std::move(diagnostics));
  }
  MultiplicityCertificate c = diff.certificate();
  c.diagnostics = std::move(diagnostics);
  return c;
}

bool verify_multiplicity(const MultiplicityCertificate& certificate, const Ideal& ideal) {
  if (!is_m_primary(ideal)) return false;
  const std::size_t n = ideal.ring()->size();
  if (certificate.route == MultiplicityRoute::kGenericReduction) {
    if (!certificate.generic) return false;
    const GenericWitness& w = *certificate.generic;
    if (w.a.rows() != n || w.a.cols() != ideal.size() || w.r == 0) return false;
    const Ideal j(ideal.ring(), combine(w.a, ideal.generators()));
    if (j.size() != n || !is_m_primary(j)) return false;
    if (*colength(j) != w.colength_j || w.colength_j != certificate.e) return false;
    return satisfies_reduction_equation(j, ideal, w.r);
  }
  if (!certificate.differences) return false;
  const DifferencesWitness& w = *certificate.differences;
  Ideal power = ideal;
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    if (w.samples[i].k != i + 1) return false;
    if (i > 0) power = ideal_product(power, ideal);
    if (*colength(power) != w.samples[i].length) return false;
  }
  std::vector<long long> d;
  for (std::size_t s = 0; s + n < w.samples.size(); ++s) d.push_back(nth_difference(w.samples, s, n));
  if (d != w.differences) return false;
  const auto e = stable_value(d);
  return e && *e == certificate.e;
}

}  // namespace locmult
