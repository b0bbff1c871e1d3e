#include "locmult/family.hpp"

#include <algorithm>

#include "locmult/errors.hpp"
#include "locmult/parser.hpp"
#include "locmult/random.hpp"

namespace locmult {

std::vector<Rational> default_samples() {
  return {make_rational(0), make_rational(1), make_rational(-1), make_rational(1, 2), make_rational(2),
          make_rational(-3)};
}

namespace {

RingPtr with_parameter(const RingPtr& ring, const std::string& parameter) {
  if (ring->index_of(parameter)) throw HypothesisError("parameter '" + parameter + "' is also a variable");
  std::vector<std::string> names = ring->variables();
  names.push_back(parameter);
  return make_ring(std::move(names));
}

std::string describe(const Rational& t) { return "t = " + to_string(t); }

}  // namespace

FamilySpec::FamilySpec(RingPtr ring, std::string parameter, std::vector<Polynomial> components,
                       std::vector<Rational> samples)
    : ring_(std::move(ring)),
      full_ring_(with_parameter(ring_, parameter)),
      parameter_(std::move(parameter)),
      samples_(samples.empty() ? default_samples() : std::move(samples)) {
  const std::size_t n = ring_->size();
  for (auto& c : components) {
    Polynomial lifted = same_ring(c.ring(), full_ring_) ? std::move(c) : embed(c, full_ring_);
    for (const auto& term : lifted.terms()) {
      unsigned xdeg = 0;
      for (std::size_t i = 0; i < n; ++i) xdeg += term.monomial[i];
      if (xdeg == 0) throw HypothesisError("component " + lifted.to_string() + " does not vanish at x = 0");
    }
    components_.push_back(std::move(lifted));
  }
  if (components_.size() < n) throw HypothesisError("a family needs at least n components");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (samples_[i] == samples_[j]) throw HypothesisError("repeated sample " + to_string(samples_[i]));
    }
  }
  if (std::find(samples_.begin(), samples_.end(), Rational(0)) == samples_.end()) {
    throw HypothesisError("the samples must contain 0");
  }
}

FamilySpec FamilySpec::parse(const std::vector<std::string>& variables, const std::string& parameter,
                             std::string_view components, std::vector<Rational> samples) {
  RingPtr ring = make_ring(variables);
  RingPtr full = with_parameter(ring, parameter);
  return FamilySpec(std::move(ring), parameter, parse_polynomial_list(components, full), std::move(samples));
}

std::vector<Polynomial> FamilySpec::slice(const Rational& t) const {
  std::vector<Polynomial> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(specialize_parameter(c, ring_->size(), t, ring_));
  return out;
}

Ideal specialize_family(const FamilySpec& family, const Rational& t) {
  Ideal ideal(family.ring(), family.slice(t));
  if (ideal.is_zero()) throw HypothesisError("every component vanishes at " + describe(t));
  return ideal;
}

namespace {

SampleMultiplicity sample_multiplicity(const FamilySpec& family, const Rational& t,
                                       const CertifyOptions& options) {
  SampleMultiplicity s;
  s.t = t;
  try {
    const Ideal ideal = specialize_family(family, t);
    s.m_primary = is_m_primary(ideal);
    if (!s.m_primary) {
      s.diagnostics.push_back(describe(t) + ": slice is not m-primary");
      return s;
    }
    s.e = e_certified(ideal, options);
  } catch (const Error& e) {
    s.diagnostics.push_back(describe(t) + ": " + e.what());
  }
  return s;
}

bool all_equal_e(const std::vector<std::optional<MultiplicityCertificate>>& es) {
  if (es.empty()) return false;
  for (const auto& e : es) {
    if (!e || e->e != es.front()->e) return false;
  }
  return true;
}

}  // namespace

FamilyMultiplicities family_multiplicity(const FamilySpec& family, const CertifyOptions& options) {
  const auto& samples = family.samples();
  FamilyMultiplicities out;
  out.samples = map_indices<SampleMultiplicity>(
      samples.size(), [&](std::size_t i) { return sample_multiplicity(family, samples[i], options); },
      options.exec);
  std::vector<std::optional<MultiplicityCertificate>> es;
  for (const auto& s : out.samples) es.push_back(s.e);
  out.constant = all_equal_e(es);
  return out;
}

namespace {

// Reduction certificate for (pi . F_t) inside (F_t), or the reason it fails.
std::optional<ReductionCertificate> test_sample(const Matrix& pi, const FamilySpec& family, const Rational& t,
                                                const CertifyOptions& options, std::string& reason) {
  const Ideal ideal = specialize_family(family, t);
  const Ideal j(family.ring(), combine(pi, family.slice(t)));
  if (j.size() != family.ring()->size() || !is_m_primary(j)) {
    reason = "projection is not a system of parameters";
    return std::nullopt;
  }
  ReductionCertificate c = is_reduction_direct(j, ideal, options.rmax, Execution::kSerial);
  if (!c.is_yes()) c = is_reduction_rees(j, ideal, options);
  if (!c.is_yes()) {
    reason = "not a reduction (" + to_string(c.verdict) + ")";
    return std::nullopt;
  }
  return c;
}

}  // namespace

SimultaneousProjection find_simultaneous_projection(const FamilySpec& family, const CertifyOptions& options) {
  const auto& samples = family.samples();
  for (const auto& t : samples) {
    if (!is_m_primary(specialize_family(family, t))) {
      throw HypothesisError("slice at " + describe(t) + " is not m-primary");
    }
  }
  const std::size_t n = family.ring()->size();
  const std::size_t m = family.components().size();
  SimultaneousProjection out;
  if (m == n) {
    // Nothing to project: each slice is its own reduction.
    out.pi = Matrix::identity(n);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      ReductionCertificate c;
      c.verdict = ReductionVerdict::kYesWithR;
      c.r = 1;
      out.certificates.push_back(c);
    }
    return out;
  }
  const CounterRng rng(options.seed);
  std::vector<std::string> diagnostics;
  for (std::uint64_t draw = 0; draw < options.trials; ++draw) {
    Matrix pi = random_matrix(rng, draw, n, m);
    std::vector<std::optional<ReductionCertificate>> certs(samples.size());
    std::vector<std::string> reasons(samples.size());
    const bool all = all_of_indices(samples.size(), [&](std::size_t i) {
      certs[i] = test_sample(pi, family, samples[i], options, reasons[i]);
      return certs[i].has_value();
    }, options.exec);
    if (all) {
      out.pi = std::move(pi);
      out.draw = draw;
      for (auto& c : certs) out.certificates.push_back(std::move(*c));
      return out;
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (!reasons[i].empty()) {
        diagnostics.push_back("draw " + std::to_string(draw) + " defeated at " + describe(samples[i]) + ": " +
                              reasons[i]);
        break;
      }
    }
  }
  throw TrialsExhausted("find_simultaneous_projection: no matrix worked at every sample in " +
                            std::to_string(options.trials) + " trials",
                        std::move(diagnostics));
}

bool verify_projection(const SimultaneousProjection& projection, const FamilySpec& family) {
  const auto& samples = family.samples();
  const std::size_t n = family.ring()->size();
  if (projection.pi.rows() != n || projection.pi.cols() != family.components().size()) return false;
  if (projection.certificates.size() != samples.size()) return false;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ReductionCertificate& c = projection.certificates[i];
    if (!c.is_yes()) return false;
    const Ideal ideal = specialize_family(family, samples[i]);
    const Ideal j(family.ring(), combine(projection.pi, family.slice(samples[i])));
    if (j.size() != n || !verify_reduction(c, j, ideal)) return false;
  }
  return true;
}

std::string to_string(Semicontinuity value) {
  switch (value) {
    case Semicontinuity::kHolds:
      return "no violation";
    case Semicontinuity::kViolated:
      return "violated";
    case Semicontinuity::kNotApplicable:
      return "not applicable";
  }
  return "not applicable";
}

FamilyReport semicontinuity_report(const FamilySpec& family, unsigned qmax, const CertifyOptions& options) {
  const auto& samples = family.samples();
  FamilyReport report;
  report.samples = map_indices<SampleReport>(samples.size(), [&](std::size_t i) {
    const Rational& t = samples[i];
    SampleMultiplicity sm = sample_multiplicity(family, t, options);
    SampleReport s{t, Ideal(family.ring(), family.slice(t)), sm.m_primary, std::move(sm.e), std::nullopt,
                   std::move(sm.diagnostics)};
    if (s.m_primary) {
      try {
        s.loja = loja_bracket(s.ideal, qmax, options);
      } catch (const Error& e) {
        s.diagnostics.push_back(describe(t) + ": loja: " + e.what());
      }
    }
    return s;
  }, options.exec);

  std::vector<std::optional<MultiplicityCertificate>> es;
  for (const auto& s : report.samples) es.push_back(s.e);
  report.multiplicity_constant = all_equal_e(es);

  const bool hypothesis = std::all_of(report.samples.begin(), report.samples.end(),
                                      [](const SampleReport& s) { return s.m_primary; });
  if (hypothesis) {
    try {
      report.projection = find_simultaneous_projection(family, options);
    } catch (const TrialsExhausted& e) {
      report.projection_diagnostics = e.diagnostics();
      report.projection_diagnostics.push_back(e.what());
    } catch (const Error& e) {
      report.projection_diagnostics.push_back(e.what());
    }
  } else {
    report.projection_diagnostics.push_back("projection search skipped: some slice is not m-primary");
  }

  if (!report.multiplicity_constant) return report;
  const auto special = std::find_if(report.samples.begin(), report.samples.end(),
                                    [](const SampleReport& s) { return s.t == 0; });
  if (special == report.samples.end() || !special->loja) return report;
  report.semicontinuity = Semicontinuity::kHolds;
  for (const auto& s : report.samples) {
    if (s.t == 0 || !s.loja) continue;
    if (s.loja->upper < special->loja->lower) {
      report.semicontinuity = Semicontinuity::kViolated;
      report.violation = describe(s.t) + ": upper " + to_string(s.loja->upper) + " < lower " +
                         to_string(special->loja->lower) + " at t = 0";
      break;
    }
  }
  return report;
}

}  // namespace locmult
