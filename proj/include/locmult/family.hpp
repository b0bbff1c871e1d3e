#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locmult/ideal.hpp"
#include "locmult/lojasiewicz.hpp"
#include "locmult/matrix.hpp"
#include "locmult/multiplicity.hpp"
#include "locmult/rational.hpp"
#include "locmult/reduction.hpp"

namespace locmult {

/// {0, 1, -1, 1/2, 2, -3}.
std::vector<Rational> default_samples();

/// A map germ F(x, t) = (F_1..F_m) with one parameter t, sampled at finitely
/// many rational t. Components live over x_1..x_n, t (parameter last).
class FamilySpec {
 public:
  /// Throws HypothesisError unless m >= n, every component vanishes at x = 0
  /// for all t, and the samples are distinct and contain 0. An empty sample
  /// list means default_samples().
  FamilySpec(RingPtr ring, std::string parameter, std::vector<Polynomial> components,
             std::vector<Rational> samples = {});

  /// Parses comma-separated components over variables plus parameter.
  static FamilySpec parse(const std::vector<std::string>& variables, const std::string& parameter,
                          std::string_view components, std::vector<Rational> samples = {});

  const RingPtr& ring() const { return ring_; }
  const RingPtr& full_ring() const { return full_ring_; }
  const std::string& parameter() const { return parameter_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const std::vector<Rational>& samples() const { return samples_; }

  /// F_t component by component, zero components kept.
  std::vector<Polynomial> slice(const Rational& t) const;

 private:
  RingPtr ring_;
  RingPtr full_ring_;
  std::string parameter_;
  std::vector<Polynomial> components_;
  std::vector<Rational> samples_;
};

/// (F_t) with zero components dropped. Throws HypothesisError when every
/// component vanishes at t.
Ideal specialize_family(const FamilySpec& family, const Rational& t);

struct SampleMultiplicity {
  Rational t;
  bool m_primary = false;
  std::optional<MultiplicityCertificate> e;
  std::vector<std::string> diagnostics;
};

struct FamilyMultiplicities {
  std::vector<SampleMultiplicity> samples;
  /// Every slice m-primary with the same certified e.
  bool constant = false;
};

FamilyMultiplicities family_multiplicity(const FamilySpec& family, const CertifyOptions& options = {});

/// One n x m matrix pi with (pi . F_t) a verified reduction of (F_t) at
/// every sample.
struct SimultaneousProjection {
  Matrix pi;
  std::uint64_t draw = 0;
  /// Parallel to the family's samples; every entry is a yes.
  std::vector<ReductionCertificate> certificates;
};

/// Draws one matrix, tests it on all samples (direct test, then the Rees
/// comparison) and redraws on any failure. m == n gives the identity.
/// Throws HypothesisError when a slice is not m-primary and TrialsExhausted
/// naming the sample that defeated each draw.
SimultaneousProjection find_simultaneous_projection(const FamilySpec& family,
                                                    const CertifyOptions& options = {});

/// Replays every per-sample certificate from the stored matrix.
bool verify_projection(const SimultaneousProjection& projection, const FamilySpec& family);

enum class Semicontinuity {
  kHolds,
  kViolated,
  /// Some slice is not m-primary or the multiplicities differ.
  kNotApplicable,
};

std::string to_string(Semicontinuity value);

struct SampleReport {
  Rational t;
  Ideal ideal;
  bool m_primary = false;
  std::optional<MultiplicityCertificate> e;
  std::optional<LojaBracket> loja;
  std::vector<std::string> diagnostics;
};

struct FamilyReport {
  std::vector<SampleReport> samples;
  bool multiplicity_constant = false;
  std::optional<SimultaneousProjection> projection;
  std::vector<std::string> projection_diagnostics;
  Semicontinuity semicontinuity = Semicontinuity::kNotApplicable;
  /// Set on a violation: the generic sample whose bracket lies below.
  std::optional<std::string> violation;
};

/// Per-sample multiplicities and brackets, the simultaneous projection and
/// the semicontinuity flag. Failures are recorded, never thrown.
FamilyReport semicontinuity_report(const FamilySpec& family, unsigned qmax,
                                   const CertifyOptions& options = {});

}  // namespace locmult
