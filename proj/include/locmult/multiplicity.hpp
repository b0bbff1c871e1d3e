#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locmult/ideal.hpp"
#include "locmult/kernels.hpp"
#include "locmult/matrix.hpp"

namespace locmult {

/// Knobs shared by every randomized, certificate-producing operation.
struct CertifyOptions {
  std::uint64_t seed = 0;
  unsigned trials = 8;
  unsigned rmax = 6;
  /// Last power used by the differences route; n + 6 when unset.
  std::optional<unsigned> kmax;
  Execution exec = Execution::kParallel;
  /// Closure tests try cheap certificates (monomial valuations, colength
  /// bounds, the direct reduction test) before certifying e(I + (f)).
  bool closure_shortcuts = true;
};

struct HSSample {
  unsigned k = 0;
  std::size_t length = 0;

  friend bool operator==(const HSSample&, const HSSample&) = default;
};

struct DifferencesWitness {
  std::vector<HSSample> samples;
  /// n-th differences of the lengths, one per window of n + 1 samples.
  std::vector<long long> differences;
};

/// The random draw that produced J = A * generators and its verification.
struct GenericWitness {
  std::uint64_t seed = 0;
  std::uint64_t draw = 0;
  Matrix a;
  unsigned r = 0;
  std::size_t colength_j = 0;
};

enum class MultiplicityRoute { kDifferences, kGenericReduction };

struct MultiplicityCertificate {
  std::size_t e = 0;
  MultiplicityRoute route = MultiplicityRoute::kGenericReduction;
  std::optional<DifferencesWitness> differences;
  std::optional<GenericWitness> generic;
  /// One line per failed draw.
  std::vector<std::string> diagnostics;
};

/// colength(I^k).
std::size_t hs_length(const Ideal& ideal, unsigned k);

struct DifferencesResult {
  /// Unset when the last n-th differences never agreed (an estimate only).
  std::optional<std::size_t> e;
  DifferencesWitness witness;

  /// Throws HypothesisError when e is unset.
  MultiplicityCertificate certificate() const;
};

/// Samples k = 1, 2, ... up to kmax and stops once two consecutive n-th
/// differences agree.
DifferencesResult e_by_differences(const Ideal& ideal, unsigned kmax);

/// colength(J) for an n-generated m-primary J.
std::size_t e_parameter(const Ideal& j);

/// Generic reduction route with fallback to differences. Throws
/// TrialsExhausted when both fail.
MultiplicityCertificate e_certified(const Ideal& ideal, const CertifyOptions& options = {});

/// A verified generic reduction of I: J = A * generators with I^(r+1) = J * I^r.
struct GenericReduction {
  Ideal j;
  GenericWitness witness;
};

/// Draws `trials` n x m matrices and returns the lowest draw that gives a
/// verified reduction. Only draws of least colength are verified, since any
/// other has e(J) > e(I). n-generated ideals return themselves. nullopt when
/// every draw fails, with one line per draw appended to `diagnostics`.
std::optional<GenericReduction> search_generic_reduction(const Ideal& ideal,
                                                         const CertifyOptions& options,
                                                         std::vector<std::string>& diagnostics);

/// Re-checks a certificate against the ideal it claims to describe.
bool verify_multiplicity(const MultiplicityCertificate& certificate, const Ideal& ideal);

/// Throws HypothesisError unless I is m-primary and proper.
void require_m_primary(const Ideal& ideal, const char* what);

}  // namespace locmult
