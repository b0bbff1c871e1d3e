#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locmult/ideal.hpp"
#include "locmult/multiplicity.hpp"

namespace locmult {

enum class ReductionVerdict {
  /// I^(r+1) = J * I^r verified for the recorded r.
  kYesWithR,
  /// e(J) = e(I), both certified, but no r <= rmax verified directly.
  kYesByMultiplicity,
  /// e(J) > e(I), both certified.
  kNoByMultiplicity,
  kInconclusive,
};

std::string to_string(ReductionVerdict verdict);
ReductionVerdict parse_verdict(const std::string& text);

struct ReductionCertificate {
  ReductionVerdict verdict = ReductionVerdict::kInconclusive;
  std::optional<unsigned> r;
  std::optional<MultiplicityCertificate> e_i;
  std::optional<MultiplicityCertificate> e_j;

  bool is_yes() const {
    return verdict == ReductionVerdict::kYesWithR || verdict == ReductionVerdict::kYesByMultiplicity;
  }
};

/// Searches r = 1..rmax. Throws HypothesisError unless J lies in I and I is
/// m-primary. Exhaustion is inconclusive, never "no".
ReductionCertificate is_reduction_direct(const Ideal& j, const Ideal& i, unsigned rmax,
                                         Execution exec = Execution::kParallel);

/// Compares certified multiplicities; also runs the direct test so a yes
/// carries r when one exists within rmax.
ReductionCertificate is_reduction_rees(const Ideal& j, const Ideal& i,
                                       const CertifyOptions& options = {});

struct ClosureWitness {
  bool member = false;
  /// Set when a fast path decided: "in the ideal", "unit" or "weight".
  std::optional<std::string> shortcut;
  /// "weight" shortcut: ord_w(f) < ord_w(g) for every generator g, so f is
  /// outside the closure (v_w is a valuation nonnegative on the local ring).
  std::optional<std::vector<unsigned>> weight;
  /// Member: (I + (f))^(r+1) = I * (I + (f))^r.
  std::optional<unsigned> integral_r;
  /// Non-member: L = A * gens(I + (f)) is n-generated and m-primary with
  /// colength(L) < e(I), and e(I + (f)) <= colength(L). Its r is unused.
  std::optional<GenericWitness> bound;
  std::optional<MultiplicityCertificate> e_i;
  std::optional<MultiplicityCertificate> e_ix;
};

/// The fast paths of closure_member that need no multiplicity: ideal
/// membership, units and (when enabled) a separating monomial valuation.
/// nullopt when none decides.
std::optional<ClosureWitness> closure_shortcut(const Polynomial& f, const Ideal& ideal,
                                               const CertifyOptions& options);

/// Integral-closure membership: f in closure(I) iff e(I) = e(I + (f)).
ClosureWitness closure_member(const Polynomial& f, const Ideal& ideal,
                              const CertifyOptions& options = {});

/// As closure_member with e(I) already certified.
ClosureWitness closure_member(const Polynomial& f, const Ideal& ideal,
                              const MultiplicityCertificate& e_i, const CertifyOptions& options);

struct FoundReduction {
  Ideal j;
  Matrix a;
  ReductionCertificate certificate;
  GenericWitness witness;
};

/// n-generated J = A * generators verified as a reduction. Throws
/// TrialsExhausted with one diagnostic per failed draw.
FoundReduction find_generic_reduction(const Ideal& ideal, const CertifyOptions& options = {});

/// Re-checks a reduction certificate for J inside I.
bool verify_reduction(const ReductionCertificate& certificate, const Ideal& j, const Ideal& i);

/// Re-checks a closure witness for f against I.
bool verify_closure(const ClosureWitness& witness, const Polynomial& f, const Ideal& ideal);

}  // namespace locmult
