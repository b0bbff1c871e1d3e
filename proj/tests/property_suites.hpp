#pragma once

// Randomized invariant checks shared by the unit tests and the acceptance
// binary. Each suite draws its own corpus from a fixed seed and reports the
// number of cases run plus one line per failed case.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "locmult/lojasiewicz.hpp"
#include "locmult/matrix.hpp"
#include "locmult/multiplicity.hpp"
#include "locmult/newton.hpp"
#include "locmult/reduction.hpp"
#include "test_support.hpp"

namespace locmult::testing {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok(std::size_t minimum = 100) const { return cases >= minimum && failures.empty(); }
};

namespace corpus {

inline RingPtr pick_ring(std::size_t i) { return i % 2 == 0 ? ring_xy() : ring_xyz(); }

inline Ideal random_monomial_case(std::mt19937_64& rng, const RingPtr& ring) {
  return MonomialIdeal::from_ideal(random_monomial_ideal(rng, ring, 5, ring->size() == 2 ? 2 : 3))
      .to_ideal();
}

// Every tenth case is a non-monomial ideal in two variables so the Rees
// route is exercised alongside the Newton route.
inline Ideal loja_case(std::mt19937_64& rng, std::size_t i) {
  if (i % 10 == 9) return random_m_primary_ideal(rng, ring_xy(), 3, 0);
  return random_monomial_case(rng, pick_ring(i));
}

inline std::string describe(const Ideal& I) { return I.to_string(); }

}  // namespace corpus

inline constexpr unsigned kSuiteQmax = 4;

// nu(a + b) <= nu(a) + nu(b).
inline SuiteResult nu_subadditivity_suite(std::uint64_t seed, std::size_t cases = 100) {
  SuiteResult out{"nu subadditivity"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Ideal I = corpus::loja_case(rng, i);
    const unsigned qmax = I.is_monomial() ? kSuiteQmax : 3;
    const LojaBracket b = loja_bracket(I, qmax);
    ++out.cases;
    for (unsigned a = 1; a <= qmax; ++a) {
      for (unsigned c = 1; a + c <= qmax; ++c) {
        const unsigned lhs = b.table[a + c - 1].nu;
        if (lhs > b.table[a - 1].nu + b.table[c - 1].nu) {
          std::ostringstream msg;
          msg << corpus::describe(I) << ": nu(" << a + c << ") = " << lhs << " > nu(" << a
              << ") + nu(" << c << ")";
          out.failures.push_back(msg.str());
        }
      }
    }
  }
  return out;
}

// ((nu(q) - 1)/q, nu(q)/q] all meet, and the reported bracket is their
// intersection.
inline SuiteResult bracket_intersection_suite(std::uint64_t seed, std::size_t cases = 100) {
  SuiteResult out{"per-q brackets intersect"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Ideal I = corpus::loja_case(rng, i);
    const unsigned qmax = I.is_monomial() ? kSuiteQmax : 3;
    const LojaBracket b = loja_bracket(I, qmax);
    ++out.cases;
    Rational lower = 0;
    Rational upper = b.table.front().nu;
    for (const auto& e : b.table) {
      lower = std::max<Rational>(lower, Rational(e.nu - 1) / e.q);
      upper = std::min<Rational>(upper, Rational(e.nu) / e.q);
    }
    bool good = lower < upper && lower == b.lower && upper == b.upper;
    if (b.exact) good = good && b.lower < *b.exact && *b.exact <= b.upper;
    if (!good) {
      out.failures.push_back(corpus::describe(I) + ": bracket (" + to_string(b.lower) + ", " +
                             to_string(b.upper) + "]");
    }
  }
  return out;
}

// e(I^2) = 4 e(I) for n = 2.
inline SuiteResult square_multiplicity_suite(std::uint64_t seed, std::size_t cases = 100) {
  SuiteResult out{"e(I^2) = 4 e(I) in two variables"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Ideal I = i % 2 == 0 ? corpus::random_monomial_case(rng, ring_xy())
                               : random_m_primary_ideal(rng, ring_xy(), 3, 1);
    const std::size_t e1 = e_certified(I).e;
    const std::size_t e2 = e_certified(ideal_power(I, 2)).e;
    ++out.cases;
    if (e2 != 4 * e1) {
      out.failures.push_back(corpus::describe(I) + ": e = " + std::to_string(e1) +
                             ", e(I^2) = " + std::to_string(e2));
    }
  }
  return out;
}

// e(phi(I)) = e(I) for a local coordinate change phi: an invertible linear
// part plus quadratic terms.
inline SuiteResult coordinate_change_suite(std::uint64_t seed, std::size_t cases = 100) {
  SuiteResult out{"coordinate-change invariance of e"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (std::size_t i = 0; i < cases; ++i) {
    const RingPtr ring = i % 4 == 3 ? ring_xyz() : ring_xy();
    const std::size_t n = ring->size();
    const Ideal I = i % 2 == 0 ? corpus::random_monomial_case(rng, ring)
                               : random_m_primary_ideal(rng, ring, 3, 0);
    Matrix a(n, n);
    do {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = entry(rng);
      }
    } while (determinant(a) == 0);
    std::vector<Polynomial> images;
    for (std::size_t r = 0; r < n; ++r) {
      Polynomial y(ring);
      for (std::size_t c = 0; c < n; ++c) {
        y += Polynomial::variable(ring, c).scaled(a(r, c));
      }
      if (i % 3 == 0) y += Polynomial::variable(ring, (r + 1) % n).pow(2);
      images.push_back(y);
    }
    const Ideal J = substitute(I, images);
    const std::size_t e_i = e_certified(I).e;
    const std::size_t e_j = e_certified(J).e;
    ++out.cases;
    if (e_i != e_j) {
      out.failures.push_back(corpus::describe(I) + ": e = " + std::to_string(e_i) +
                             " but " + std::to_string(e_j) + " after the change");
    }
  }
  return out;
}

// A verified reduction J of I has J^2 a verified reduction of I^2.
inline SuiteResult reduction_powers_suite(std::uint64_t seed, std::size_t cases = 100) {
  SuiteResult out{"powers of reductions"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Ideal I = i % 2 == 0 ? corpus::random_monomial_case(rng, ring_xy())
                               : random_m_primary_ideal(rng, ring_xy(), 3, 1);
    CertifyOptions options;
    options.seed = i;
    const FoundReduction found = find_generic_reduction(I, options);
    const Ideal j2 = ideal_power(found.j, 2);
    const Ideal i2 = ideal_power(I, 2);
    const ReductionCertificate c = is_reduction_rees(j2, i2, options);
    ++out.cases;
    if (!c.is_yes() || !verify_reduction(c, j2, i2)) {
      out.failures.push_back(corpus::describe(I) + ": J^2 not certified, verdict " +
                             to_string(c.verdict));
    }
  }
  return out;
}

// closure(closure(I)) = closure(I), I inside closure(I).
inline SuiteResult closure_idempotence_suite(std::uint64_t seed, std::size_t cases = 100) {
  SuiteResult out{"monomial closure idempotence"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const RingPtr ring = corpus::pick_ring(i);
    const MonomialIdeal M = MonomialIdeal::from_ideal(corpus::random_monomial_case(rng, ring));
    const MonomialIdeal c1 = monomial_closure(M);
    const MonomialIdeal c2 = monomial_closure(c1);
    const bool contained = std::all_of(M.generators().begin(), M.generators().end(),
                                       [&](const Monomial& g) { return c1.contains(g); });
    ++out.cases;
    if (!(c1 == c2) || !contained) {
      out.failures.push_back(M.to_string() + ": closure " + c1.to_string() + ", twice " +
                             c2.to_string());
    }
  }
  return out;
}

inline SuiteResult monomial_multiplicity_suite(std::uint64_t seed, std::size_t cases = 100) {
  SuiteResult out{"monomial multiplicity = certified e"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const RingPtr ring = corpus::pick_ring(i);
    const MonomialIdeal M = MonomialIdeal::from_ideal(corpus::random_monomial_case(rng, ring));
    const std::size_t covolume = monomial_multiplicity(M);
    const std::size_t certified = e_certified(M.to_ideal()).e;
    ++out.cases;
    if (covolume != certified) {
      out.failures.push_back(M.to_string() + ": covolume " + std::to_string(covolume) +
                             ", certified " + std::to_string(certified));
    }
  }
  return out;
}

inline std::vector<SuiteResult> run_property_suites(std::uint64_t seed) {
  return {nu_subadditivity_suite(seed),     bracket_intersection_suite(seed + 1),
          square_multiplicity_suite(seed + 2), coordinate_change_suite(seed + 3),
          reduction_powers_suite(seed + 4),  closure_idempotence_suite(seed + 5),
          monomial_multiplicity_suite(seed + 6)};
}

}  // namespace locmult::testing
