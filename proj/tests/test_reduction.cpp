#include <gtest/gtest.h>

#include <random>

#include "locmult/errors.hpp"
#include "locmult/multiplicity.hpp"
#include "locmult/newton.hpp"
#include "locmult/reduction.hpp"
#include "test_support.hpp"

using namespace locmult;
using namespace locmult::testing;

namespace {

CertifyOptions without_shortcuts() {
  CertifyOptions o;
  o.closure_shortcuts = false;
  return o;
}

unsigned min_order(const Ideal& I) {
  unsigned best = ~0u;
  for (const auto& g : I.generators()) best = std::min(best, *g.ord());
  return best;
}

}  // namespace

TEST(DirectReduction, Examples) {
  const Ideal I = ideal("x^2, x*y, y^2");
  const auto yes = is_reduction_direct(ideal("x^2, y^2"), I, 6);
  EXPECT_EQ(yes.verdict, ReductionVerdict::kYesWithR);
  EXPECT_EQ(yes.r, 1u);

  const auto self = is_reduction_direct(I, I, 6);
  EXPECT_EQ(self.verdict, ReductionVerdict::kYesWithR);
  EXPECT_EQ(self.r, 1u);

  for (unsigned rmax : {1u, 3u, 6u}) {
    const auto no = is_reduction_direct(ideal("x^3, y^3"), I, rmax);
    EXPECT_EQ(no.verdict, ReductionVerdict::kInconclusive);
    EXPECT_FALSE(no.r);
  }
}

TEST(DirectReduction, NeedsLargerExponent) {
  // The reported r is the least one.
  const Ideal I = ideal("x^3, x*y^2, y^3");
  const Ideal J = ideal("x^3, y^3");
  const auto c = is_reduction_direct(J, I, 6);
  ASSERT_EQ(c.verdict, ReductionVerdict::kYesWithR);
  EXPECT_TRUE(satisfies_reduction_equation(J, I, *c.r));
  if (*c.r > 1) EXPECT_FALSE(satisfies_reduction_equation(J, I, *c.r - 1));
}

TEST(DirectReduction, Preconditions) {
  EXPECT_THROW(is_reduction_direct(ideal("x, y^2"), ideal("x^2, y^2"), 3), HypothesisError);
  EXPECT_THROW(is_reduction_direct(ideal("x^2"), ideal("x^2, x*y"), 3), HypothesisError);
}

TEST(ReesReduction, Examples) {
  const Ideal I = ideal("x^2, x*y, y^2");
  const auto yes = is_reduction_rees(ideal("x^2, y^2"), I);
  EXPECT_EQ(yes.verdict, ReductionVerdict::kYesWithR);
  EXPECT_EQ(yes.r, 1u);
  EXPECT_EQ(yes.e_i->e, 4u);
  EXPECT_EQ(yes.e_j->e, 4u);

  const auto no = is_reduction_rees(ideal("x^3, y^3"), I);
  EXPECT_EQ(no.verdict, ReductionVerdict::kNoByMultiplicity);
  EXPECT_EQ(no.e_j->e, 9u);
  EXPECT_EQ(no.e_i->e, 4u);

  const auto cusp = is_reduction_rees(ideal("x^2, y^3"), ideal("x^2, y^3, x*y^2"));
  EXPECT_TRUE(cusp.is_yes());
  EXPECT_EQ(cusp.e_i->e, 6u);
  EXPECT_EQ(cusp.e_j->e, 6u);
}

TEST(ReesReduction, YesWithoutExponentWithinCap) {
  // x^6 y^2 = (x^3 y)^2 is in I^2 but not in J*I, so r = 1 fails and the
  // verdict rests on e(J) = e(I) = 16 alone.
  const Ideal I = ideal("x^4, x^3*y, x*y^3, y^4");
  const Ideal J = ideal("x^4, y^4");
  CertifyOptions options;
  options.rmax = 1;
  const auto direct = is_reduction_direct(J, I, 1);
  const auto rees = is_reduction_rees(J, I, options);
  EXPECT_EQ(direct.verdict, ReductionVerdict::kInconclusive);
  EXPECT_EQ(rees.verdict, ReductionVerdict::kYesByMultiplicity);
  EXPECT_FALSE(rees.r);
  EXPECT_EQ(rees.e_i->e, 16u);
  EXPECT_TRUE(verify_reduction(rees, J, I));
}

TEST(ReesReduction, ConsistentWithDirectOnMonomialCorpus) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const RingPtr ring = i % 2 ? ring_xyz() : ring_xy();
    const auto M = MonomialIdeal::from_ideal(random_monomial_ideal(rng, ring, 5, 2));
    const Ideal I = M.to_ideal();
    // J: the pure powers, always inside I and m-primary.
    std::vector<Polynomial> pure;
    for (const auto& g : M.generators()) {
      if (g.pure_power_variable() >= 0) pure.push_back(Polynomial::monomial(ring, g));
    }
    const Ideal J(ring, pure);
    const auto direct = is_reduction_direct(J, I, 4);
    const auto rees = is_reduction_rees(J, I);
    if (direct.verdict == ReductionVerdict::kYesWithR) EXPECT_TRUE(rees.is_yes()) << I.to_string();
    if (rees.verdict == ReductionVerdict::kNoByMultiplicity) {
      EXPECT_EQ(direct.verdict, ReductionVerdict::kInconclusive) << I.to_string();
    }
    // Rees against the Newton oracle: J is a reduction iff closures agree.
    const bool same_closure = monomial_closure(MonomialIdeal::from_ideal(J)) == monomial_closure(M);
    EXPECT_EQ(rees.is_yes(), same_closure) << I.to_string();
  }
}

TEST(Verify, Reduction) {
  const Ideal I = ideal("x^2, x*y, y^2");
  const Ideal J = ideal("x^2, y^2");
  const auto good = is_reduction_rees(J, I);
  EXPECT_TRUE(verify_reduction(good, J, I));

  auto wrong_r = good;
  wrong_r.r = 0;
  EXPECT_FALSE(verify_reduction(wrong_r, J, I));

  auto flipped = good;
  flipped.verdict = ReductionVerdict::kNoByMultiplicity;
  EXPECT_FALSE(verify_reduction(flipped, J, I));

  const Ideal K = ideal("x^3, y^3");
  const auto no = is_reduction_rees(K, I);
  EXPECT_TRUE(verify_reduction(no, K, I));
  auto claim_yes = no;
  claim_yes.verdict = ReductionVerdict::kYesByMultiplicity;
  EXPECT_FALSE(verify_reduction(claim_yes, K, I));
  EXPECT_FALSE(verify_reduction(good, K, I));
}

TEST(Closure, Examples) {
  const Ideal I = ideal("x^2, y^2");
  for (const CertifyOptions& o : {CertifyOptions{}, without_shortcuts()}) {
    const auto xy = closure_member(poly("x*y"), I, o);
    EXPECT_TRUE(xy.member);
    const auto x = closure_member(poly("x"), I, o);
    EXPECT_FALSE(x.member);
    const auto x2 = closure_member(poly("x^2"), I, o);
    EXPECT_TRUE(x2.member);
    EXPECT_EQ(x2.shortcut, "in the ideal");
    const auto unit = closure_member(poly("1 + x"), I, o);
    EXPECT_FALSE(unit.member);
    EXPECT_EQ(unit.shortcut, "unit");
  }
  const auto rees = closure_member(poly("x*y"), I, without_shortcuts());
  ASSERT_TRUE(rees.e_i && rees.e_ix);
  EXPECT_EQ(rees.e_i->e, 4u);
  EXPECT_EQ(rees.e_ix->e, 4u);
  const auto out = closure_member(poly("x"), I, without_shortcuts());
  ASSERT_TRUE(out.e_ix);
  EXPECT_EQ(out.e_ix->e, 2u);
}

TEST(Closure, MemberIffMultiplicitiesAgree) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 20; ++i) {
    const Ideal I = random_m_primary_ideal(rng, ring_xy(), 3, 1);
    const Polynomial f = random_polynomial(rng, ring_xy(), 3, 3, false);
    if (f.is_zero()) continue;
    const auto w = closure_member(f, I, without_shortcuts());
    if (w.shortcut) continue;
    ASSERT_TRUE(w.e_i && w.e_ix);
    EXPECT_EQ(w.member, w.e_i->e == w.e_ix->e) << I.to_string() << " " << f.to_string();
  }
}

TEST(Closure, ShortcutsAgreeWithTheMultiplicityRoute) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    const Ideal I = i % 2 ? random_monomial_ideal(rng, ring_xy(), 4, 2)
                          : random_m_primary_ideal(rng, ring_xy(), 3, 1);
    const Polynomial f = random_polynomial(rng, ring_xy(), 4, 3, false);
    if (f.is_zero()) continue;
    const auto fast = closure_member(f, I);
    const auto slow = closure_member(f, I, without_shortcuts());
    EXPECT_EQ(fast.member, slow.member) << I.to_string() << " " << f.to_string();
    EXPECT_TRUE(verify_closure(fast, f, I));
    EXPECT_TRUE(verify_closure(slow, f, I));
  }
}

TEST(Closure, IntegralEquationOracle) {
  // f^k in I^k is the integral equation z^k - f^k; ord(f) < ord(I) rules
  // membership out because the order is a valuation.
  std::mt19937_64 rng(43);
  int decided = 0;
  for (int i = 0; i < 40; ++i) {
    const Ideal I = random_m_primary_ideal(rng, ring_xy(), 3, 1);
    const Polynomial f = random_polynomial(rng, ring_xy(), 4, 2, false);
    if (f.is_zero()) continue;
    std::optional<bool> expected;
    for (unsigned k = 1; k <= 3 && !expected; ++k) {
      if (is_member(f.pow(k), ideal_power(I, k))) expected = true;
    }
    if (!expected && *f.ord() < min_order(I)) expected = false;
    if (!expected) continue;
    ++decided;
    EXPECT_EQ(closure_member(f, I).member, *expected) << I.to_string() << " " << f.to_string();
  }
  EXPECT_GT(decided, 10);
}

TEST(Closure, MonotoneInTheIdeal) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 20; ++i) {
    const Ideal I = random_m_primary_ideal(rng, ring_xy(), 3, 0);
    const Polynomial g = random_polynomial(rng, ring_xy(), 2, 2, false);
    std::vector<Polynomial> extra{g};
    const Ideal bigger = ideal_sum(I, extra);
    if (!is_m_primary(bigger) || colength(bigger) == std::size_t{0}) continue;
    const Polynomial f = random_polynomial(rng, ring_xy(), 3, 2, false);
    if (f.is_zero()) continue;
    if (closure_member(f, I).member) {
      EXPECT_TRUE(closure_member(f, bigger).member) << I.to_string() << " " << f.to_string();
    }
  }
}

TEST(Closure, AgreesWithNewtonOracleOnMonomials) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 30; ++i) {
    const RingPtr ring = i % 2 ? ring_xyz() : ring_xy();
    const auto M = MonomialIdeal::from_ideal(random_monomial_ideal(rng, ring, 5, 2));
    const auto P = newton_polyhedron(M);
    for (int k = 0; k < 3; ++k) {
      Monomial m(ring->size());
      for (std::size_t v = 0; v < ring->size(); ++v) m.set(v, static_cast<unsigned>(rng() % 4));
      const auto w = closure_member(Polynomial::monomial(ring, m), M.to_ideal(), without_shortcuts());
      EXPECT_EQ(w.member, P.contains(m)) << M.to_string();
    }
  }
}

TEST(Closure, NonPrimaryIdealIsRejected) {
  EXPECT_THROW(closure_member(poly("x"), ideal("x^2, x*y")), HypothesisError);
}

TEST(Verify, ClosureTampering) {
  const Ideal I = ideal("x^2, y^2");
  const auto member = closure_member(poly("x*y"), I, without_shortcuts());
  EXPECT_TRUE(verify_closure(member, poly("x*y"), I));
  EXPECT_FALSE(verify_closure(member, poly("x"), I));
  auto flipped = member;
  flipped.member = false;
  EXPECT_FALSE(verify_closure(flipped, poly("x*y"), I));

  const auto weight = closure_member(poly("x"), I);
  ASSERT_TRUE(weight.weight);
  EXPECT_TRUE(verify_closure(weight, poly("x"), I));
  auto bad_weight = weight;
  bad_weight.weight = std::vector<unsigned>{0, 0};
  EXPECT_FALSE(verify_closure(bad_weight, poly("x"), I));
  EXPECT_FALSE(verify_closure(weight, poly("x*y"), I));

  auto lie = closure_member(poly("x^2"), I);
  lie.member = false;
  EXPECT_FALSE(verify_closure(lie, poly("x^2"), I));
}

TEST(GenericReduction, Examples) {
  const Ideal square = ideal("x^2, x*y, y^2");
  const auto found = find_generic_reduction(square);
  EXPECT_EQ(found.j.size(), 2u);
  EXPECT_EQ(e_parameter(found.j), 4u);
  EXPECT_TRUE(found.certificate.is_yes());
  EXPECT_TRUE(verify_reduction(found.certificate, found.j, square));
  EXPECT_EQ(Ideal(ring_xy(), combine(found.a, square.generators())).to_string(), found.j.to_string());

  const Ideal cusp = ideal("x^2, y^3");
  const auto same = find_generic_reduction(cusp);
  EXPECT_EQ(same.a, Matrix::identity(2));
  EXPECT_EQ(same.certificate.r, 1u);

  const auto six = find_generic_reduction(ideal("x^2, y^3, x*y^2"));
  EXPECT_EQ(e_parameter(six.j), 6u);
}

TEST(GenericReduction, ParameterColengthIsTheMultiplicity) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 20; ++i) {
    const RingPtr ring = i % 4 == 3 ? ring_xyz() : ring_xy();
    const Ideal I = i % 2 ? random_monomial_ideal(rng, ring, 4, 2)
                          : random_m_primary_ideal(rng, ring, 3, 1);
    CertifyOptions options;
    options.seed = static_cast<std::uint64_t>(i);
    const auto found = find_generic_reduction(I, options);
    EXPECT_EQ(e_parameter(found.j), e_certified(I).e) << I.to_string();
    EXPECT_TRUE(verify_reduction(found.certificate, found.j, I));
  }
}

TEST(GenericReduction, DeterministicPerSeed) {
  const Ideal I = ideal("x^3, x^2*y, x*y^2 + y^4, y^3");
  CertifyOptions a;
  a.seed = 9;
  const auto r1 = find_generic_reduction(I, a);
  const auto r2 = find_generic_reduction(I, a);
  EXPECT_EQ(r1.a, r2.a);
  EXPECT_EQ(r1.witness.draw, r2.witness.draw);
  CertifyOptions serial = a;
  serial.exec = Execution::kSerial;
  EXPECT_EQ(find_generic_reduction(I, serial).a, r1.a);
}

TEST(GenericReduction, ExhaustionAndPreconditions) {
  CertifyOptions options;
  options.trials = 0;
  EXPECT_THROW(find_generic_reduction(ideal("x^2, x*y, y^2"), options), TrialsExhausted);
  EXPECT_THROW(find_generic_reduction(ideal("x^2, x*y")), HypothesisError);
}
