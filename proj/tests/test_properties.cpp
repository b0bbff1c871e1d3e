#include <gtest/gtest.h>

#include "property_suites.hpp"

using namespace locmult::testing;

namespace {

void expect_clean(const SuiteResult& r) {
  EXPECT_GE(r.cases, 100u) << r.name;
  for (const auto& f : r.failures) ADD_FAILURE() << r.name << ": " << f;
}

constexpr std::uint64_t kSeed = 2024;

}  // namespace

TEST(Properties, NuSubadditivity) { expect_clean(nu_subadditivity_suite(kSeed)); }
TEST(Properties, PerQBracketsIntersect) { expect_clean(bracket_intersection_suite(kSeed + 1)); }
TEST(Properties, SquareHasFourTimesTheMultiplicity) { expect_clean(square_multiplicity_suite(kSeed + 2)); }
TEST(Properties, MultiplicityIsCoordinateFree) { expect_clean(coordinate_change_suite(kSeed + 3)); }
TEST(Properties, PowersOfReductions) { expect_clean(reduction_powers_suite(kSeed + 4)); }
TEST(Properties, MonomialClosureIsIdempotent) { expect_clean(closure_idempotence_suite(kSeed + 5)); }
TEST(Properties, CovolumeMatchesCertifiedMultiplicity) {
  expect_clean(monomial_multiplicity_suite(kSeed + 6));
}
