#include <gtest/gtest.h>

#include <atomic>
#include <random>
#include <stdexcept>

#include "locmult/kernels.hpp"
#include "locmult/lojasiewicz.hpp"
#include "locmult/multiplicity.hpp"
#include "locmult/reduction.hpp"
#include "test_support.hpp"

using namespace locmult;
using namespace locmult::testing;

TEST(Kernels, AllOfAgrees) {
  for (Execution exec : {Execution::kSerial, Execution::kParallel}) {
    EXPECT_TRUE(all_of_indices(0, [](std::size_t) { return false; }, exec));
    EXPECT_TRUE(all_of_indices(100, [](std::size_t i) { return i < 100; }, exec));
    EXPECT_FALSE(all_of_indices(100, [](std::size_t i) { return i != 37; }, exec));
  }
}

TEST(Kernels, AllOfFailureWinsOverException) {
  // A proven failure is an answer; an exception elsewhere must not mask it.
  auto pred = [](std::size_t i) -> bool {
    if (i == 0) return false;
    throw std::runtime_error("boom");
  };
  EXPECT_FALSE(all_of_indices(1, pred, Execution::kSerial));
  EXPECT_FALSE(all_of_indices(8, pred, Execution::kParallel));
  EXPECT_THROW(all_of_indices(4, [](std::size_t) -> bool { throw std::runtime_error("x"); },
                              Execution::kParallel),
               std::runtime_error);
}

TEST(Kernels, FirstSuccessPicksTheLowestIndex) {
  for (Execution exec : {Execution::kSerial, Execution::kParallel}) {
    auto found = first_success<int>(
        50, [](std::size_t i) -> std::optional<int> {
          if (i % 7 == 5) return static_cast<int>(i * 10);
          return std::nullopt;
        },
        exec);
    ASSERT_TRUE(found);
    EXPECT_EQ(found->first, 5u);
    EXPECT_EQ(found->second, 50);
    EXPECT_FALSE(first_success<int>(10, [](std::size_t) { return std::optional<int>(); }, exec));
  }
}

TEST(Kernels, MapKeepsIndexOrder) {
  const auto serial = map_indices<std::size_t>(64, [](std::size_t i) { return i * i; }, Execution::kSerial);
  const auto parallel =
      map_indices<std::size_t>(64, [](std::size_t i) { return i * i; }, Execution::kParallel);
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(parallel[9], 81u);
  EXPECT_THROW(map_indices<int>(4, [](std::size_t i) -> int {
                 if (i == 2) throw std::runtime_error("x");
                 return 0;
               },
                                Execution::kParallel),
               std::runtime_error);
}

TEST(Kernels, ParallelWidthIsPositive) { EXPECT_GE(parallel_width(), 1); }

TEST(Kernels, CertificatesMatchAcrossPaths) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 10; ++i) {
    const Ideal I = random_m_primary_ideal(rng, ring_xy(), 3, 1);
    CertifyOptions serial, parallel;
    serial.exec = Execution::kSerial;
    serial.seed = parallel.seed = static_cast<std::uint64_t>(i);
    const auto a = e_certified(I, serial);
    const auto b = e_certified(I, parallel);
    EXPECT_EQ(a.e, b.e);
    ASSERT_EQ(a.generic.has_value(), b.generic.has_value());
    if (a.generic) {
      EXPECT_EQ(a.generic->a, b.generic->a);
      EXPECT_EQ(a.generic->r, b.generic->r);
    }
    EXPECT_EQ(contains(I, ideal_power(I, 2), Execution::kSerial),
              contains(I, ideal_power(I, 2), Execution::kParallel));
    EXPECT_EQ(reduction_exponent(ideal_power(I, 1), I, 3, Execution::kSerial),
              reduction_exponent(ideal_power(I, 1), I, 3, Execution::kParallel));
  }
}

TEST(Kernels, LojaTablesMatchAcrossPaths) {
  const Ideal I = ideal("x^2 + y^3, x*y^2");
  CertifyOptions serial;
  serial.exec = Execution::kSerial;
  const auto a = loja_bracket(I, 2, serial);
  const auto b = loja_bracket(I, 2);
  ASSERT_EQ(a.table.size(), b.table.size());
  for (std::size_t k = 0; k < a.table.size(); ++k) {
    EXPECT_EQ(a.table[k].nu, b.table[k].nu);
    ASSERT_EQ(a.table[k].below_nu.has_value(), b.table[k].below_nu.has_value());
    if (a.table[k].below_nu) EXPECT_EQ(a.table[k].below_nu->first, b.table[k].below_nu->first);
  }
}
