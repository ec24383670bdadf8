#include <gtest/gtest.h>

#include "ssmass/fingrp.hpp"
#include "ssmass/oracle.hpp"
#include "ssmass/quatalg.hpp"

using namespace ssmass;
using namespace ssmass::fingrp;
using numfield::FieldSpec;

namespace {

const std::vector<std::pair<int, long>> kOracleGrid = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}, {2, 3}};

std::vector<long> prime_powers_up_to(long n) {
  std::vector<long> out;
  for (long q = 2; q <= n; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

}  // namespace

TEST(SpOrder, Examples) {
  EXPECT_EQ(sp_order(1, 2).value, 6);
  EXPECT_EQ(sp_order(2, 2).value, 720);
  EXPECT_EQ(sp_order(2, 3).value, 51840);
  EXPECT_THROW(sp_order(1, 6), InvalidInput);
  EXPECT_THROW(sp_order(0, 2), InvalidInput);
}

TEST(SpOrder, MatchesEnumeration) {
  for (auto [m, q] : kOracleGrid) {
    EXPECT_EQ(sp_order(m, q).value, oracle::enum_sp(m, q).count) << m << "," << q;
    EXPECT_EQ(isotropic_coset_count(m, q).value, oracle::enum_isotropic(m, q).count) << m << "," << q;
    EXPECT_EQ(siegel_parabolic_order(m, q).value, oracle::enum_parabolic(m, q).count) << m << "," << q;
  }
  for (long q : {7L, 8L, 9L}) EXPECT_EQ(sp_order(1, q).value, oracle::enum_sp(1, q).count);
  EXPECT_EQ(sp_order(2, 4).value, oracle::enum_sp(2, 4).count);
}

TEST(GlOrder, Examples) {
  EXPECT_EQ(gl_order(1, 5).value, 4);
  EXPECT_EQ(gl_order(2, 2).value, 6);
  EXPECT_EQ(gl_order(2, 3).value, 48);
}

TEST(ParabolicOrder, Examples) {
  EXPECT_EQ(siegel_parabolic_order(1, 2).value, 2);
  EXPECT_EQ(siegel_parabolic_order(1, 3).value, 6);
  // Stabilizer enumeration in Sp_4(F_2) gives 48 = 720 / 15.
  EXPECT_EQ(siegel_parabolic_order(2, 2).value, 48);
  EXPECT_EQ(oracle::enum_parabolic(2, 2).count, 48);
}

TEST(ParabolicOrder, LeviTimesUnipotent) {
  for (int m = 1; m <= 4; ++m)
    for (long q : prime_powers_up_to(16)) {
      Integer unipotent = ipow(Integer(q), static_cast<unsigned long>(m * (m + 1) / 2));
      EXPECT_EQ(siegel_parabolic_order(m, q).value, unipotent * gl_order(m, q).value);
    }
}

TEST(CosetCount, Examples) {
  EXPECT_EQ(isotropic_coset_count(1, 2).value, 3);
  EXPECT_EQ(isotropic_coset_count(2, 2).value, 15);
  EXPECT_EQ(isotropic_coset_count(2, 3).value, 40);
}

TEST(CosetCount, IndexIdentity) {
  for (int m = 1; m <= 5; ++m)
    for (long q : prime_powers_up_to(16))
      EXPECT_EQ(sp_order(m, q).value, isotropic_coset_count(m, q).value * siegel_parabolic_order(m, q).value);
}

TEST(GroupOrder, FactoredFormMatchesValue) {
  for (int m = 1; m <= 4; ++m)
    for (long q : prime_powers_up_to(16)) {
      for (const auto& order : {sp_order(m, q), gl_order(m, q), siegel_parabolic_order(m, q),
                                isotropic_coset_count(m, q)}) {
        EXPECT_EQ(order.product_of_factors(), order.value);
        EXPECT_FALSE(order.factored_string().empty());
      }
    }
  EXPECT_EQ(sp_order(2, 2).factored_string(), "2^4 * (2^2-1) * (2^4-1)");
}

TEST(LocalIndex, Examples) {
  const FieldSpec q = FieldSpec::rational();
  const FieldSpec d5 = FieldSpec::real_quadratic(5);
  for (long p : {2L, 3L, 7L})
    for (int m = 1; m <= 3; ++m) {
      auto delta = quatalg::discriminant(quatalg::QuaternionRamification::definite_over_q(p));
      EXPECT_EQ(local_index(q, p, delta, m).value, 1);
    }
  EXPECT_EQ(local_index(d5, 2, {}, 1).value, 5);
  EXPECT_EQ(local_index(d5, 2, {}, 2).value, 85);
  EXPECT_EQ(local_index(d5, 11, quatalg::discriminant(quatalg::twist_by_Bp_infty(
                                     quatalg::QuaternionRamification::split(d5), 11)),
                        3)
                .value,
            1);
  EXPECT_THROW(local_index(d5, 5, {}, 1), InvalidInput);
}

TEST(LocalIndex, OneSplitPlaceOutsideDelta) {
  const FieldSpec d5 = FieldSpec::real_quadratic(5);
  auto places = numfield::places_above(d5, 11);
  EXPECT_EQ(local_index(d5, 11, {places[0]}, 1).value, 12);
  EXPECT_EQ(local_index(d5, 11, {}, 1).value, 144);
}

TEST(SpOrderModN, Examples) {
  const FieldSpec q = FieldSpec::rational();
  EXPECT_EQ(sp_order_mod_N(1, q, 3, std::nullopt).value, 24);
  EXPECT_EQ(sp_order_mod_N(1, q, 4, std::nullopt).value, 48);
  // 3 is inert in Q(sqrt 5): residue field F_9, |Sp_2(F_9)| = 720.
  EXPECT_EQ(sp_order_mod_N(1, FieldSpec::real_quadratic(5), 3, std::nullopt).value, 720);
  EXPECT_THROW(sp_order_mod_N(1, q, 2, std::nullopt), InvalidInput);
  EXPECT_THROW(sp_order_mod_N(1, q, 6, 3L), InvalidInput);
}

TEST(SpOrderModN, MatchesResidueRingEnumeration) {
  const FieldSpec q = FieldSpec::rational();
  for (long n = 3; n <= 16; ++n) EXPECT_EQ(sp_order_mod_N(1, q, n, std::nullopt).value, oracle::enum_sp_mod(1, n).count) << n;
}

TEST(SpOrderModN, PrimePowerLiftAndMultiplicativity) {
  const FieldSpec q = FieldSpec::rational();
  for (int m = 1; m <= 3; ++m) {
    for (long l : {2L, 3L, 5L})
      for (int k = 1; k <= 3; ++k) {
        long n = 1;
        for (int j = 0; j < k; ++j) n *= l;
        if (n < 3) continue;
        Integer expected = sp_order(m, l).value * ipow(Integer(l), static_cast<unsigned long>(m * (2 * m + 1) * (k - 1)));
        EXPECT_EQ(sp_order_mod_N(m, q, n, std::nullopt).value, expected) << m << " " << n;
      }
    for (auto [a, b] : std::vector<std::pair<long, long>>{{3, 4}, {4, 5}, {3, 7}, {5, 9}})
      EXPECT_EQ(sp_order_mod_N(m, q, a * b, std::nullopt).value,
                sp_order_mod_N(m, q, a, std::nullopt).value * sp_order_mod_N(m, q, b, std::nullopt).value);
  }
}

TEST(Factorize, Basic) {
  EXPECT_EQ(factorize(360), (std::vector<std::pair<long, int>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_TRUE(factorize(1).empty());
}
