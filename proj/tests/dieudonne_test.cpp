#include <gtest/gtest.h>

#include "ssmass/dieudonne.hpp"
#include "ssmass/fingrp.hpp"

using namespace ssmass;
using namespace ssmass::dieudonne;

namespace {

Vec e(const TruncWittRing& ring, int n, int k) {
  Vec v(static_cast<std::size_t>(n));
  v[k] = ring.one();
  return v;
}

// A module with F = diag(1, p), V = diag(p, 1): a valid quasi-polarized
// Dieudonne module that is not superspecial.
GradedSemilinearModule ordinary_module(long p) {
  GradedSemilinearModule mod = standard_module(p, 1, 1).first;
  const auto& ring = mod.r();
  Matrix fm(2, 2), vm(2, 2);
  fm.at(0, 0) = ring.one();
  fm.at(1, 1) = ring.from_int(p);
  vm.at(0, 0) = ring.from_int(p);
  vm.at(1, 1) = ring.one();
  mod.frob = {fm};
  mod.ver = {vm};
  return mod;
}

Matrix lift_2x2(RingElem a, RingElem b, RingElem c, RingElem d) {
  Matrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

}  // namespace

TEST(StandardModule, DeclaredRelations) {
  auto [mod, basis] = standard_module(2, 1, 1);
  const auto& ring = mod.r();
  EXPECT_EQ(mod.rank(), 2);
  EXPECT_EQ(ring.degree(), 2);  // odd f works over the degree-2f ring
  Vec x = basis.x(0, 0), y = basis.y(0, 0);
  EXPECT_EQ(mod.apply_F(0, x), scale(ring, y, -1));
  EXPECT_EQ(mod.apply_F(0, y), scale(ring, x, 2));
  EXPECT_EQ(mod.apply_V(0, x), y);
  EXPECT_EQ(mod.apply_V(0, y), scale(ring, x, -2));
}

TEST(StandardModule, DeclaredBasisVerifies) {
  for (long p : {2L, 3L, 5L})
    for (int f = 1; f <= 4; ++f)
      for (int m = 1; m <= 3; ++m) {
        if (f == 4 && p == 5) continue;
        if (f % 2 == 1 && f > 3) continue;
        auto [mod, basis] = standard_module(p, f, m);
        EXPECT_TRUE(superspecial_violations(mod).empty()) << p << f << m;
        EXPECT_TRUE(verify_good_basis(mod, basis).ok) << p << f << m;
      }
}

TEST(StandardModule, FSquaredIsMinusP) {
  auto [mod, basis] = standard_module(2, 2, 1);
  const auto& ring = mod.r();
  Vec x0 = basis.x(0, 0);
  Vec fx = mod.apply_F(0, x0);
  EXPECT_EQ(fx, scale(ring, basis.y(1, 0), -1));
  // F^2 X^0 = -F Y^1 = -2 X^0
  EXPECT_EQ(mod.apply_F(1, fx), scale(ring, x0, -2));
}

TEST(StandardModule, Bounds) {
  EXPECT_THROW(standard_module(7, 1, 1), InvalidInput);
  EXPECT_THROW(standard_module(2, 5, 1), InvalidInput);
  EXPECT_THROW(standard_module(2, 1, 0), InvalidInput);
  EXPECT_THROW(standard_module(2, 1, 4), InvalidInput);
}

TEST(Scramble, IdentityTransportIsNoOp) {
  auto [mod, basis] = standard_module(3, 2, 2);
  std::vector<Matrix> ids(2, Matrix::identity(mod.r(), 4));
  auto same = transport(mod, ids);
  EXPECT_EQ(same.frob, mod.frob);
  EXPECT_EQ(same.ver, mod.ver);
  EXPECT_EQ(same.gram, mod.gram);
}

TEST(Scramble, PreservesStructure) {
  for (long p : {2L, 3L})
    for (int f = 1; f <= 3; ++f)
      for (int m = 1; m <= 2; ++m)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
          auto [mod, basis] = standard_module(p, f, m);
          auto scrambled = scramble(mod, seed);
          EXPECT_TRUE(superspecial_violations(scrambled).empty());
          // The declared basis, carried into the new coordinates, still verifies.
          auto change = scramble_matrices(mod, seed);
          GoodBasis moved = basis;
          for (int i = 0; i < f; ++i) moved.grades[i] = mul(mod.r(), inverse(mod.r(), change[i]), basis.grades[i]);
          EXPECT_TRUE(verify_good_basis(scrambled, moved).ok);
          EXPECT_EQ(scramble(mod, seed).frob, scrambled.frob);
        }
}

TEST(Scramble, ChangesCoordinates) {
  auto [mod, basis] = standard_module(2, 2, 1);
  EXPECT_NE(scramble(mod, 1).frob, mod.frob);
  EXPECT_NE(scramble(mod, 1).frob, scramble(mod, 2).frob);
}

TEST(GoodBasis, UnscrambledStandard) {
  for (long p : {2L, 3L})
    for (int f = 1; f <= 3; ++f) {
      auto [mod, declared] = standard_module(p, f, 2);
      auto basis = good_basis(mod);
      EXPECT_TRUE(verify_good_basis(mod, basis).ok);
    }
}

TEST(GoodBasis, EvenCaseManySeeds) {
  auto [mod, declared] = standard_module(2, 2, 1);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto scrambled = scramble(mod, seed);
    auto basis = good_basis(scrambled);
    auto report = verify_good_basis(scrambled, basis);
    EXPECT_TRUE(report.ok) << "seed " << seed;
  }
}

TEST(GoodBasis, OddCaseHermitianPartner) {
  auto [mod, declared] = standard_module(3, 3, 1);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto scrambled = scramble(mod, seed);
    auto basis = good_basis(scrambled);
    ASSERT_TRUE(verify_good_basis(scrambled, basis).ok);
    const auto& ring = scrambled.r();
    Vec x = basis.x(0, 0), y = basis.y(0, 0);
    EXPECT_EQ(hermitian_partner(scrambled, x), y);
    // p Y^0 = F^3 X^0 holds exactly, c = 1 and (-1)^(c+1) = 1.
    Vec f3 = scrambled.apply_F(2, scrambled.apply_F(1, scrambled.apply_F(0, x)));
    EXPECT_EQ(f3, scale(ring, y, 3));
  }
}

TEST(GoodBasis, FullGrid) {
  for (long p : {2L, 3L})
    for (int f = 1; f <= 3; ++f)
      for (int m = 1; m <= 2; ++m) {
        auto [mod, declared] = standard_module(p, f, m);
        for (std::uint64_t seed = 100; seed < 120; ++seed) {
          auto scrambled = scramble(mod, seed);
          EXPECT_TRUE(verify_good_basis(scrambled, good_basis(scrambled)).ok) << p << f << m << " " << seed;
        }
      }
}

TEST(GoodBasis, WrapAroundRelations) {
  auto [mod, declared] = standard_module(3, 2, 2);
  auto scrambled = scramble(mod, 9);
  auto basis = good_basis(scrambled);
  const auto& ring = scrambled.r();
  for (int j = 0; j < 2; ++j) {
    EXPECT_EQ(scrambled.apply_F(1, basis.x(1, j)), scale(ring, basis.y(0, j), -1));
    EXPECT_EQ(scrambled.apply_F(1, basis.y(1, j)), scale(ring, basis.x(0, j), 3));
  }
}

TEST(GoodBasis, RejectsNonSuperspecial) {
  auto ordinary = ordinary_module(2);
  auto violations = superspecial_violations(ordinary);
  ASSERT_FALSE(violations.empty());
  bool named = false;
  for (const auto& v : violations) named = named || v.find("F M != V M") != std::string::npos;
  EXPECT_TRUE(named);
  EXPECT_THROW(good_basis(ordinary), NotSuperspecial);
}

TEST(GoodBasis, RejectsBrokenRelations) {
  auto [mod, declared] = standard_module(2, 2, 1);
  auto broken = mod;
  broken.frob[0] = scale(mod.r(), broken.frob[0], 3);
  broken.frob[0].at(0, 1) = mod.r().from_int(1);
  try {
    good_basis(broken);
    FAIL() << "expected NotSuperspecial";
  } catch (const NotSuperspecial& e) {
    EXPECT_NE(std::string(e.what()).find("!="), std::string::npos);
  }
}

TEST(Verify, SwappedSlotReportsSignViolation) {
  auto [mod, basis] = standard_module(2, 2, 1);
  GoodBasis swapped = basis;
  Vec x = swapped.grades[0].column(0);
  swapped.grades[0].set_column(0, swapped.grades[0].column(1));
  swapped.grades[0].set_column(1, x);
  auto report = verify_good_basis(mod, swapped);
  EXPECT_FALSE(report.ok);
  bool sign = false;
  for (const auto& v : report.violations) sign = sign || v.find("symplectic sign violation") != std::string::npos;
  EXPECT_TRUE(sign);
}

TEST(Verify, NonUnitRescaleFails) {
  auto [mod, basis] = standard_module(3, 1, 1);
  GoodBasis rescaled = basis;
  rescaled.grades[0].set_column(0, scale(mod.r(), basis.x(0, 0), 3));
  auto report = verify_good_basis(mod, rescaled);
  EXPECT_FALSE(report.ok);
  bool gram = false;
  for (const auto& v : report.violations) gram = gram || v.find("<X_1, Y_1>") != std::string::npos;
  EXPECT_TRUE(gram);
}

TEST(Verify, DimensionMismatch) {
  auto [mod, basis] = standard_module(2, 2, 1);
  GoodBasis wrong = basis;
  wrong.grades.pop_back();
  EXPECT_FALSE(verify_good_basis(mod, wrong).ok);
}

TEST(HermitianForm, NonDegenerateOnOddModules) {
  for (long p : {2L, 3L})
    for (int f : {1, 3})
      for (int m = 1; m <= 2; ++m) {
        auto [mod, declared] = standard_module(p, f, m);
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
          auto report = hermitian_form(scramble(mod, seed));
          EXPECT_EQ(report.dimension, m);
          EXPECT_EQ(report.rank, m);
        }
      }
  auto [even, declared] = standard_module(2, 2, 1);
  EXPECT_THROW(hermitian_form(even), InvalidInput);
}

TEST(Automorphism, IdentityAccepted) {
  for (int f = 1; f <= 3; ++f) {
    auto [mod, basis] = standard_module(2, f, 1);
    auto report = automorphism_shape(mod, basis, Matrix::identity(mod.r(), 2));
    EXPECT_TRUE(report.accepted()) << f;
    EXPECT_EQ(report.siegel_shape, f % 2 == 0);
    EXPECT_EQ(report.quaternion_unitary_shape, f % 2 == 1);
    EXPECT_EQ(static_cast<int>(report.blocks.size()), f + 1);
  }
}

TEST(Automorphism, ParabolicLiftsAccepted) {
  auto [mod, basis] = standard_module(3, 2, 1);
  const auto& ring = mod.r();
  Xorshift64Star rng(77);
  int tried = 0;
  while (tried < 50) {
    RingElem a = ring.random(rng), b = ring.random(rng), c = ring.random(rng);
    if (!ring.is_unit(a)) continue;
    ++tried;
    RingElem pb = ring.scale(b, 3);
    // d with a d - (p b) c = 1
    RingElem d = ring.mul(ring.inverse(a), ring.add(ring.one(), ring.mul(pb, c)));
    auto report = automorphism_shape(mod, basis, lift_2x2(a, pb, c, d));
    EXPECT_TRUE(report.accepted());
    EXPECT_TRUE(report.siegel_shape);
  }
}

TEST(Automorphism, UnitBBlockRejected) {
  auto [mod, basis] = standard_module(2, 2, 1);
  const auto& ring = mod.r();
  auto report = automorphism_shape(mod, basis, lift_2x2(ring.one(), ring.one(), ring.zero(), ring.one()));
  EXPECT_TRUE(report.pairing_preserved);
  EXPECT_FALSE(report.accepted());
  EXPECT_FALSE(report.siegel_shape);
  ASSERT_FALSE(report.failures.empty());
  EXPECT_NE(report.failures.front().find("not divisible by p"), std::string::npos);
}

TEST(Automorphism, NonSymplecticRejected) {
  auto [mod, basis] = standard_module(2, 2, 1);
  const auto& ring = mod.r();
  auto report = automorphism_shape(mod, basis, lift_2x2(ring.from_int(3), ring.zero(), ring.zero(), ring.one()));
  EXPECT_TRUE(report.automorphism);
  EXPECT_FALSE(report.pairing_preserved);
  EXPECT_FALSE(report.accepted());
}

TEST(Automorphism, AcceptedEvenBlocksHaveBDivisibleByP) {
  auto [mod, basis] = standard_module(2, 2, 1);
  const auto& ring = mod.r();
  Xorshift64Star rng(5);
  for (int t = 0; t < 2000; ++t) {
    Matrix phi(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) phi.at(r, c) = ring.random(rng);
    if (automorphism_shape(mod, basis, phi).accepted()) EXPECT_GE(ring.valuation(phi.at(0, 1)), 1);
  }
}

TEST(Automorphism, ReductionCountMatchesParabolic) {
  auto [mod, basis] = standard_module(2, 2, 1);
  auto count = enumerate_automorphism_reductions(mod, basis);
  EXPECT_EQ(count.candidates, 65536u);
  EXPECT_EQ(Integer(count.distinct_reductions), fingrp::siegel_parabolic_order(1, 4).value);
  EXPECT_EQ(count.distinct_reductions, 12u);
}

TEST(Automorphism, EnumerationBound) {
  auto [mod, basis] = standard_module(3, 2, 1);
  EXPECT_THROW(enumerate_automorphism_reductions(mod, basis), InvalidInput);
}

TEST(Automorphism, RequiresVerifiedBasis) {
  auto [mod, basis] = standard_module(2, 2, 1);
  GoodBasis bad = basis;
  bad.grades[0] = scale(mod.r(), bad.grades[0], 2);
  EXPECT_THROW(automorphism_shape(mod, bad, Matrix::identity(mod.r(), 2)), InvalidInput);
  EXPECT_THROW(automorphism_shape(mod, basis, Matrix::identity(mod.r(), 3)), InvalidInput);
}

TEST(Dump, ListsRingAndVerdict) {
  auto [mod, declared] = standard_module(2, 2, 1);
  auto scrambled = scramble(mod, 3);
  auto basis = good_basis(scrambled);
  auto text = dump(scrambled, basis, verify_good_basis(scrambled, basis));
  EXPECT_NE(text.find("x^2+x+1"), std::string::npos);
  EXPECT_NE(text.find("sigma(x): 3x+3"), std::string::npos);
  EXPECT_NE(text.find("verdict: OK"), std::string::npos);
  EXPECT_NE(text.find("Y_1"), std::string::npos);
}
