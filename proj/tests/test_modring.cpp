#include <gtest/gtest.h>

#include <random>

#include "holgraph/modring.hpp"

using namespace holgraph;

namespace {

// Sum of a^i for i < t, one term at a time.
u64 naive_geometric_sum(const Modulus& mod, u64 a, u64 t) {
  u64 sum = 0, term = 1;
  for (u64 i = 0; i < t; ++i) {
    sum = mod.add(sum, term);
    term = mod.mul(term, a);
  }
  return sum;
}

}  // namespace

TEST(Modulus, RejectsBadParameters) {
  EXPECT_THROW(Modulus(4, 2), std::invalid_argument);
  EXPECT_THROW(Modulus(1, 2), std::invalid_argument);
  EXPECT_THROW(Modulus(2, 0), std::invalid_argument);
  EXPECT_THROW(Modulus(2, 63), std::invalid_argument);
  EXPECT_NO_THROW(Modulus(2, 62));
  EXPECT_EQ(Modulus(3, 4).value(), 81u);
  EXPECT_EQ(Modulus(3, 4).totient(), 54u);
  EXPECT_EQ(Modulus(2, 5).to_string(), "2^5");
}

TEST(Modulus, WideMultiplicationDoesNotOverflow) {
  const Modulus mod(2, 62);
  const u64 big = mod.value() - 1;
  EXPECT_EQ(mod.mul(big, big), 1u);  // (-1)^2
}

TEST(UnitAut, ApplyExamples) {
  const Modulus m8(2, 3);
  EXPECT_EQ(apply(UnitAut(m8, 5), Residue(m8, 3)).value(), 7u);
  EXPECT_EQ(apply(UnitAut(m8, 7), Residue(m8, 1)).value(), 7u);
  for (u64 x = 0; x < 8; ++x) EXPECT_EQ(apply(UnitAut::identity(m8), Residue(m8, x)).value(), x);
}

TEST(UnitAut, ComposeExamples) {
  const Modulus m8(2, 3), m16(2, 4);
  EXPECT_EQ(compose(UnitAut(m8, 3), UnitAut(m8, 5)).unit(), 7u);
  EXPECT_EQ(compose(UnitAut(m16, 5), UnitAut(m16, 5)).unit(), 9u);
  EXPECT_EQ(compose(UnitAut(m16, 11), UnitAut::identity(m16)).unit(), 11u);
}

TEST(UnitAut, Errors) {
  const Modulus m8(2, 3), m9(3, 2);
  EXPECT_THROW(UnitAut(m8, 2), std::invalid_argument);
  EXPECT_THROW(UnitAut(m9, 6), std::invalid_argument);
  EXPECT_THROW(apply(UnitAut(m8, 3), Residue(m9, 1)), ModulusMismatch);
  EXPECT_THROW(compose(UnitAut(m8, 3), UnitAut(m9, 2)), ModulusMismatch);
}

TEST(UnitAut, GroupLawsExhaustive) {
  for (auto [p, n] : {std::pair<u64, unsigned>{2, 12}, {3, 7}, {5, 5}}) {
    const Modulus mod(p, n);
    for (u64 a : mod.units()) {
      const UnitAut alpha(mod, a);
      const UnitAut inv = alpha.inverse();
      EXPECT_EQ(compose(alpha, inv), UnitAut::identity(mod));
      if (a < 40) {
        for (u64 x = 0; x < mod.value(); ++x) {
          ASSERT_EQ(apply(inv, apply(alpha, Residue(mod, x))).value(), x);
        }
      }
    }
  }
}

TEST(UnitAut, ComposeIsCommutativeAndAssociative) {
  const Modulus mod(3, 4);
  const auto units = mod.units();
  for (u64 a : units) {
    for (u64 b : units) {
      const UnitAut x(mod, a), y(mod, b), z(mod, 7);
      EXPECT_EQ(compose(x, y), compose(y, x));
      EXPECT_EQ(compose(compose(x, y), z), compose(x, compose(y, z)));
    }
  }
}

TEST(UnitAut, Order) {
  const Modulus m16(2, 4);
  EXPECT_EQ(UnitAut(m16, 5).order(), 4u);
  EXPECT_EQ(UnitAut(m16, 15).order(), 2u);
  EXPECT_EQ(UnitAut(m16, 1).order(), 1u);
  EXPECT_EQ(UnitAut(Modulus(3, 3), 2).order(), 18u);
}

TEST(GeometricSum, Examples) {
  const Modulus m16(2, 4), m8(2, 3);
  EXPECT_EQ(geometric_sum(UnitAut(m16, 5), 4).value(), 12u);
  EXPECT_EQ(geometric_sum(UnitAut(m8, 1), 7).value(), 7u);
  EXPECT_EQ(geometric_sum(UnitAut(m16, 5), 8).value(), 8u);
  EXPECT_EQ(geometric_sum(UnitAut(m16, 5), 16).value(), 0u);
  EXPECT_EQ(geometric_sum(UnitAut(m16, 5), 0).value(), 0u);
}

TEST(GeometricSum, MatchesNaiveSummation) {
  for (auto [p, n] : {std::pair<u64, unsigned>{2, 10}, {3, 6}, {7, 3}}) {
    const Modulus mod(p, n);
    for (u64 a : mod.units()) {
      if (a > 300) break;
      for (u64 t : {0u, 1u, 2u, 3u, 7u, 64u, 100u, 729u, 1025u}) {
        ASSERT_EQ(geometric_sum(mod, a, t), naive_geometric_sum(mod, a, t)) << a << ' ' << t;
      }
    }
  }
}

TEST(GeometricSum, SplitIdentityRandom) {
  std::mt19937_64 rng(17);
  const Modulus mod(2, 40);
  for (int i = 0; i < 2000; ++i) {
    u64 a = rng() % mod.value() | 1;
    u64 t1 = rng() % 100000, t2 = rng() % 100000;
    const u64 lhs = geometric_sum(mod, a, t1 + t2);
    const u64 rhs = mod.add(geometric_sum(mod, a, t1), mod.mul(mod.pow(a, t1), geometric_sum(mod, a, t2)));
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(ArithLemmas, FiveModTwoValue) {
  // (5^k - 1)/2 = 2 * sum_{i<k} 5^i; at n = 4, k = 2^(n-2) + 1 = 5.
  const Modulus mod(2, 4);
  EXPECT_EQ((3125 - 1) / 2 % 16, 10);
  EXPECT_EQ(mod.mul(2, geometric_sum(mod, 5, 5)), 10u);
}

TEST(ArithLemmas, SmallestVanishingExponentOddPrime) {
  // ((3 + 1)^k - 1)/3 = sum_{i<k} 4^i.
  const Modulus mod(3, 3);
  u64 k = 1;
  while (geometric_sum(mod, 4, k) != 0) ++k;
  EXPECT_EQ(k, 27u);
}

TEST(ArithLemmas, PassOverDeskRange) {
  for (unsigned n = 4; n <= 14; ++n) {
    const auto report = verify_arith_lemmas(Modulus(2, n));
    EXPECT_TRUE(report.passed()) << report.to_text();
    EXPECT_EQ(report.lemmas.size(), 3u);
  }
  for (u64 p : {3u, 5u, 7u}) {
    for (unsigned n = 1;; ++n) {
      const Modulus mod(p, n);
      if (mod.value() > (1u << 16)) break;
      const auto report = verify_arith_lemmas(mod);
      EXPECT_TRUE(report.passed()) << report.to_text();
    }
  }
}

TEST(ArithLemmas, RangeErrors) {
  EXPECT_THROW(verify_arith_lemmas(Modulus(2, 3)), Unsupported);
  EXPECT_THROW(verify_arith_lemmas(Modulus(2, 30)), FeasibilityError);
}
