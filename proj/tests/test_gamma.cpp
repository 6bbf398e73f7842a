#include <gtest/gtest.h>

#include <map>
#include <random>

#include "holgraph/catalog.hpp"
#include "holgraph/gamma.hpp"

using namespace holgraph;

namespace {

GammaFunction power_table(const Modulus& mod, u64 a) {
  return GammaFunction::from_rule(mod, [&](u64 x) { return mod.pow(a, x); });
}

GammaFunction gamma2(unsigned n) {
  const Modulus mod(2, n);
  return power_table(mod, mod.value() / 2 + 1);
}

GammaFunction gamma_p(unsigned n) {
  const Modulus mod(2, n);
  return GammaFunction::from_rule(mod, [&](u64 x) { return 2 * x + 1; });
}

std::vector<GammaFunction> catalog_gammas(u64 p, unsigned n) {
  std::vector<GammaFunction> out;
  for (auto& e : full_catalog(p, n)) out.push_back(e.gamma);
  return out;
}

const std::pair<u64, unsigned> kSmall[] = {{2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};

}  // namespace

TEST(Validate, Examples) {
  const Modulus m8(2, 3);
  EXPECT_TRUE(validate(GammaFunction::trivial(Modulus(2, 4))));
  EXPECT_TRUE(validate(gamma2(4)));
  const auto bad = GammaFunction::from_rule(m8, [](u64 x) { return x == 0 ? 1 : 3; });
  EXPECT_FALSE(validate(bad));
  EXPECT_TRUE(find_gfe_violation(bad).has_value());
  EXPECT_FALSE(find_gfe_violation(gamma2(4)).has_value());
}

TEST(Validate, TableChecks) {
  const Modulus m8(2, 3);
  EXPECT_THROW(GammaFunction::from_table(m8, {1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(GammaFunction::from_table(m8, {1, 2, 1, 1, 1, 1, 1, 1}), std::invalid_argument);
}

TEST(Validate, SampledAgreesWithExhaustiveOnLargeModulus) {
  const Modulus mod(2, 13);
  const auto g = GammaFunction::from_rule(mod, [&](u64 x) { return mod.add(mod.mul(4, x), 1); });
  EXPECT_TRUE(validate(g));  // sampled path
  const auto bad = GammaFunction::from_rule(mod, [](u64 x) { return x % 3 == 1 ? 3 : 1; });
  EXPECT_FALSE(validate(bad));
}

TEST(Circle, Examples) {
  const Modulus m8(2, 3);
  const auto g2 = gamma2(3);
  EXPECT_EQ(circle(g2, Residue(m8, 1), Residue(m8, 1)).value(), 6u);
  EXPECT_EQ(circle_raw(gamma_p(3), 3, 3), 0u);
  for (const auto& g : catalog_gammas(2, 4)) {
    for (u64 x = 0; x < 16; ++x) EXPECT_EQ(circle_raw(g, x, 0), x);
  }
}

TEST(CircleOrder, Examples) {
  EXPECT_EQ(circle_order(GammaFunction::trivial(Modulus(2, 3)), 1), 8u);
  EXPECT_EQ(circle_order(gamma_p(3), 3), 2u);
  for (unsigned u = 2; u < 6; ++u) {
    EXPECT_EQ(circle_order(base_gamma(2, 6, Family::C, u), 1), 64u);
  }
  for (unsigned u = 1; u < 4; ++u) {
    EXPECT_EQ(circle_order(base_gamma(3, 4, Family::U, u), 1), 81u);
  }
  EXPECT_THROW(circle_order(gamma2(3), Residue(Modulus(3, 2), 1)), ModulusMismatch);
}

TEST(Conjugate, Examples) {
  const Modulus m32(2, 5);
  const auto base = base_gamma(2, 5, Family::C, 2);
  EXPECT_EQ(conjugate(base, UnitAut::identity(m32)), base);
  const auto conj = conjugate(base, UnitAut(m32, 3));
  for (u64 x = 0; x < 32; ++x) EXPECT_EQ(conj.at(x), (4 * (11 * x % 32) + 1) % 32);
}

TEST(Conjugate, IsAnActionExhaustive) {
  for (auto [p, n] : kSmall) {
    const Modulus mod(p, n);
    for (const auto& g : catalog_gammas(p, n)) {
      EXPECT_EQ(conjugate(g, UnitAut::identity(mod)), g);
      for (u64 a : mod.units()) {
        for (u64 b : mod.units()) {
          const UnitAut alpha(mod, a), beta(mod, b);
          ASSERT_EQ(conjugate(conjugate(g, alpha), beta), conjugate(g, compose(alpha, beta)));
        }
      }
    }
  }
}

TEST(Conjugate, PreservesValidity) {
  for (auto [p, n] : kSmall) {
    const Modulus mod(p, n);
    for (const auto& g : catalog_gammas(p, n)) {
      for (u64 a : mod.units()) EXPECT_TRUE(validate(conjugate(g, UnitAut(mod, a))));
    }
  }
}

TEST(InversionConjugate, Examples) {
  const auto trivial = GammaFunction::trivial(Modulus(2, 4));
  EXPECT_EQ(inversion_conjugate(trivial), trivial);
  EXPECT_EQ(inversion_conjugate(gamma2(3)), gamma2(3));
  for (auto [p, n] : kSmall) {
    for (const auto& g : catalog_gammas(p, n)) {
      const auto bar = inversion_conjugate(g);
      EXPECT_EQ(inversion_conjugate(bar), g);
      EXPECT_TRUE(validate(bar));
    }
  }
}

TEST(Stabilizer, Examples) {
  for (unsigned n = 4; n <= 6; ++n) {
    const Modulus mod(2, n);
    EXPECT_EQ(stabilizer_size(GammaFunction::trivial(mod)), mod.totient());
    const auto g5 = base_gamma(2, n, Family::G5);
    EXPECT_EQ(stabilizer_size(g5), u64{1} << (n - 2));
    EXPECT_EQ(orbit_size(g5), 2u);
  }
  EXPECT_EQ(orbit_size(gamma_p(4)), 4u);
}

TEST(Stabilizer, OrbitStabilizerAndFreeQuotientAction) {
  for (auto [p, n] : kSmall) {
    const Modulus mod(p, n);
    for (const auto& g : catalog_gammas(p, n)) {
      const u64 stab = stabilizer_size(g);
      EXPECT_EQ(mod.totient() % stab, 0u);
      EXPECT_EQ(orbit_size(g) * stab, mod.totient());
      const auto orbit = conjugation_orbit(g);
      EXPECT_EQ(orbit.size(), orbit_size(g));
      std::map<std::vector<u64>, u64> hits;
      for (u64 a : mod.units()) {
        const auto c = conjugate(g, UnitAut(mod, a));
        ++hits[{c.table().begin(), c.table().end()}];
      }
      EXPECT_EQ(hits.size(), orbit.size());
      for (const auto& [table, count] : hits) EXPECT_EQ(count, stab);
    }
  }
}

TEST(Predicates, Examples) {
  for (unsigned n = 3; n <= 6; ++n) {
    EXPECT_TRUE(is_antihomomorphism(gamma2(n)));
    EXPECT_TRUE(is_aut_equivariant(gamma2(n)));
  }
  EXPECT_FALSE(is_aut_equivariant(base_gamma(2, 4, Family::G5)));
  EXPECT_FALSE(is_antihomomorphism(gamma_p(4)));
}

TEST(SkewBrace, Examples) {
  EXPECT_TRUE(verify_skew_brace(GammaFunction::trivial(Modulus(2, 4))));
  EXPECT_TRUE(verify_skew_brace(base_gamma(2, 4, Family::M)));
  for (auto [p, n] : {std::pair<u64, unsigned>{2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4},
                      {5, 2}, {7, 2}}) {
    for (const auto& g : catalog_gammas(p, n)) ASSERT_TRUE(verify_skew_brace(g));
  }
  const auto bad = GammaFunction::from_rule(Modulus(2, 3), [](u64 x) { return x == 0 ? 1 : 3; });
  EXPECT_FALSE(verify_skew_brace(bad));
}

TEST(Nu, Examples) {
  const Modulus m8(2, 3);
  const auto g2 = gamma2(3);
  EXPECT_EQ(nu(g2, Residue(m8, 0)), HolomorphElement::identity(m8));
  const auto one = nu(g2, Residue(m8, 1));
  EXPECT_EQ(one.aut.unit(), 5u);
  EXPECT_EQ(one.trans.value(), 1u);
  const auto sq = one.then(one);
  EXPECT_EQ(sq.aut.unit(), 1u);
  EXPECT_EQ(sq.trans.value(), 6u);
  EXPECT_EQ(sq, nu(g2, circle(g2, Residue(m8, 1), Residue(m8, 1))));
}

TEST(Nu, IsHomomorphismAndActsByCircle) {
  for (auto [p, n] : {std::pair<u64, unsigned>{2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2},
                      {7, 2}}) {
    const Modulus mod(p, n);
    for (const auto& g : catalog_gammas(p, n)) {
      for (u64 x = 0; x < mod.value(); ++x) {
        for (u64 y = 0; y < mod.value(); ++y) {
          const Residue rx(mod, x), ry(mod, y);
          ASSERT_EQ(nu(g, rx).then(nu(g, ry)), nu(g, circle(g, rx, ry)));
          ASSERT_EQ(nu(g, ry).act(rx), circle(g, rx, ry));
        }
      }
    }
  }
}

TEST(Nu, InverseMatchesCircleInverse) {
  for (const auto& g : catalog_gammas(2, 5)) {
    const Modulus& mod = g.modulus();
    for (u64 x = 0; x < 32; ++x) {
      const u64 inv = circle_inverse_raw(g, x);
      EXPECT_EQ(circle_raw(g, x, inv), 0u);
      EXPECT_EQ(nu(g, Residue(mod, x)).inverse(), nu(g, Residue(mod, inv)));
    }
  }
}

TEST(Period, EqualsImageSize) {
  for (auto [p, n] : kSmall) {
    for (const auto& g : catalog_gammas(p, n)) EXPECT_EQ(g.period(), g.image_size());
  }
  const Modulus m16(2, 4);
  EXPECT_EQ(GammaFunction::trivial(m16).period(), 1u);
  EXPECT_EQ(gamma2(4).period(), 2u);
}

TEST(InvolutionPowers, AreHomAndAntihomOfPeriodTwo) {
  for (unsigned n = 2; n <= 6; ++n) {
    const Modulus mod(2, n);
    for (u64 a : mod.units()) {
      if (mod.mul(a, a) != 1) continue;
      const auto g = power_table(mod, a);
      EXPECT_TRUE(validate(g)) << a;
      EXPECT_EQ(2 % g.period(), 0u);
      EXPECT_TRUE(is_homomorphism(g));
      EXPECT_TRUE(is_antihomomorphism(g));
    }
  }
}

// Homomorphism, functional equation and killing [G, gamma(G)]: any two of the
// three force the third.
TEST(TwoOfThree, NeverExactlyTwo) {
  std::vector<GammaFunction> pool;
  std::mt19937_64 rng(3);
  for (auto [p, n] : {std::pair<u64, unsigned>{2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}}) {
    const Modulus mod(p, n);
    for (auto& g : catalog_gammas(p, n)) pool.push_back(g);
    for (u64 a : mod.units()) {
      if (mod.pow(a, mod.value()) == 1) pool.push_back(power_table(mod, a));
    }
    const auto units = mod.units();
    for (int i = 0; i < 200; ++i) {
      // Tables of period p: cheap candidates for partial properties.
      std::vector<u64> block(p);
      block[0] = 1;
      for (u64 j = 1; j < p; ++j) block[j] = units[rng() % units.size()];
      pool.push_back(GammaFunction::from_rule(mod, [&](u64 x) { return block[x % p]; }));
    }
  }
  std::size_t hom_only = 0;
  for (const auto& g : pool) {
    const int held = is_homomorphism(g) + validate(g) + kills_commutators(g);
    ASSERT_NE(held, 2);
    hom_only += is_homomorphism(g) && !validate(g);
  }
  EXPECT_GT(hom_only, 0u);  // the pool does exercise the equivalence
}
