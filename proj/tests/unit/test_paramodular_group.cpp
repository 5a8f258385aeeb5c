#include "paramodular_fixtures.hpp"

#include <gtest/gtest.h>

using namespace paramodular;
using namespace pm_fixtures;

TEST(ParamodularMember, IdentityIsInEveryLevel) {
  for (std::int64_t p : {2, 3, 5, 7})
    for (int n = 0; n <= 4; ++n) EXPECT_TRUE(paramodular_member({identity4(), p, n}));
}

TEST(ParamodularMember, LowerLeftSlotNeedsValuationN) {
  for (std::int64_t p : {2, 3, 5})
    for (int n = 1; n <= 3; ++n) {
      EXPECT_FALSE(paramodular_member({root_element(1, 0, p_power(p, n - 1)), p, n}));
      EXPECT_TRUE(paramodular_member({root_element(1, 0, p_power(p, n)), p, n}));
    }
}

TEST(ParamodularMember, UpperRightSlotAllowsInverseP) {
  for (std::int64_t p : {2, 3, 5})
    for (int n = 0; n <= 3; ++n) {
      Matrix4 g = identity4();
      g[0][3] = p_power(p, -n);
      ASSERT_TRUE(similitude(g).has_value());
      EXPECT_TRUE(paramodular_member({g, p, n}));
      g[0][3] = p_power(p, -n - 1);
      EXPECT_FALSE(paramodular_member({g, p, n}));
    }
}

TEST(ParamodularMember, RootElementsAreSymplectic) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (r == c) continue;
      Matrix4 g = root_element(r, c, 7);
      auto lambda = similitude(g);
      ASSERT_TRUE(lambda.has_value()) << r << "," << c;
      EXPECT_EQ(*lambda, 1);
    }
}

TEST(ParamodularMember, EverySlotMatchesItsBound) {
  for (std::int64_t p : {2, 3, 5})
    for (int n = 0; n <= 2; ++n)
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          if (r == c) continue;
          int bound = paramodular_slot_bound(r, c, n);
          // a root element touches a partner slot with its own bound; use the stricter of the two
          auto [pr, pc] = partner_slot(r, c);
          int need = std::max(bound, paramodular_slot_bound(pr, pc, n));
          EXPECT_TRUE(paramodular_member({root_element(r, c, p_power(p, need)), p, n})) << r << c;
          EXPECT_FALSE(paramodular_member({root_element(r, c, p_power(p, need - 1)), p, n})) << r << c;
        }
}

TEST(ParamodularMember, RejectsNonUnitSimilitudeAndNonSymplectic) {
  Matrix4 g = identity4();
  g[0][0] = 3;
  EXPECT_FALSE(similitude(g).has_value());
  EXPECT_FALSE(paramodular_member({g, 2, 0}));
  Matrix4 t = torus(3, 3, 9);
  ASSERT_TRUE(similitude(t).has_value());
  EXPECT_FALSE(paramodular_member({t, 3, 0}));
  EXPECT_TRUE(paramodular_member({t, 2, 0}));
}

TEST(ParamodularMember, LevelZeroMatchesIntegralSymplecticSimilitudes) {
  gen::Gen g(31);
  int members = 0;
  for (int i = 0; i < 300; ++i) {
    std::int64_t p = g.pick(std::vector<std::int64_t>{2, 3, 5});
    Matrix4 m = random_similitude(g, p);
    bool oracle = integral_gsp4_oracle(m, p);
    members += oracle;
    EXPECT_EQ(paramodular_member({m, p, 0}), oracle);
  }
  EXPECT_GT(members, 30);
  EXPECT_LT(members, 270);
}
