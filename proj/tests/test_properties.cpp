#include "properties.hpp"

#include <gtest/gtest.h>

TEST(Properties, SmithNormalForm) {
  const auto r = props::snf_suite();
  EXPECT_TRUE(r.passed(1000)) << r.summary();
}

TEST(Properties, ElementOrder) {
  const auto r = props::element_order_suite();
  EXPECT_TRUE(r.passed(1000)) << r.summary();
}

TEST(Properties, IdealNorms) {
  const auto r = props::ideal_norm_suite();
  EXPECT_TRUE(r.passed(1000)) << r.summary();
}

TEST(Properties, EllipticGroupLaw) {
  const auto r = props::elliptic_suite();
  EXPECT_TRUE(r.passed(1000)) << r.summary();
}

TEST(Properties, CechDifferentialSquaresToZero) {
  const auto r = props::cech_square_suite();
  EXPECT_TRUE(r.passed(1000)) << r.summary();
}

TEST(Properties, CechVanishesAboveGeneratorCount) {
  const auto r = props::cech_vanishing_suite();
  EXPECT_TRUE(r.passed(50)) << r.summary();
}

TEST(Properties, VerdictInvariants) {
  const auto r = props::verdict_suite();
  EXPECT_TRUE(r.passed(1000)) << r.summary();
}

TEST(Properties, OtherSeeds) {
  EXPECT_TRUE(props::snf_suite(300, 11).passed(300));
  EXPECT_TRUE(props::elliptic_suite(300, 12).passed(300));
  EXPECT_TRUE(props::verdict_suite(300, 13).passed(300));
}
