#include "flatloc/spectool.hpp"

#include "flatloc/numeric.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace flatloc;

namespace {

SpecPoset spec_z() { return SpecPoset::parse("(0) < (2)\n(0) < (3)\n(0) < (5)\n"); }

SpecPoset plane() {
  return SpecPoset::parse(
      "# k[x,y] near the origin\n"
      "(0) < (x)\n(0) < (y)\n(x) < m\n(y) < m\n");
}

}  // namespace

TEST(SpecPoset, ParseAndHeights) {
  const SpecPoset p = plane();
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.height("(0)"), 0);
  EXPECT_EQ(p.height("(x)"), 1);
  EXPECT_EQ(p.height("m"), 2);
  EXPECT_EQ(p.up_set("(x)"), (NodeSet{"(x)", "m"}));
  EXPECT_EQ(p.parents("(0)"), (NodeSet{"(x)", "(y)"}));
  EXPECT_EQ(p.children("m"), (NodeSet{"(x)", "(y)"}));
  EXPECT_THROW(p.height("z"), InputError);
}

TEST(SpecPoset, IsolatedNodesAndErrors) {
  const SpecPoset p = SpecPoset::parse("a\nb < c\n");
  EXPECT_EQ(p.nodes(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_THROW(SpecPoset::parse("a < b\nb < a\n"), InputError);
  EXPECT_THROW(SpecPoset::parse("a < < b\n"), InputError);
  SpecPoset q;
  q.add_relation("x", "y");
  EXPECT_THROW(q.add_relation("y", "x"), InputError);
  EXPECT_THROW(q.add_relation("x", "x"), InputError);
}

TEST(SpecPoset, Closure) {
  const SpecPoset p = plane();
  EXPECT_EQ(specialisation_closure(p, {"(x)"}), (NodeSet{"(x)", "m"}));
  EXPECT_TRUE(is_closed(p, {"m"}));
  EXPECT_FALSE(is_closed(p, {"(x)"}));
  EXPECT_EQ(minimal_primes(p, {"(x)", "(y)", "m"}), (NodeSet{"(x)", "(y)"}));
  EXPECT_EQ(specialisation_closure(p, {"(0)"}).size(), 4u);
}

TEST(SpecPoset, EnumerationCounts) {
  EXPECT_EQ(enumerate_closed(SpecPoset::parse("a\n")).count, 2u);
  EXPECT_EQ(enumerate_closed(SpecPoset::parse("a < b\n")).count, 3u);
  const auto z = enumerate_closed(spec_z());
  EXPECT_EQ(z.count, 9u);
  EXPECT_EQ(z.sets.size(), 9u);
  for (const auto& s : z.sets) EXPECT_TRUE(is_closed(spec_z(), s));
  EXPECT_TRUE(enumerate_closed(spec_z(), false).sets.empty());
  EXPECT_EQ(enumerate_closed(plane()).count, 6u);
  EXPECT_THROW(enumerate_closed(spec_z(), true, 3), InputError);
}

TEST(SpecPoset, EnumerationMatchesBruteForce) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    std::vector<std::pair<std::size_t, std::size_t>> less;
    SpecPoset p;
    for (std::size_t i = 0; i < n; ++i) p.add_node("n" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng() % 3 == 0) {
          p.add_relation("n" + std::to_string(i), "n" + std::to_string(j));
          less.emplace_back(i, j);
        }
      }
    }
    EXPECT_EQ(enumerate_closed(p, false).count, oracle::count_up_closed(n, less));
  }
}

TEST(SpecPoset, HeightCondition) {
  const SpecPoset p = plane();
  EXPECT_FALSE(check_height_condition(p, {"m"}));
  EXPECT_TRUE(check_height_condition(p, {"(x)", "m"}));
  EXPECT_TRUE(check_height_condition(spec_z(), {"(2)", "(3)"}));
  EXPECT_THROW(check_height_condition(p, {"(x)"}), InputError);
}

TEST(SpecPoset, ClassicalSupport) {
  const SpecPoset p = plane();
  EXPECT_TRUE(classical_support_check(p, {"(x)", "m"}, {{"(x)"}}));
  EXPECT_FALSE(classical_support_check(p, {"(x)", "(y)", "m"}, {{"(x)"}}));
  EXPECT_TRUE(classical_support_check(p, {"(x)", "(y)", "m"}, {{"(x)"}, {"(y)"}}));
  EXPECT_EQ(node_set_to_string({"a", "b"}), "{a, b}");
  EXPECT_EQ(node_set_to_string({}), "{}");
}
