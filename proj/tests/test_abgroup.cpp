#include "flatloc/abgroup.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace flatloc;

namespace {

IntMatrix make(std::initializer_list<std::initializer_list<long>> rows, Eigen::Index cols) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (long x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

IntVector vec(std::initializer_list<long> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST(SmithNormalForm, IdentityIsFixed) {
  const IntMatrix id = IntMatrix::Identity(2, 2);
  const auto snf = smith_normal_form(id);
  EXPECT_EQ(snf.diagonal, id);
  EXPECT_EQ(snf.left, id);
  EXPECT_EQ(snf.right, id);
}

TEST(SmithNormalForm, RowOfOnes) {
  const auto snf = smith_normal_form(make({{1, 1}}, 2));
  EXPECT_EQ(snf.diagonal, make({{1, 0}}, 2));
}

TEST(SmithNormalForm, TwoByTwoAgainstDeterminantalDivisors) {
  const IntMatrix m = make({{2, 4}, {6, 8}}, 2);
  const auto snf = smith_normal_form(m);
  EXPECT_EQ(snf.diagonal, make({{2, 0}, {0, 4}}, 2));
  const auto oracle_diag = oracle::smith_diagonal({{2, 4}, {6, 8}}, 2);
  ASSERT_EQ(oracle_diag.size(), 2u);
  EXPECT_EQ(oracle_diag[0], 2);
  EXPECT_EQ(oracle_diag[1], 4);
  EXPECT_EQ(snf.left * m * snf.right, snf.diagonal);
}

TEST(SmithNormalForm, EmptyMatrices) {
  const IntMatrix empty(0, 3);
  const auto snf = smith_normal_form(empty);
  EXPECT_EQ(snf.diagonal.rows(), 0);
  EXPECT_EQ(snf.right, IntMatrix::Identity(3, 3));
  EXPECT_EQ(cokernel_structure(empty).free_rank, 3u);
}

TEST(SmithNormalForm, NegativeEntriesGiveNonNegativeDiagonal) {
  const auto snf = smith_normal_form(make({{-3, 0}, {0, -6}}, 2));
  EXPECT_EQ(snf.diagonal, make({{3, 0}, {0, 6}}, 2));
}

TEST(Determinant, BareissMatchesCofactor) {
  const IntMatrix m = make({{2, -1, 3}, {4, 0, 1}, {-2, 5, 7}}, 3);
  std::vector<std::vector<BigInt>> rows{{2, -1, 3}, {4, 0, 1}, {-2, 5, 7}};
  EXPECT_EQ(exact_determinant(m), oracle::cofactor_det(rows));
  EXPECT_EQ(exact_rank(m), 3);
  EXPECT_EQ(exact_rank(make({{1, 2}, {2, 4}}, 2)), 1);
}

TEST(Cokernel, Examples) {
  EXPECT_EQ(cokernel_structure(make({{1, 1}}, 2)).to_string(), "Z");
  EXPECT_EQ(cokernel_structure(make({{2}}, 1)).to_string(), "Z/2");
  const GroupStructure g = cokernel_structure(make({{3, 0}, {0, 0}}, 2));
  EXPECT_EQ(g.free_rank, 1u);
  ASSERT_EQ(g.invariant_factors.size(), 1u);
  EXPECT_EQ(g.invariant_factors[0], 3);
  EXPECT_EQ(g.to_string(), "Z + Z/3");
  EXPECT_EQ(cokernel_structure(IntMatrix::Identity(2, 2)).to_string(), "0");
}

TEST(Cokernel, StructureString) {
  GroupStructure g{2, {BigInt(2), BigInt(6)}};
  EXPECT_EQ(g.to_string(), "Z^2 + Z/2 + Z/6");
  EXPECT_FALSE(g.is_finite());
}

TEST(ElementOrder, Examples) {
  const AbelianGroupPresentation zz(2, make({{1, 1}}, 2));
  EXPECT_EQ(element_order(zz, vec({0, 0})), ElementOrder::finite(1));
  EXPECT_FALSE(element_order(zz, vec({1, 0})).is_finite());
  EXPECT_EQ(element_order(zz, vec({1, -1})).to_string(), "infinite");
  EXPECT_EQ(element_order(zz, vec({1, 1})), ElementOrder::finite(1));

  const AbelianGroupPresentation z2(1, make({{2}}, 1));
  EXPECT_EQ(element_order(z2, vec({1})), ElementOrder::finite(2));
  EXPECT_EQ(element_order(z2, vec({2})), ElementOrder::finite(1));
}

TEST(ElementOrder, MixedTorsion) {
  // Z/4 + Z/6 presented with a non-diagonal relation matrix.
  const AbelianGroupPresentation g(2, make({{4, 0}, {4, 6}}, 2));
  EXPECT_EQ(element_order(g, vec({1, 0})), ElementOrder::finite(4));
  EXPECT_EQ(element_order(g, vec({0, 1})), ElementOrder::finite(6));
  EXPECT_EQ(element_order(g, vec({1, 1})), ElementOrder::finite(12));
  EXPECT_EQ(element_order(g, vec({2, 3})), ElementOrder::finite(2));
}

TEST(ElementOrder, DimensionMismatchIsInputError) {
  const AbelianGroupPresentation g(2);
  EXPECT_THROW(element_order(g, vec({1})), InputError);
}

TEST(ElementOrder, FreeGroupWithoutRelations) {
  const AbelianGroupPresentation g(3);
  EXPECT_FALSE(element_order(g, vec({0, 0, 1})).is_finite());
  EXPECT_EQ(g.structure().to_string(), "Z^3");
}

TEST(Presentation, WithRelation) {
  const AbelianGroupPresentation g(2);
  const auto q = g.with_relation(vec({1, 1}));
  EXPECT_EQ(q.structure().to_string(), "Z");
  EXPECT_THROW(g.with_relation(vec({1})), InputError);
}

TEST(MatrixText, ParseAndFormat) {
  const IntMatrix m = parse_int_matrix("2 3\n1 2 3\n-4 5 123456789012345678901234567890\n");
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m(1, 2), BigInt("123456789012345678901234567890"));
  EXPECT_EQ(parse_int_matrix(format_int_matrix(m)), m);
  EXPECT_THROW(parse_int_matrix("2 2\n1 2 3"), InputError);
  EXPECT_THROW(parse_int_matrix("1 1\nx"), InputError);
  EXPECT_THROW(parse_int_matrix("1 1\n1 2"), InputError);
}
