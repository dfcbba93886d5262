#include "flatloc/lcohom.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace flatloc;

namespace {

// Independent Cech complex over all subsets of the generators (zero pieces
// kept as zero columns), with ranks taken over Q.
std::size_t oracle_cech_dim(const MonomialAlgebra& algebra, const std::vector<std::size_t>& gens,
                            std::size_t i, const Multidegree& a) {
  const std::size_t g = gens.size();
  auto piece = [&](std::uint32_t mask) {
    std::vector<bool> inverted(algebra.size(), false);
    for (std::size_t k = 0; k < g; ++k) {
      if (mask >> k & 1U) inverted[gens[k]] = true;
    }
    std::vector<bool> face(algebra.size(), false);
    for (std::size_t v = 0; v < algebra.size(); ++v) {
      if (a[v] < 0 && !inverted[v]) return false;
      face[v] = inverted[v] || a[v] > 0;
    }
    for (const auto& rel : algebra.relations()) {
      bool all = true;
      for (std::size_t v : rel) all = all && face[v];
      if (all) return false;
    }
    return true;
  };
  auto subsets = [&](std::size_t k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1U << g); ++m) {
      if (static_cast<std::size_t>(__builtin_popcount(m)) == k) out.push_back(m);
    }
    return out;
  };
  auto rank_of = [&](std::size_t j) -> std::size_t {
    if (j + 1 > g) return 0;
    const auto src = subsets(j);
    const auto dst = subsets(j + 1);
    std::vector<std::vector<Rational>> m(dst.size(), std::vector<Rational>(src.size(), 0));
    for (std::size_t r = 0; r < dst.size(); ++r) {
      for (std::size_t c = 0; c < src.size(); ++c) {
        if ((src[c] & ~dst[r]) != 0) continue;
        if (!piece(src[c]) || !piece(dst[r])) continue;
        const std::uint32_t added = dst[r] & ~src[c];
        const int position = __builtin_popcount(dst[r] & (added - 1));
        m[r][c] = position % 2 == 0 ? 1 : -1;
      }
    }
    return oracle::rational_rank(m);
  };
  std::size_t chain = 0;
  for (std::uint32_t m : subsets(i)) chain += piece(m) ? 1 : 0;
  const std::size_t out_rank = rank_of(i);
  const std::size_t in_rank = i == 0 ? 0 : rank_of(i - 1);
  return chain - out_rank - in_rank;
}

MonomialAlgebra xyu() { return MonomialAlgebra::parse("X,Y,U", "XU"); }

}  // namespace

TEST(MonomialAlgebra, ParseAndKill) {
  const MonomialAlgebra a = MonomialAlgebra::parse("X,Y,U,V", "XU,YV");
  EXPECT_EQ(a.to_string(), "k[X,Y,U,V]/(XU,YV)");
  EXPECT_EQ(a.dimension(), 2u);
  EXPECT_EQ(a.kill("Y").to_string(), "k[X,U,V]/(XU)");
  EXPECT_EQ(MonomialAlgebra::parse("X,Y,U", "X*U").to_string(), "k[X,Y,U]/(XU)");
  EXPECT_EQ(MonomialAlgebra::parse("X,Y", "").to_string(), "k[X,Y]");
  EXPECT_EQ(MonomialAlgebra::parse("X,Y", "").dimension(), 2u);
  EXPECT_THROW(MonomialAlgebra::parse("X,X", ""), InputError);
  EXPECT_THROW(MonomialAlgebra::parse("X,Y", "XZ"), InputError);
  EXPECT_THROW(MonomialAlgebra::parse("X,Y", "X,XY"), InputError);
  EXPECT_THROW(VariableIdeal::from_names(a, {}), InputError);
  EXPECT_EQ(VariableIdeal::from_names(a, {"Y", "X"}).to_string(a), "(X,Y)");
}

TEST(Cech, PolynomialRingTopDegree) {
  const MonomialAlgebra a = MonomialAlgebra::parse("X,Y", "");
  const VariableIdeal m = VariableIdeal::from_names(a, {"X", "Y"});
  EXPECT_EQ(cech_dim(a, m, 2, {-1, -1}), 1u);
  EXPECT_EQ(cech_dim(a, m, 2, {-1, 0}), 0u);
  EXPECT_EQ(cech_dim(a, m, 2, {-3, -2}), 1u);
  EXPECT_EQ(cech_dim(a, m, 1, {-1, -1}), 0u);
  EXPECT_EQ(cech_dim(a, m, 0, {0, 0}), 0u);
}

TEST(Cech, DifferentialSquaresToZero) {
  const MonomialAlgebra a = MonomialAlgebra::parse("X,Y,U,V", "XU,YV");
  const VariableIdeal i = VariableIdeal::from_names(a, {"X", "Y", "V"});
  for (const auto& deg : box_degrees(4, 2)) {
    for (std::size_t j = 0; j + 2 <= 3; ++j) {
      const IntMatrix d0 = cech_differential(a, i, j, deg);
      const IntMatrix d1 = cech_differential(a, i, j + 1, deg);
      if (d0.size() == 0 || d1.size() == 0) continue;
      ASSERT_EQ(d1.cols(), d0.rows());
      EXPECT_TRUE((d1 * d0).isZero()) << multidegree_to_string(deg);
    }
  }
}

TEST(Cech, MatchesIndependentComplex) {
  const std::vector<std::pair<MonomialAlgebra, std::vector<std::string>>> cases{
      {MonomialAlgebra::parse("X,Y,U", "XU"), {"X", "Y"}},
      {MonomialAlgebra::parse("X,Y,U", "XU"), {"X", "U"}},
      {MonomialAlgebra::parse("X,Y,U,V", "XU,YV"), {"X", "Y"}},
      {MonomialAlgebra::parse("X,Y,U,V", "XU"), {"X", "V", "Y"}},
      {MonomialAlgebra::parse("X,Y,Z", "XYZ"), {"X", "Y", "Z"}},
  };
  for (const auto& [a, names] : cases) {
    const VariableIdeal ideal = VariableIdeal::from_names(a, names);
    for (const auto& deg : box_degrees(a.size(), 2)) {
      for (std::size_t i = 0; i <= names.size(); ++i) {
        ASSERT_EQ(cech_dim(a, ideal, i, deg), oracle_cech_dim(a, ideal.generators, i, deg))
            << a.to_string() << " " << ideal.to_string(a) << " H^" << i << " "
            << multidegree_to_string(deg);
      }
    }
  }
}

TEST(Cech, Witnesses) {
  const MonomialAlgebra a = xyu();
  const auto r = certify_nonvanishing(a, VariableIdeal::from_names(a, {"X", "Y"}), 2, 3);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, (Multidegree{-1, -1, 0}));

  const MonomialAlgebra b = MonomialAlgebra::parse("X,U,V", "XU");
  const auto s = certify_nonvanishing(b, VariableIdeal::from_names(b, {"X", "V"}), 2, 3);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_EQ(*s.witness, (Multidegree{-1, 0, -1}));
  EXPECT_THROW(certify_nonvanishing(b, VariableIdeal::from_names(b, {"X"}), 1, 0), InputError);
}

TEST(Cech, VanishingByLength) {
  const MonomialAlgebra a = xyu();
  const VariableIdeal xu = VariableIdeal::from_names(a, {"X", "U"});
  EXPECT_EQ(effective_length(a, xu), 1u);
  EXPECT_TRUE(vanishes_by_length(a, xu, 2));
  const auto r = certify_nonvanishing(a, xu, 2, 2);
  EXPECT_TRUE(r.vanishes);
  EXPECT_FALSE(r.witness.has_value());

  const VariableIdeal xy = VariableIdeal::from_names(a, {"X", "Y"});
  EXPECT_FALSE(vanishes_by_length(a, xy, 2));
  EXPECT_TRUE(vanishes_by_length(a, xy, 3));
}

TEST(Cech, FirstCohomologyOfThePlaneVanishesInBox) {
  const MonomialAlgebra a = MonomialAlgebra::parse("X,Y", "");
  const auto r = certify_nonvanishing(a, VariableIdeal::from_names(a, {"X", "Y"}), 1, 2);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_FALSE(r.vanishes);
  EXPECT_EQ(r.scanned, 25u);
}

TEST(Cech, QuotientCertificate) {
  const MonomialAlgebra a = MonomialAlgebra::parse("X,Y,U,V", "XU");
  const VariableIdeal xv = VariableIdeal::from_names(a, {"X", "V"});
  const auto cert = nonvanish_via_quotient(a, "Y", xv, 2, 3);
  EXPECT_EQ(cert.quotient.to_string(), "k[X,U,V]/(XU)");
  EXPECT_EQ(cert.ideal.to_string(cert.quotient), "(X,V)");
  ASSERT_TRUE(cert.result.witness.has_value());
  EXPECT_EQ(cert.steps.size(), 3u);
  EXPECT_THROW(nonvanish_via_quotient(a, "Y", xv, 1, 3), PreconditionError);
  EXPECT_THROW(nonvanish_via_quotient(a, "X", xv, 2, 3), InputError);
}

TEST(Cech, BlockComplexAgreesWithPieces) {
  for (const auto& [vars, rels, gens] :
       std::vector<std::tuple<std::string, std::string, std::vector<std::string>>>{
           {"X,Y,U", "XU", {"X", "Y"}},
           {"X,Y,U,V", "XU,YV", {"X", "Y", "U"}},
           {"X,Y", "", {"X", "Y"}}}) {
    const MonomialAlgebra a = MonomialAlgebra::parse(vars, rels);
    const VariableIdeal i = VariableIdeal::from_names(a, gens);
    EXPECT_EQ(box_piecewise_dims(a, i, 2), box_total_dims(a, i, 2)) << a.to_string();
  }
}

TEST(Cech, BoxOrder) {
  const auto degs = box_degrees(2, 1);
  ASSERT_EQ(degs.size(), 9u);
  EXPECT_EQ(degs[0], (Multidegree{0, 0}));
  EXPECT_EQ(degs[1], (Multidegree{-1, 0}));
  EXPECT_EQ(multidegree_to_string({-1, -1, 0}), "(-1,-1,0)");
}
