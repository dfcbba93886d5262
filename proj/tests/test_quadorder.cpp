#include "flatloc/quadorder.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace flatloc;

namespace {

bool is_fundamental(long disc) {
  auto squarefree = [](long m) {
    m = std::labs(m);
    for (long p = 2; p * p <= m; ++p) {
      if (m % (p * p) == 0) return false;
    }
    return true;
  };
  const long r = ((disc % 4) + 4) % 4;
  if (r == 1) return squarefree(disc);
  if (r != 0) return false;
  const long m = disc / 4;
  const long s = ((m % 4) + 4) % 4;
  return (s == 2 || s == 3) && squarefree(m);
}

// Z-basis of an ideal as (rational part, sqrt(D) coefficient) pairs.
std::vector<std::pair<Rational, Rational>> basis(const QuadIdeal& x) {
  const Rational s = x.scale();
  return {{s * Rational(x.a()), Rational(0)}, {s * Rational(x.b(), 2), s * Rational(1, 2)}};
}

std::array<Rational, 3> product_lattice(const QuadIdeal& x, const QuadIdeal& y) {
  const BigInt disc = x.order().discriminant();
  std::vector<std::pair<Rational, Rational>> gens;
  for (const auto& [x1, y1] : basis(x)) {
    for (const auto& [x2, y2] : basis(y)) {
      gens.emplace_back(x1 * x2 + Rational(disc) * y1 * y2, x1 * y2 + x2 * y1);
    }
  }
  return oracle::hermite2(gens);
}

const QuadOrder kMinus5 = QuadOrder::from_d(-5);

QuadIdeal p2() { return std::get<RamifiedPrime>(decompose_prime(kMinus5, 2)).prime; }
SplitPrime p3() { return std::get<SplitPrime>(decompose_prime(kMinus5, 3)); }

}  // namespace

TEST(QuadOrder, Construction) {
  EXPECT_EQ(kMinus5.discriminant(), -20);
  EXPECT_EQ(kMinus5.name(), "Z[sqrt(-5)]");
  EXPECT_EQ(QuadOrder::from_d(-23).discriminant(), -23);
  EXPECT_EQ(QuadOrder::from_d(-23).name(), "Z[(1+sqrt(-23))/2]");
  EXPECT_EQ(QuadOrder::from_discriminant(-20), kMinus5);
  EXPECT_THROW(QuadOrder::from_d(-4), InputError);
  EXPECT_THROW(QuadOrder::from_d(5), InputError);
  EXPECT_THROW(QuadOrder::from_discriminant(-12), InputError);
}

TEST(QuadOrder, DecompositionMatchesKronecker) {
  for (long disc = -3; disc >= -300; --disc) {
    if (!is_fundamental(disc)) continue;
    const QuadOrder order = QuadOrder::from_discriminant(disc);
    for (long ell : {2L, 3L, 5L, 7L, 11L, 13L}) {
      const int k = oracle::kronecker(disc, ell);
      ASSERT_EQ(kronecker_symbol(disc, ell), k) << disc << " " << ell;
      const auto dec = decompose_prime(order, ell);
      if (k == 1) {
        ASSERT_TRUE(std::holds_alternative<SplitPrime>(dec));
        const auto& s = std::get<SplitPrime>(dec);
        EXPECT_EQ(ideal_norm(s.prime), ell);
        EXPECT_EQ(ideal_mul(s.prime, s.conjugate), QuadIdeal::principal_integer(order, ell));
      } else if (k == 0) {
        ASSERT_TRUE(std::holds_alternative<RamifiedPrime>(dec));
        const auto& r = std::get<RamifiedPrime>(dec);
        EXPECT_EQ(ideal_pow(r.prime, 2), QuadIdeal::principal_integer(order, ell));
      } else {
        ASSERT_TRUE(std::holds_alternative<InertPrime>(dec));
        EXPECT_EQ(ideal_norm(std::get<InertPrime>(dec).prime), ell * ell);
      }
    }
  }
}

TEST(QuadOrder, SqrtMinusFivePrimes) {
  EXPECT_EQ(p2().to_string(), "(2, 1+sqrt(-5))");
  EXPECT_EQ(ideal_mul(p2(), p2()), QuadIdeal::principal_integer(kMinus5, 2));
  const auto s = p3();
  EXPECT_EQ(ideal_mul(s.prime, s.conjugate), QuadIdeal::principal_integer(kMinus5, 3));
  EXPECT_TRUE(std::holds_alternative<InertPrime>(decompose_prime(kMinus5, 11)));
  EXPECT_THROW(decompose_prime(kMinus5, 4), InputError);
}

TEST(QuadOrder, PrincipalIdeals) {
  EXPECT_FALSE(is_principal(p2()).has_value());
  EXPECT_FALSE(is_principal(p3().prime).has_value());
  const QuadIdeal six = ideal_mul(p2(), p3().prime);
  const auto g = is_principal(six);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(g->norm(-20), 6);
  EXPECT_TRUE(six.contains(*g));
  const auto two = is_principal(ideal_pow(p2(), 2));
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->to_string(kMinus5), "2");
  EXPECT_EQ(class_order(p2()), 2);
  EXPECT_EQ(class_order(QuadIdeal::unit(kMinus5)), 1);
}

TEST(QuadOrder, MultiplicationMatchesLatticeOracle) {
  for (long disc : {-20L, -23L, -56L, -84L, -71L}) {
    const QuadOrder order = QuadOrder::from_discriminant(disc);
    std::vector<QuadIdeal> primes;
    for (long ell : {2L, 3L, 5L, 7L}) {
      const auto dec = decompose_prime(order, ell);
      if (const auto* s = std::get_if<SplitPrime>(&dec)) {
        primes.push_back(s->prime);
        primes.push_back(s->conjugate);
      } else if (const auto* r = std::get_if<RamifiedPrime>(&dec)) {
        primes.push_back(r->prime);
      }
    }
    for (const auto& x : primes) {
      for (const auto& y : primes) {
        const QuadIdeal z = ideal_mul(x, y);
        EXPECT_EQ(oracle::hermite2(basis(z)), product_lattice(x, y))
            << disc << " " << x.to_string() << " * " << y.to_string();
        EXPECT_EQ(ideal_norm(z), ideal_norm(x) * ideal_norm(y));
      }
    }
  }
}

TEST(QuadOrder, ClassNumbers) {
  EXPECT_EQ(class_number(QuadOrder::from_discriminant(-20)), 2);
  EXPECT_EQ(class_number(QuadOrder::from_discriminant(-4)), 1);
  EXPECT_EQ(class_number(QuadOrder::from_discriminant(-23)), 3);
  for (long disc = -3; disc >= -500; --disc) {
    if (!is_fundamental(disc)) continue;
    const QuadOrder order = QuadOrder::from_discriminant(disc);
    EXPECT_EQ(class_number(order), oracle::reduced_forms(disc).size()) << disc;
    for (const auto& r : reduced_ideals(order)) EXPECT_TRUE(is_reduced(r));
  }
}

TEST(QuadOrder, ReduceKeepsClass) {
  const QuadOrder order = QuadOrder::from_discriminant(-23);
  const auto s = std::get<SplitPrime>(decompose_prime(order, 2));
  const QuadIdeal cube = ideal_pow(s.prime, 3);
  EXPECT_TRUE(is_principal(cube).has_value());
  EXPECT_EQ(reduce(cube), QuadIdeal::unit(order));
  EXPECT_EQ(class_order(s.prime), 3);
}

TEST(QuadOrder, ClassifyDedekind) {
  const Verdict v = classify_dedekind(kMinus5, {p2()});
  EXPECT_EQ(v.flat(), Tri::Yes);
  EXPECT_EQ(v.universal(), Tri::Yes);
  EXPECT_EQ(v.classical(), Tri::Yes);
  const auto& w = std::get<DenominatorsWitness>(v.witness());
  ASSERT_EQ(w.entries.size(), 1u);
  EXPECT_EQ(w.entries[0].class_order, "2");
  EXPECT_EQ(w.entries[0].generator, "2");
  EXPECT_EQ(v.ring_id(), "quad:-5");
  EXPECT_THROW(classify_dedekind(kMinus5, {QuadIdeal::principal_integer(kMinus5, 2)}), InputError);
}

TEST(QuadOrder, GeneratorsOfLargePowers) {
  const QuadOrder order = QuadOrder::from_d(-134);
  EXPECT_EQ(class_number(order), 14);
  const auto s = std::get<SplitPrime>(decompose_prime(order, 13));
  EXPECT_EQ(class_order(s.prime), 14);
  const QuadIdeal power = ideal_pow(s.prime, 14);
  const auto g = is_principal(power);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(g->norm(order.discriminant()), ideal_norm(power));
  EXPECT_TRUE(power.contains(*g));
  EXPECT_FALSE(is_principal(ideal_pow(s.prime, 7)).has_value());
}
