#ifndef FLATLOC_QUADORDER_HPP
#define FLATLOC_QUADORDER_HPP

// Ideal arithmetic in maximal orders of imaginary quadratic fields.
//
// Elements are written (u + v*sqrt(D))/2 with u = v*D (mod 2), D the field
// discriminant. A primitive ideal is the Z-module [a, (b + sqrt(D))/2] with
// b^2 = D (mod 4a); a general fractional ideal carries a positive rational
// scale in front. Ideals of this shape correspond to the binary quadratic
// form (a, b, (b^2 - D)/4a).

#include "flatloc/verdict.hpp"
#include "flatloc/numeric.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace flatloc {

class QuadOrder {
 public:
  /// d squarefree and negative.
  static QuadOrder from_d(const BigInt& d);
  /// D a negative fundamental discriminant.
  static QuadOrder from_discriminant(const BigInt& disc);

  const BigInt& d() const { return d_; }
  const BigInt& discriminant() const { return disc_; }
  /// "Z[sqrt(-5)]", "Z[(1+sqrt(-23))/2]"
  std::string name() const;

  friend bool operator==(const QuadOrder&, const QuadOrder&) = default;

 private:
  QuadOrder(BigInt d, BigInt disc) : d_(std::move(d)), disc_(std::move(disc)) {}
  BigInt d_;
  BigInt disc_;
};

/// (u + v*sqrt(D))/2 with rational u, v.
struct QuadNumber {
  Rational u;
  Rational v;

  Rational norm(const BigInt& disc) const { return (u * u - disc * v * v) / 4; }
  bool is_integral(const BigInt& disc) const;
  /// Human form in terms of sqrt(d), e.g. "2+sqrt(-5)".
  std::string to_string(const QuadOrder& order) const;

  friend bool operator==(const QuadNumber&, const QuadNumber&) = default;
};

QuadNumber multiply(const QuadNumber& x, const QuadNumber& y, const BigInt& disc);

class QuadIdeal {
 public:
  /// Canonicalizes b into (-a, a]. Throws InputError if b^2 != D mod 4a.
  QuadIdeal(const QuadOrder& order, BigInt a, BigInt b, Rational scale = Rational(1));
  static QuadIdeal unit(const QuadOrder& order);
  static QuadIdeal principal_integer(const QuadOrder& order, const BigInt& n);

  const QuadOrder& order() const { return order_; }
  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const Rational& scale() const { return scale_; }
  BigInt c() const;  // (b^2 - D)/4a

  bool is_primitive() const { return scale_ == 1; }
  bool is_integral() const;
  QuadIdeal primitive_part() const;
  QuadIdeal conjugate() const;

  /// x in I, tested on the Z-basis.
  bool contains(const QuadNumber& x) const;

  std::string to_string() const;

  friend bool operator==(const QuadIdeal&, const QuadIdeal&) = default;

 private:
  QuadOrder order_;
  BigInt a_;
  BigInt b_;
  Rational scale_;
};

struct SplitPrime {
  QuadIdeal prime;
  QuadIdeal conjugate;
};
struct InertPrime {
  QuadIdeal prime;  // (ell) itself
};
struct RamifiedPrime {
  QuadIdeal prime;
};
using PrimeDecomposition = std::variant<SplitPrime, InertPrime, RamifiedPrime>;

/// Kronecker symbol (D / ell) for a rational prime ell.
int kronecker_symbol(const BigInt& disc, const BigInt& ell);

/// Throws InputError if ell is not prime.
PrimeDecomposition decompose_prime(const QuadOrder& order, const BigInt& ell);

QuadIdeal ideal_mul(const QuadIdeal& x, const QuadIdeal& y);
QuadIdeal ideal_pow(const QuadIdeal& x, unsigned n);
Rational ideal_norm(const QuadIdeal& x);

/// Reduced primitive representative of the class of x (|b| <= a <= c).
QuadIdeal reduce(const QuadIdeal& x);
bool is_reduced(const QuadIdeal& x);

/// A generator alpha with (alpha) = x, or nullopt. Sign normalized so the
/// rational part is positive (or, if zero, the sqrt part is positive).
std::optional<QuadNumber> is_principal(const QuadIdeal& x);

/// All reduced primitive forms (a, b, c) of the order's discriminant.
std::vector<QuadIdeal> reduced_ideals(const QuadOrder& order);
BigInt class_number(const QuadOrder& order);
/// Least n >= 1 with x^n principal.
BigInt class_order(const QuadIdeal& x);

/// True iff x is a nonzero prime ideal of the order.
bool is_prime_ideal(const QuadIdeal& x);

/// Dimension one: flat = universal = classical = yes, with a generator of
/// p^order for each p in primes as the denominators.
Verdict classify_dedekind(const QuadOrder& order, const std::vector<QuadIdeal>& primes);

}  // namespace flatloc

#endif  // FLATLOC_QUADORDER_HPP
