#ifndef FLATLOC_NUMERIC_HPP
#define FLATLOC_NUMERIC_HPP

// Exact scalar types and the Eigen glue that lets dense matrices carry them.

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 60
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 120
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
};

}  // namespace Eigen

namespace flatloc {

using BigInt = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<BigInt>;
using IntVector = DenseVector<BigInt>;
using RatMatrix = DenseMatrix<Rational>;

/// Bad user input: malformed text, unknown labels, violated preconditions the
/// caller controls. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation called outside its documented domain by library code.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A catalog object exists mathematically but has no finite model here.
class NotRepresentable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);

/// Floor division and the matching non-negative remainder for m > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& m);

bool is_prime(const BigInt& n);
bool is_squarefree(const BigInt& n);
bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);
bool is_integral(const Rational& q);

/// "num/den" with den >= 1 always present.
std::string rational_to_string(const Rational& q);
/// Compact form: "num" when integral, otherwise "num/den".
std::string rational_to_short_string(const Rational& q);
/// Accepts "n", "-n", "n/d". Throws InputError on anything else.
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

}  // namespace flatloc

#endif  // FLATLOC_NUMERIC_HPP
