#ifndef FLATLOC_ELLIPTIC_HPP
#define FLATLOC_ELLIPTIC_HPP

// Exact rational arithmetic on y^2 = x^3 + ax + b and the classifier for
// height-one primes of the cone A = Q[X,Y,Z]/(X^3 + aXZ^2 + bZ^3 - Y^2 Z).
//
// The neutral element O = (0:1:0) is an inflection point, the tangent there
// is Z = 0, and div(Z) = 3*(O) on the curve.

#include "flatloc/divisors.hpp"
#include "flatloc/poly.hpp"
#include "flatloc/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flatloc {

/// X^3 + aXZ^2 + bZ^3 - Y^2 Z.
struct HomogeneousCubic {
  Rational a;
  Rational b;

  /// Accepts any nonzero multiple of the shape above in variables X, Y, Z.
  static HomogeneousCubic from_polynomial(const Polynomial& f);
  Polynomial to_polynomial() const;
  /// -16(4a^3 + 27b^2)
  Rational discriminant() const { return -16 * (4 * a * a * a + 27 * b * b); }
};

class ECPoint {
 public:
  static ECPoint infinity() { return ECPoint(); }
  static ECPoint affine(Rational x, Rational y) { return ECPoint(std::move(x), std::move(y)); }

  bool is_infinity() const { return infinity_; }
  const Rational& x() const;
  const Rational& y() const;
  bool is_integral() const;

  /// "O" or "(x,y)".
  std::string label() const;

  friend bool operator==(const ECPoint& p, const ECPoint& q);
  friend bool operator<(const ECPoint& p, const ECPoint& q);

 private:
  ECPoint() : infinity_(true) {}
  ECPoint(Rational x, Rational y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}
  bool infinity_;
  Rational x_;
  Rational y_;
};

class WeierstrassCurve {
 public:
  /// Throws InputError for singular curves (discriminant zero).
  WeierstrassCurve(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& discriminant() const { return discriminant_; }
  bool is_integral_model() const { return is_integral(a_) && is_integral(b_); }
  bool contains(const ECPoint& p) const;
  Rational rhs(const Rational& x) const { return x * x * x + a_ * x + b_; }

  /// "ell:a,b"
  std::string id() const;
  /// "y^2 = x^3 - 4"
  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
  Rational discriminant_;
};

WeierstrassCurve from_homogeneous(const HomogeneousCubic& cubic);

/// Group law; throws InputError for points off the curve.
ECPoint add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q);
ECPoint negate(const WeierstrassCurve& e, const ECPoint& p);
ECPoint mul(const WeierstrassCurve& e, const BigInt& n, const ECPoint& p);

struct TorsionResult {
  enum class Kind { Finite, NonTorsion, Unknown };
  Kind kind = Kind::Unknown;
  unsigned order = 0;  // valid for Finite
  std::string reason;
  std::string citation;

  bool is_finite() const { return kind == Kind::Finite; }
};

/// Exact test on integral models: least n <= 12 with nP = O, else non-torsion
/// by the Mazur bound; early exit on a non-integral multiple (Nagell-Lutz).
TorsionResult torsion_order(const WeierstrassCurve& e, const ECPoint& p);

/// Image of a class in Cl A = E(k) x Z/3.
struct ClassImage {
  ECPoint point = ECPoint::infinity();
  int degree_mod3 = 0;

  std::string to_string() const;
  friend bool operator==(const ClassImage&, const ClassImage&) = default;
};

/// [p] -> (P, 1 mod 3) for the prime of a rational point P.
ClassImage cl_class(const WeierstrassCurve& e, const ECPoint& p);
/// Class of sum n_i (P_i): (sum n_i P_i, sum n_i mod 3).
ClassImage cl_class_of(const WeierstrassCurve& e,
                       const std::vector<std::pair<ECPoint, long>>& divisor);
ClassImage add_classes(const WeierstrassCurve& e, const ClassImage& c1, const ClassImage& c2);
/// The tangent at O: div(Z) = 3*(O).
ClassImage tangent_class(const WeierstrassCurve& e);

/// xX + yY + zZ
struct LinearForm {
  Rational x;
  Rational y;
  Rational z;

  std::string to_string() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// One factor of a straight-line product. `zeros` lists the affine (or O)
/// intersection points with multiplicity; `pole_order` is the order of the
/// pole of form/Z at O (3 for chords and tangents, 2 for verticals).
struct LineFactor {
  LinearForm form;
  std::vector<ECPoint> zeros;
  int pole_order = 0;
  long exponent = 0;
};

using LineProgram = std::vector<LineFactor>;

/// Straight-line function with formal divisor n(P) - n(O). Requires n to be
/// the exact order of P.
LineProgram miller_function(const WeierstrassCurve& e, const ECPoint& p, unsigned n);

/// Re-derives each factor's intersection with the curve from its equation.
bool verify_line_factor(const WeierstrassCurve& e, const LineFactor& factor);
/// sum zeros - pole_order*(O), labels from ECPoint::label().
Divisor line_divisor(const LineFactor& factor);
Divisor program_divisor(const LineProgram& program);
/// Every factor verifies and the divisor equals n(P) - n(O).
bool check_line_program(const WeierstrassCurve& e, const LineProgram& program, const ECPoint& p,
                        unsigned n);

/// Flat always; universal = classical = (P torsion). Pic A = 0 forces the
/// two to agree.
Verdict classify_point(const WeierstrassCurve& e, const ECPoint& p);

/// Shadow of Cl(E) restricted to Z(deg) + <P>: labels "deg" and P's label.
DivisorClassModel class_group_model(const WeierstrassCurve& e, const ECPoint& generator);

/// "x,y" with rational coordinates, or "O".
ECPoint parse_point(const std::string& text);

}  // namespace flatloc

#endif  // FLATLOC_ELLIPTIC_HPP
