#ifndef FLATLOC_SEGRE_HPP
#define FLATLOC_SEGRE_HPP

// Height-one primes of A = k[X,Y,U,V]/(XU - YV) through the embedding
// X = S0*T0, Y = S1*T0, U = S1*T1, V = S0*T1. A prime p is given by its
// bihomogeneous equation f_p in S0,S1,T0,T1 of bidegree (d, e); the class
// group is Z via [p] -> e - d.

#include "flatloc/lcohom.hpp"
#include "flatloc/poly.hpp"
#include "flatloc/verdict.hpp"

#include <Eigen/Core>

#include <string>
#include <variant>

namespace flatloc {

inline const std::vector<std::string> kSegreST{"S0", "S1", "T0", "T1"};
inline const std::vector<std::string> kSegreXYUV{"X", "Y", "U", "V"};

struct Bidegree {
  int d = 0;  // in S0, S1
  int e = 0;  // in T0, T1

  std::string to_string() const;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Throws InputError for zero, constant or non-bihomogeneous input.
Bidegree bidegree(const Polynomial& f);

class BihomogPoly {
 public:
  /// f over S0,S1,T0,T1; throws InputError unless bihomogeneous and nonconstant.
  explicit BihomogPoly(Polynomial f);
  static BihomogPoly parse(const std::string& text);

  const Polynomial& polynomial() const { return f_; }
  Bidegree bidegree() const { return bidegree_; }
  std::string to_string() const { return f_.to_string(); }

 private:
  Polynomial f_;
  Bidegree bidegree_;
};

/// XY_VU: (g(X,Y), g(V,U)), f_p = g(S0,S1).
/// XV_YU: (g(X,V), g(Y,U)), f_p = g(T0,T1).
enum class Orientation { XY_VU, XV_YU };

/// g = alpha*first + beta*second, not both zero.
struct LinearPair {
  Rational alpha;
  Rational beta;
  Orientation orientation = Orientation::XY_VU;

  /// The two generators in X,Y,U,V.
  std::pair<Polynomial, Polynomial> generators() const;
  Polynomial equation() const;  // f_p
  std::string to_string() const;
};

struct PolyPrime {
  BihomogPoly f;
};

using SegrePrime = std::variant<LinearPair, PolyPrime>;

/// "(X,V)", "(X + Y, V + U)" and similar; throws InputError for anything not
/// of the two linear-pair shapes.
LinearPair parse_linear_pair(const std::string& text);

Bidegree psi(const SegrePrime& p);
int rho(const SegrePrime& p);

enum class Irreducibility { Irreducible, Reducible, Unchecked };

/// Exact over Q up to total degree two; Unchecked above unless a variable
/// divides every term.
Irreducibility check_irreducible(const BihomogPoly& f);

/// Preimage under the embedding for d = e, choosing the largest power of X
/// per term; verified by substituting back.
Polynomial to_xyuv(const BihomogPoly& f);
/// X -> S0*T0, Y -> S1*T0, U -> S1*T1, V -> S0*T1.
Polynomial embed(const Polynomial& xyuv);

struct Case1NormalForm {
  /// Rows: new coordinates X', Y', U', V' in terms of X, Y, U, V.
  Eigen::Matrix<Rational, 4, 4> change;
  Rational det;            // X'U' - Y'V' = det*(XU - YV)
  std::string normalized;  // "(X,V)" or "(X,Y)"
  bool certificate = false;

  std::vector<Polynomial> new_coordinates() const;
};

Case1NormalForm case1_normal_form(const LinearPair& p);

/// Bidegree trichotomy: one side zero -> not flat (Cech witness); unequal ->
/// flat, not universal; equal -> principal, classical.
Verdict classify_segre(const SegrePrime& p, int box = 3);

}  // namespace flatloc

#endif  // FLATLOC_SEGRE_HPP
