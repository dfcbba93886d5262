#ifndef FLATLOC_POLY_HPP
#define FLATLOC_POLY_HPP

// Sparse multivariate polynomials over Q with named variables, plus a small
// text parser (+, -, *, ^, parentheses, integer or rational coefficients).

#include "flatloc/numeric.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace flatloc {

using Exponent = std::vector<int>;

class Polynomial {
 public:
  explicit Polynomial(std::vector<std::string> variables);
  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial variable(std::vector<std::string> variables, const std::string& name);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  std::size_t variable_index(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Degree in the given subset of variable indices, if every term agrees;
  /// -1 for zero polynomials, -2 when terms disagree.
  int homogeneous_degree_in(const std::vector<std::size_t>& indices) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  Polynomial pow(unsigned n) const;

  /// Replace each variable by a polynomial over `target_variables`.
  Polynomial substitute(const std::map<std::string, Polynomial>& images,
                        const std::vector<std::string>& target_variables) const;

  /// Canonical text: terms ordered by descending exponent vector.
  std::string to_string() const;

 private:
  std::vector<std::string> variables_;
  std::map<Exponent, Rational> terms_;
};

/// Throws InputError on syntax errors or identifiers outside `variables`.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace flatloc

#endif  // FLATLOC_POLY_HPP
