#ifndef FLATLOC_DIVISORS_HPP
#define FLATLOC_DIVISORS_HPP

// Weil divisors on labelled height-one primes and class-group models.

#include "flatloc/abgroup.hpp"

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace flatloc {

/// Finite formal sum of labelled primes. Zero coefficients are never stored.
class Divisor {
 public:
  Divisor() = default;
  static Divisor prime(const std::string& label, const BigInt& coefficient = 1);

  BigInt coefficient(const std::string& label) const;
  const std::map<std::string, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;
  std::vector<std::string> support() const;

  Divisor& add_term(const std::string& label, const BigInt& coefficient);
  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);

  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator-(const Divisor& a);
  friend Divisor operator*(const BigInt& k, const Divisor& a);
  friend bool operator==(const Divisor&, const Divisor&) = default;

  /// e.g. "2*(p) - (q)", "0" when empty.
  std::string to_string() const;
  /// {label: coefficient}
  nlohmann::json to_json() const;
  static Divisor from_json(const nlohmann::json& j);

 private:
  std::map<std::string, BigInt> terms_;
};

inline Divisor add(const Divisor& a, const Divisor& b) { return a + b; }
inline Divisor negate(const Divisor& a) { return -a; }
inline bool is_effective(const Divisor& a) { return a.is_effective(); }

/// Div over finitely many listed primes modulo chosen principal divisors.
class DivisorClassModel {
 public:
  DivisorClassModel(std::vector<std::string> primes, std::vector<Divisor> principal_relations = {});

  const std::vector<std::string>& primes() const { return primes_; }
  const std::vector<Divisor>& principal_relations() const { return relations_; }

  /// Coordinates in the listed prime basis; throws InputError on unknown labels.
  IntVector coordinates(const Divisor& d) const;
  AbelianGroupPresentation presentation() const;
  GroupStructure structure() const { return presentation().structure(); }

  /// Order of [d] in the presented class group.
  ElementOrder class_order(const Divisor& d) const;

  /// Model of Cl / <[t]>: adjoins t to the principal relations.
  DivisorClassModel quotient_by_divisor(const Divisor& t) const;

 private:
  std::vector<std::string> primes_;
  std::vector<Divisor> relations_;
};

}  // namespace flatloc

#endif  // FLATLOC_DIVISORS_HPP
