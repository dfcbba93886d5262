#include "flatloc/divisors.hpp"

#include <algorithm>
#include <set>

namespace flatloc {

Divisor Divisor::prime(const std::string& label, const BigInt& coefficient) {
  Divisor d;
  d.add_term(label, coefficient);
  return d;
}

BigInt Divisor::coefficient(const std::string& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool Divisor::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second > 0; });
}

std::vector<std::string> Divisor::support() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& [label, c] : terms_) out.push_back(label);
  return out;
}

Divisor& Divisor::add_term(const std::string& label, const BigInt& coefficient) {
  if (coefficient == 0) return *this;
  BigInt& slot = terms_[label];
  slot += coefficient;
  if (slot == 0) terms_.erase(label);
  return *this;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  for (const auto& [label, c] : other.terms_) add_term(label, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  for (const auto& [label, c] : other.terms_) add_term(label, BigInt(-c));
  return *this;
}

Divisor operator-(const Divisor& a) {
  Divisor out;
  for (const auto& [label, c] : a.terms_) out.terms_.emplace(label, -c);
  return out;
}

Divisor operator*(const BigInt& k, const Divisor& a) {
  Divisor out;
  if (k == 0) return out;
  for (const auto& [label, c] : a.terms_) out.terms_.emplace(label, k * c);
  return out;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [label, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "(" + label + ")";
    first = false;
  }
  return out;
}

nlohmann::json Divisor::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [label, c] : terms_) {
    if (c.fits_slong_p()) {
      j[label] = c.get_si();
    } else {
      j[label] = c.get_str();
    }
  }
  return j;
}

Divisor Divisor::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("divisor JSON must be an object");
  Divisor d;
  for (const auto& [label, value] : j.items()) {
    if (value.is_number_integer()) {
      d.add_term(label, BigInt(value.get<long>()));
    } else if (value.is_string()) {
      d.add_term(label, parse_integer(value.get<std::string>()));
    } else {
      throw InputError("divisor coefficient for '" + label + "' is not an integer");
    }
  }
  return d;
}

DivisorClassModel::DivisorClassModel(std::vector<std::string> primes,
                                     std::vector<Divisor> principal_relations)
    : primes_(std::move(primes)), relations_(std::move(principal_relations)) {
  std::set<std::string> seen;
  for (const auto& p : primes_) {
    if (!seen.insert(p).second) throw InputError("duplicate prime label '" + p + "'");
  }
  for (const auto& r : relations_) coordinates(r);  // validates support
}

IntVector DivisorClassModel::coordinates(const Divisor& d) const {
  IntVector v = IntVector::Zero(static_cast<Eigen::Index>(primes_.size()));
  for (const auto& [label, c] : d.terms()) {
    auto it = std::find(primes_.begin(), primes_.end(), label);
    if (it == primes_.end()) throw InputError("unknown prime label '" + label + "'");
    v(it - primes_.begin()) = c;
  }
  return v;
}

AbelianGroupPresentation DivisorClassModel::presentation() const {
  IntMatrix rel(static_cast<Eigen::Index>(relations_.size()),
                static_cast<Eigen::Index>(primes_.size()));
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    rel.row(static_cast<Eigen::Index>(i)) = coordinates(relations_[i]).transpose();
  }
  return AbelianGroupPresentation(primes_.size(), std::move(rel));
}

ElementOrder DivisorClassModel::class_order(const Divisor& d) const {
  return element_order(presentation(), coordinates(d));
}

DivisorClassModel DivisorClassModel::quotient_by_divisor(const Divisor& t) const {
  coordinates(t);
  std::vector<Divisor> rel = relations_;
  if (!t.is_zero()) rel.push_back(t);
  return DivisorClassModel(primes_, std::move(rel));
}

}  // namespace flatloc
