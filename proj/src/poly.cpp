#include "flatloc/poly.hpp"

#include <algorithm>
#include <cctype>

namespace flatloc {

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  Polynomial p(std::move(variables));
  p.add_term(Exponent(p.variables_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, const std::string& name) {
  Polynomial p(std::move(variables));
  Exponent e(p.variables_.size(), 0);
  e[p.variable_index(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

std::size_t Polynomial::variable_index(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) throw InputError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - variables_.begin());
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != variables_.size()) throw PreconditionError("exponent length mismatch");
  if (c == 0) return;
  Rational& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int k : e) d += k;
    best = std::max(best, d);
  }
  return best;
}

int Polynomial::homogeneous_degree_in(const std::vector<std::size_t>& indices) const {
  int degree = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i : indices) d += e.at(i);
    if (degree == -1) {
      degree = d;
    } else if (d != degree) {
      return -2;
    }
  }
  return degree;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.variables_ != variables_) throw PreconditionError("variable sets differ");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.variables_ != variables_) throw PreconditionError("variable sets differ");
  for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_) throw PreconditionError("variable sets differ");
  Polynomial out(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, Rational(ca * cb));
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  out *= Rational(-1);
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial out = constant(variables_, Rational(1));
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images,
                                  const std::vector<std::string>& target_variables) const {
  Polynomial out(target_variables);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target_variables, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = images.find(variables_[i]);
      if (it == images.end()) {
        throw PreconditionError("no image for variable '" + variables_[i] + "'");
      }
      term = term * it->second.pow(static_cast<unsigned>(e[i]));
    }
    out += term;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += variables_[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      out += rational_to_short_string(mag);
    } else if (mag == 1) {
      out += monomial;
    } else {
      out += rational_to_short_string(mag) + "*" + monomial;
    }
    first = false;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables)
      : text_(text), variables_(variables) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long n = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (n > 64) fail("exponent too large");
      return base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      Rational value(BigInt(num, 10));
      std::size_t save = pos_;
      if (accept('/')) {
        skip_space();
        std::string den = digits();
        if (den.empty()) {
          pos_ = save;
          fail("expected denominator");
        }
        BigInt d(den, 10);
        if (d == 0) fail("zero denominator");
        value = Rational(BigInt(num, 10), d);
        value.canonicalize();
      }
      return Polynomial::constant(variables_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(variables_.begin(), variables_.end(), name) == variables_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(variables_, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

}  // namespace flatloc
