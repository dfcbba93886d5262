#include "flatloc/elliptic.hpp"

#include <algorithm>
#include <map>

namespace flatloc {

namespace {

const std::vector<std::string> kXYZ{"X", "Y", "Z"};

}  // namespace

HomogeneousCubic HomogeneousCubic::from_polynomial(const Polynomial& f) {
  if (f.variables() != kXYZ) throw InputError("cubic must be in variables X, Y, Z");
  const Rational lead = f.coefficient({3, 0, 0});
  if (lead == 0) throw InputError("cubic has no X^3 term: " + f.to_string());
  for (const auto& [e, c] : f.terms()) {
    const bool allowed = e == Exponent{3, 0, 0} || e == Exponent{1, 0, 2} ||
                         e == Exponent{0, 0, 3} || e == Exponent{0, 2, 1};
    if (!allowed) {
      throw InputError("cubic is not of the form X^3 + aXZ^2 + bZ^3 - Y^2Z: " + f.to_string());
    }
  }
  if (f.coefficient({0, 2, 1}) != -lead) {
    throw InputError("cubic needs Y^2Z coefficient equal to minus the X^3 coefficient: " +
                     f.to_string());
  }
  return HomogeneousCubic{f.coefficient({1, 0, 2}) / lead, f.coefficient({0, 0, 3}) / lead};
}

Polynomial HomogeneousCubic::to_polynomial() const {
  Polynomial f(kXYZ);
  f.add_term({3, 0, 0}, Rational(1));
  f.add_term({1, 0, 2}, a);
  f.add_term({0, 0, 3}, b);
  f.add_term({0, 2, 1}, Rational(-1));
  return f;
}

const Rational& ECPoint::x() const {
  if (infinity_) throw PreconditionError("point at infinity has no affine x");
  return x_;
}

const Rational& ECPoint::y() const {
  if (infinity_) throw PreconditionError("point at infinity has no affine y");
  return y_;
}

bool ECPoint::is_integral() const {
  return infinity_ || (flatloc::is_integral(x_) && flatloc::is_integral(y_));
}

std::string ECPoint::label() const {
  if (infinity_) return "O";
  return "(" + rational_to_short_string(x_) + "," + rational_to_short_string(y_) + ")";
}

bool operator==(const ECPoint& p, const ECPoint& q) {
  if (p.infinity_ || q.infinity_) return p.infinity_ == q.infinity_;
  return p.x_ == q.x_ && p.y_ == q.y_;
}

bool operator<(const ECPoint& p, const ECPoint& q) {
  if (p.infinity_ || q.infinity_) return p.infinity_ && !q.infinity_;
  if (p.x_ != q.x_) return p.x_ < q.x_;
  return p.y_ < q.y_;
}

WeierstrassCurve::WeierstrassCurve(Rational a, Rational b)
    : a_(std::move(a)), b_(std::move(b)) {
  discriminant_ = -16 * (4 * a_ * a_ * a_ + 27 * b_ * b_);
  if (discriminant_ == 0) {
    throw InputError("singular cubic: discriminant -16(4a^3+27b^2) = 0 for a=" +
                     rational_to_short_string(a_) + ", b=" + rational_to_short_string(b_));
  }
}

bool WeierstrassCurve::contains(const ECPoint& p) const {
  if (p.is_infinity()) return true;
  return p.y() * p.y() == rhs(p.x());
}

std::string WeierstrassCurve::id() const {
  return "ell:" + rational_to_short_string(a_) + "," + rational_to_short_string(b_);
}

std::string WeierstrassCurve::to_string() const {
  std::string out = "y^2 = x^3";
  auto term = [&out](const Rational& c, const std::string& mono) {
    if (c == 0) return;
    Rational mag = c < 0 ? Rational(-c) : c;
    out += c < 0 ? " - " : " + ";
    if (mono.empty()) {
      out += rational_to_short_string(mag);
    } else {
      if (mag != 1) out += rational_to_short_string(mag) + "*";
      out += mono;
    }
  };
  term(a_, "x");
  term(b_, "");
  return out;
}

WeierstrassCurve from_homogeneous(const HomogeneousCubic& cubic) {
  return WeierstrassCurve(cubic.a, cubic.b);
}

namespace {

void require_on_curve(const WeierstrassCurve& e, const ECPoint& p) {
  if (!e.contains(p)) throw InputError("point " + p.label() + " is not on " + e.to_string());
}

ECPoint add_unchecked(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Rational slope;
  if (p.x() == q.x()) {
    if (p.y() != q.y() || p.y() == 0) return ECPoint::infinity();
    slope = (3 * p.x() * p.x() + e.a()) / (2 * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = slope * slope - p.x() - q.x();
  Rational y3 = slope * (p.x() - x3) - p.y();
  return ECPoint::affine(std::move(x3), std::move(y3));
}

ECPoint negate_unchecked(const ECPoint& p) {
  if (p.is_infinity()) return p;
  return ECPoint::affine(p.x(), Rational(-p.y()));
}

}  // namespace

ECPoint add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q) {
  require_on_curve(e, p);
  require_on_curve(e, q);
  return add_unchecked(e, p, q);
}

ECPoint negate(const WeierstrassCurve& e, const ECPoint& p) {
  require_on_curve(e, p);
  return negate_unchecked(p);
}

ECPoint mul(const WeierstrassCurve& e, const BigInt& n, const ECPoint& p) {
  require_on_curve(e, p);
  ECPoint base = n < 0 ? negate_unchecked(p) : p;
  BigInt k = abs(n);
  ECPoint acc = ECPoint::infinity();
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = add_unchecked(e, acc, base);
    base = add_unchecked(e, base, base);
    k >>= 1;
  }
  return acc;
}

TorsionResult torsion_order(const WeierstrassCurve& e, const ECPoint& p) {
  require_on_curve(e, p);
  TorsionResult r;
  if (p.is_infinity()) {
    r.kind = TorsionResult::Kind::Finite;
    r.order = 1;
    r.reason = "neutral element";
    return r;
  }
  if (!e.is_integral_model()) {
    r.kind = TorsionResult::Kind::Unknown;
    r.reason = "non-integral model: torsion test needs integer a, b";
    return r;
  }
  ECPoint q = p;
  for (unsigned n = 1; n <= 12; ++n) {
    if (q.is_infinity()) {
      r.kind = TorsionResult::Kind::Finite;
      r.order = n;
      r.reason = std::to_string(n) + "P = O";
      return r;
    }
    if (!q.is_integral()) {
      r.kind = TorsionResult::Kind::NonTorsion;
      r.reason = std::to_string(n) + "P = " + q.label() + " has a non-integral coordinate";
      r.citation = citation::kNagellLutz;
      return r;
    }
    q = add_unchecked(e, q, p);
  }
  r.kind = TorsionResult::Kind::NonTorsion;
  r.reason = "nP != O for n = 1..12";
  r.citation = citation::kMazur;
  return r;
}

std::string ClassImage::to_string() const {
  return "(" + point.label() + ", " + std::to_string(degree_mod3) + " mod 3)";
}

ClassImage cl_class(const WeierstrassCurve& e, const ECPoint& p) {
  require_on_curve(e, p);
  return ClassImage{p, 1};
}

ClassImage cl_class_of(const WeierstrassCurve& e,
                       const std::vector<std::pair<ECPoint, long>>& divisor) {
  ClassImage out;
  long degree = 0;
  for (const auto& [point, n] : divisor) {
    out.point = add_unchecked(e, out.point, mul(e, BigInt(n), point));
    degree += n;
  }
  out.degree_mod3 = static_cast<int>(((degree % 3) + 3) % 3);
  return out;
}

ClassImage add_classes(const WeierstrassCurve& e, const ClassImage& c1, const ClassImage& c2) {
  return ClassImage{add(e, c1.point, c2.point), (c1.degree_mod3 + c2.degree_mod3) % 3};
}

ClassImage tangent_class(const WeierstrassCurve& e) {
  return cl_class_of(e, {{ECPoint::infinity(), 3}});
}

std::string LinearForm::to_string() const {
  std::string out;
  auto term = [&out](const Rational& c, const char* var) {
    if (c == 0) return;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += rational_to_short_string(mag) + "*";
    out += var;
  };
  term(y, "Y");
  term(x, "X");
  term(z, "Z");
  return out.empty() ? "0" : out;
}

namespace {

LineFactor vertical_line(const WeierstrassCurve& e, const ECPoint& q) {
  LineFactor f;
  f.form = LinearForm{Rational(1), Rational(0), Rational(-q.x())};
  f.zeros = {q, negate_unchecked(q)};
  f.pole_order = 2;
  (void)e;
  return f;
}

// Line through q and r (tangent when equal); both affine, not vertical.
LineFactor chord_line(const WeierstrassCurve& e, const ECPoint& q, const ECPoint& r) {
  Rational slope;
  if (q == r) {
    slope = (3 * q.x() * q.x() + e.a()) / (2 * q.y());
  } else {
    slope = (r.y() - q.y()) / (r.x() - q.x());
  }
  const Rational intercept = q.y() - slope * q.x();
  LineFactor f;
  f.form = LinearForm{Rational(-slope), Rational(1), Rational(-intercept)};
  f.zeros = {q, r, negate_unchecked(add_unchecked(e, q, r))};
  f.pole_order = 3;
  return f;
}

// Line through q and r as a function; nullopt when it is the line Z = 0.
std::optional<LineFactor> line_through(const WeierstrassCurve& e, const ECPoint& q,
                                       const ECPoint& r) {
  if (q.is_infinity() && r.is_infinity()) return std::nullopt;
  if (q.is_infinity()) return vertical_line(e, r);
  if (r.is_infinity()) return vertical_line(e, q);
  if (q.x() == r.x() && (q.y() != r.y() || q.y() == 0)) return vertical_line(e, q);
  return chord_line(e, q, r);
}

class ProgramBuilder {
 public:
  void multiply(LineFactor factor, long exponent) {
    const std::string key = factor.form.to_string();
    for (auto& existing : program_) {
      if (existing.form.to_string() == key) {
        existing.exponent += exponent;
        return;
      }
    }
    factor.exponent = exponent;
    program_.push_back(std::move(factor));
  }

  void square() {
    for (auto& f : program_) f.exponent *= 2;
  }

  LineProgram finish() {
    LineProgram out;
    for (auto& f : program_) {
      if (f.exponent != 0) out.push_back(std::move(f));
    }
    return out;
  }

 private:
  LineProgram program_;
};

}  // namespace

LineProgram miller_function(const WeierstrassCurve& e, const ECPoint& p, unsigned n) {
  require_on_curve(e, p);
  if (n == 0) throw PreconditionError("miller_function: n must be positive");
  // n must be the exact order of P.
  ECPoint q = p;
  for (unsigned m = 1; m < n; ++m) {
    if (q.is_infinity()) {
      throw PreconditionError("miller_function: " + std::to_string(m) + "P = O before n = " +
                              std::to_string(n));
    }
    q = add_unchecked(e, q, p);
  }
  if (!q.is_infinity()) {
    throw PreconditionError("miller_function: " + std::to_string(n) + "P != O for P = " +
                            p.label());
  }
  if (n == 1) return {};  // P = O, empty divisor

  // f_{i+j} = f_i f_j l_{iP,jP} / v_{(i+j)P}; div f_n = n(P) - n(O).
  ProgramBuilder builder;
  auto step = [&](const ECPoint& t, const ECPoint& s) {
    if (auto line = line_through(e, t, s)) builder.multiply(std::move(*line), 1);
    const ECPoint sum = add_unchecked(e, t, s);
    if (!sum.is_infinity()) builder.multiply(vertical_line(e, sum), -1);
    return sum;
  };

  int top = 31;
  while (((n >> top) & 1U) == 0) --top;
  ECPoint t = p;
  for (int bit = top - 1; bit >= 0; --bit) {
    builder.square();
    t = step(t, t);
    if ((n >> bit) & 1U) t = step(t, p);
  }
  return builder.finish();
}

bool verify_line_factor(const WeierstrassCurve& e, const LineFactor& factor) {
  const LinearForm& l = factor.form;
  for (const ECPoint& z : factor.zeros) {
    if (!e.contains(z)) return false;
    const Rational value =
        z.is_infinity() ? l.y : Rational(l.x * z.x() + l.y * z.y() + l.z);
    if (value != 0) return false;
  }
  if (l.y != 0) {
    // Y = slope*X + intercept*Z meets the curve in three affine points.
    if (factor.pole_order != 3 || factor.zeros.size() != 3) return false;
    const Rational slope = -l.x / l.y;
    const Rational intercept = -l.z / l.y;
    for (const ECPoint& z : factor.zeros) {
      if (z.is_infinity()) return false;
    }
    // x^3 + a x + b - (slope x + intercept)^2 == prod (x - x_i)
    const Rational &x1 = factor.zeros[0].x(), &x2 = factor.zeros[1].x(), &x3 = factor.zeros[2].x();
    const Rational c2 = -(slope * slope);
    const Rational c1 = e.a() - 2 * slope * intercept;
    const Rational c0 = e.b() - intercept * intercept;
    return c2 == -(x1 + x2 + x3) && c1 == x1 * x2 + x1 * x3 + x2 * x3 && c0 == -(x1 * x2 * x3);
  }
  if (l.x != 0) {
    // X = c Z: the two points (c, +-sqrt(rhs)).
    if (factor.pole_order != 2 || factor.zeros.size() != 2) return false;
    const Rational c = -l.z / l.x;
    const Rational rhs = e.rhs(c);
    std::vector<ECPoint> zeros = factor.zeros;
    std::sort(zeros.begin(), zeros.end());
    if (zeros[0].is_infinity() || zeros[1].is_infinity()) return false;
    if (zeros[0].x() != c || zeros[1].x() != c) return false;
    if (rhs == 0) return zeros[0].y() == 0 && zeros[1].y() == 0;
    return zeros[0].y() == -zeros[1].y() && zeros[0].y() != 0;
  }
  // Z = 0: the constant function, trivial divisor.
  return factor.zeros.empty() && factor.pole_order == 0;
}

Divisor line_divisor(const LineFactor& factor) {
  Divisor d;
  for (const ECPoint& z : factor.zeros) d.add_term(z.label(), 1);
  d.add_term(ECPoint::infinity().label(), BigInt(-factor.pole_order));
  return d;
}

Divisor program_divisor(const LineProgram& program) {
  Divisor d;
  for (const LineFactor& f : program) d += BigInt(f.exponent) * line_divisor(f);
  return d;
}

bool check_line_program(const WeierstrassCurve& e, const LineProgram& program, const ECPoint& p,
                        unsigned n) {
  for (const LineFactor& f : program) {
    if (!verify_line_factor(e, f)) return false;
  }
  Divisor expected = Divisor::prime(p.label(), BigInt(n));
  expected.add_term(ECPoint::infinity().label(), BigInt(-static_cast<long>(n)));
  return program_divisor(program) == expected;
}

Verdict classify_point(const WeierstrassCurve& e, const ECPoint& p) {
  const TorsionResult torsion = torsion_order(e, p);
  const std::string prime =
      p.is_infinity() ? "O = (X, Z)"
                      : p.label() + " = (" + LinearForm{1, 0, -p.x()}.to_string() + ", " +
                            LinearForm{0, 1, -p.y()}.to_string() + ")";
  std::vector<std::string> cites{citation::kTwoDimensionalGRing, citation::kGradedPicZero,
                                 citation::kEllipticClassGroup};
  TorsionWitness witness;
  witness.reason = torsion.reason;

  switch (torsion.kind) {
    case TorsionResult::Kind::Finite: {
      const BigInt cl_order = lcm(BigInt(torsion.order), BigInt(3));
      witness.order = std::to_string(torsion.order);
      witness.class_image = cl_class(e, p).to_string() + ", order " + cl_order.get_str() +
                            " in Cl A";
      const LineProgram program = miller_function(e, p, torsion.order);
      if (!check_line_program(e, program, p, torsion.order)) {
        throw std::logic_error("line program failed its own check");
      }
      for (const LineFactor& f : program) {
        witness.line_program.push_back(
            {f.form.to_string(), f.exponent, line_divisor(f).to_string()});
      }
      witness.program_divisor = program_divisor(program).to_string();
      cites.push_back(citation::kNormalDomain);
      cites.push_back(citation::kPicTorsionClassical);
      return Verdict(e.id(), prime, Tri::Yes, Tri::Yes, Tri::Yes, std::move(witness),
                     std::move(cites));
    }
    case TorsionResult::Kind::NonTorsion: {
      witness.order = "infinite";
      witness.class_image = cl_class(e, p).to_string() + ", infinite order in Cl A";
      cites.push_back(citation::kNonTorsionPoint);
      cites.push_back(citation::kNormalDomain);
      cites.push_back(torsion.citation);
      return Verdict(e.id(), prime, Tri::Yes, Tri::No, Tri::No, std::move(witness),
                     std::move(cites));
    }
    case TorsionResult::Kind::Unknown:
      break;
  }
  Verdict v(e.id(), prime, Tri::Yes, Tri::Unknown, Tri::Unknown,
            NoWitness{"non-integral-model"}, std::move(cites));
  v.add_note(torsion.reason);
  return v;
}

DivisorClassModel class_group_model(const WeierstrassCurve& e, const ECPoint& generator) {
  require_on_curve(e, generator);
  if (generator.is_infinity()) return DivisorClassModel({"deg"});
  const TorsionResult torsion = torsion_order(e, generator);
  std::vector<Divisor> relations;
  if (torsion.is_finite()) {
    relations.push_back(Divisor::prime(generator.label(), BigInt(torsion.order)));
  } else if (torsion.kind == TorsionResult::Kind::Unknown) {
    throw InputError("class_group_model needs an integral model");
  }
  return DivisorClassModel({"deg", generator.label()}, std::move(relations));
}

ECPoint parse_point(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ' && c != '(' && c != ')') t += c;
  }
  if (t == "O" || t == "o" || t == "inf") return ECPoint::infinity();
  const auto comma = t.find(',');
  if (comma == std::string::npos) throw InputError("point must be 'x,y' or 'O': '" + text + "'");
  return ECPoint::affine(parse_rational(t.substr(0, comma)), parse_rational(t.substr(comma + 1)));
}

}  // namespace flatloc
