#include "flatloc/quadorder.hpp"

namespace flatloc {

QuadOrder QuadOrder::from_d(const BigInt& d) {
  if (d >= 0) throw InputError("quadratic order: d must be negative, got " + d.get_str());
  if (!is_squarefree(d)) throw InputError("quadratic order: d must be squarefree, got " + d.get_str());
  BigInt disc = mod_floor(d, 4) == 1 ? d : BigInt(4 * d);
  return QuadOrder(d, disc);
}

QuadOrder QuadOrder::from_discriminant(const BigInt& disc) {
  if (disc >= 0) throw InputError("discriminant must be negative, got " + disc.get_str());
  const BigInt r = mod_floor(disc, 4);
  if (r == 1) {
    if (!is_squarefree(disc)) throw InputError("not a fundamental discriminant: " + disc.get_str());
    return QuadOrder(disc, disc);
  }
  if (r == 0) {
    const BigInt d = disc / 4;
    const BigInt dr = mod_floor(d, 4);
    if ((dr == 2 || dr == 3) && is_squarefree(d)) return QuadOrder(d, disc);
  }
  throw InputError("not a fundamental discriminant: " + disc.get_str());
}

std::string QuadOrder::name() const {
  if (disc_ == d_) return "Z[(1+sqrt(" + d_.get_str() + "))/2]";
  return "Z[sqrt(" + d_.get_str() + ")]";
}

bool QuadNumber::is_integral(const BigInt& disc) const {
  if (!flatloc::is_integral(u) || !flatloc::is_integral(v)) return false;
  return mod_floor(BigInt(u.get_num() - v.get_num() * disc), 2) == 0;
}

std::string QuadNumber::to_string(const QuadOrder& order) const {
  // sqrt(D) = c * sqrt(d) with c = 2 when D = 4d.
  const Rational c = order.discriminant() == order.d() ? Rational(1) : Rational(2);
  const Rational x = u / 2;
  const Rational y = v * c / 2;
  const std::string root = "sqrt(" + order.d().get_str() + ")";
  if (y == 0) return rational_to_short_string(x);
  std::string out;
  if (x != 0) out = rational_to_short_string(x);
  Rational mag = y < 0 ? Rational(-y) : y;
  if (y < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  if (mag != 1) out += rational_to_short_string(mag) + "*";
  out += root;
  return out;
}

QuadNumber multiply(const QuadNumber& x, const QuadNumber& y, const BigInt& disc) {
  QuadNumber out;
  out.u = (x.u * y.u + disc * x.v * y.v) / 2;
  out.v = (x.u * y.v + x.v * y.u) / 2;
  return out;
}

QuadIdeal::QuadIdeal(const QuadOrder& order, BigInt a, BigInt b, Rational scale)
    : order_(order), a_(std::move(a)), b_(std::move(b)), scale_(std::move(scale)) {
  const BigInt& disc = order_.discriminant();
  if (a_ <= 0) throw InputError("ideal norm a must be positive");
  if (scale_ <= 0) throw InputError("ideal scale must be positive");
  const BigInt four_a = 4 * a_;
  if (mod_floor(BigInt(b_ * b_ - disc), four_a) != 0) {
    throw InputError("b^2 != D mod 4a for a=" + a_.get_str() + ", b=" + b_.get_str());
  }
  const BigInt two_a = 2 * a_;
  b_ = mod_floor(b_, two_a);
  if (b_ > a_) b_ -= two_a;
}

QuadIdeal QuadIdeal::unit(const QuadOrder& order) {
  return QuadIdeal(order, 1, mod_floor(order.discriminant(), 2));
}

QuadIdeal QuadIdeal::principal_integer(const QuadOrder& order, const BigInt& n) {
  if (n == 0) throw InputError("zero ideal is not a fractional ideal");
  return QuadIdeal(order, 1, mod_floor(order.discriminant(), 2), Rational(abs(n)));
}

BigInt QuadIdeal::c() const { return (b_ * b_ - order_.discriminant()) / (4 * a_); }

bool QuadIdeal::is_integral() const { return flatloc::is_integral(scale_); }

QuadIdeal QuadIdeal::primitive_part() const { return QuadIdeal(order_, a_, b_); }

QuadIdeal QuadIdeal::conjugate() const { return QuadIdeal(order_, a_, BigInt(-b_), scale_); }

bool QuadIdeal::contains(const QuadNumber& x) const {
  // x/scale = m*a + n*(b + sqrt(D))/2  <=>  n = v, m = (u - v*b)/(2a).
  const Rational u = x.u / scale_;
  const Rational v = x.v / scale_;
  if (!flatloc::is_integral(u) || !flatloc::is_integral(v)) return false;
  const BigInt top = u.get_num() - v.get_num() * b_;
  return mod_floor(top, BigInt(2 * a_)) == 0;
}

std::string QuadIdeal::to_string() const {
  std::string body;
  if (a_ == 1) {
    body = "(1)";
  } else {
    QuadNumber second{Rational(b_), Rational(1)};
    body = "(" + a_.get_str() + ", " + second.to_string(order_) + ")";
  }
  if (scale_ == 1) return body;
  if (a_ == 1) return "(" + rational_to_short_string(scale_) + ")";
  return rational_to_short_string(scale_) + "*" + body;
}

int kronecker_symbol(const BigInt& disc, const BigInt& ell) {
  if (ell == 2) {
    if (mod_floor(disc, 2) == 0) return 0;
    const BigInt r = mod_floor(disc, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const BigInt r = mod_floor(disc, ell);
  if (r == 0) return 0;
  BigInt power;
  const BigInt exponent = (ell - 1) / 2;
  mpz_powm(power.get_mpz_t(), r.get_mpz_t(), exponent.get_mpz_t(), ell.get_mpz_t());
  return power == 1 ? 1 : -1;
}

namespace {

// Smallest b >= 0 with b = D (mod 2) and b^2 = D (mod 4*ell).
BigInt square_root_mod_4ell(const BigInt& disc, const BigInt& ell) {
  const BigInt modulus = 4 * ell;
  for (BigInt b = mod_floor(disc, 2); b < 2 * ell; b += 2) {
    if (mod_floor(BigInt(b * b - disc), modulus) == 0) return b;
  }
  throw PreconditionError("no square root of D modulo 4*ell");
}

}  // namespace

PrimeDecomposition decompose_prime(const QuadOrder& order, const BigInt& ell) {
  if (!is_prime(ell)) throw InputError(ell.get_str() + " is not a rational prime");
  const BigInt& disc = order.discriminant();
  switch (kronecker_symbol(disc, ell)) {
    case 1: {
      const BigInt b = square_root_mod_4ell(disc, ell);
      return SplitPrime{QuadIdeal(order, ell, b), QuadIdeal(order, ell, BigInt(-b))};
    }
    case 0:
      return RamifiedPrime{QuadIdeal(order, ell, square_root_mod_4ell(disc, ell))};
    default:
      return InertPrime{QuadIdeal::principal_integer(order, ell)};
  }
}

QuadIdeal ideal_mul(const QuadIdeal& x, const QuadIdeal& y) {
  if (!(x.order() == y.order())) throw InputError("ideals from different orders");
  const BigInt& disc = x.order().discriminant();
  const BigInt &a1 = x.a(), &b1 = x.b(), &a2 = y.a(), &b2 = y.b();
  const BigInt s = (b1 + b2) / 2;

  // g = gcd(a1, a2, s) = e1*a1 + e2*a2 + e3*s
  BigInt u1, v1, u2, v2;
  const BigInt g1 = extended_gcd(a1, a2, u1, v1);
  const BigInt g = extended_gcd(g1, s, u2, v2);
  const BigInt e1 = u2 * u1;
  const BigInt e2 = u2 * v1;
  const BigInt e3 = v2;

  const BigInt a3 = (a1 * a2) / (g * g);
  const BigInt numerator = e1 * a1 * b2 + e2 * a2 * b1 + e3 * ((b1 * b2 + disc) / 2);
  const BigInt b3 = mod_floor(BigInt(numerator / g), BigInt(2 * a3));
  return QuadIdeal(x.order(), a3, b3, Rational(x.scale() * y.scale() * g));
}

QuadIdeal ideal_pow(const QuadIdeal& x, unsigned n) {
  QuadIdeal out = QuadIdeal::unit(x.order());
  for (unsigned i = 0; i < n; ++i) out = ideal_mul(out, x);
  return out;
}

Rational ideal_norm(const QuadIdeal& x) { return x.scale() * x.scale() * x.a(); }

namespace {

// Gauss reduction of the form (a, b, c) of a primitive ideal, tracking the
// first column (p, r) of the SL2(Z) change of variables: the reduced leading
// coefficient equals the form's value at (p, r).
struct TrackedReduction {
  BigInt a;
  BigInt b;
  BigInt p = 1;
  BigInt r = 0;
};

TrackedReduction reduce_tracked(const BigInt& disc, BigInt a, BigInt b) {
  // Columns (p, r) and (q, s) of the transformation.
  BigInt p = 1, q = 0, r = 0, s = 1;
  while (true) {
    const BigInt two_a = 2 * a;
    BigInt nb = mod_floor(b, two_a);
    if (nb > a) nb -= two_a;
    const BigInt k = (nb - b) / two_a;  // x -> x + k*y
    q += k * p;
    s += k * r;
    b = nb;
    const BigInt c = (b * b - disc) / (4 * a);
    if (a > c || (a == c && b < 0)) {
      const bool tie = a == c;
      // (x, y) -> (-y, x)
      const BigInt np = q, nr = s;
      q = -p;
      s = -r;
      p = np;
      r = nr;
      a = c;
      b = -b;
      if (tie) return {a, b, p, r};
      continue;
    }
    return {a, b, p, r};
  }
}

}  // namespace

QuadIdeal reduce(const QuadIdeal& x) {
  const TrackedReduction t = reduce_tracked(x.order().discriminant(), x.a(), x.b());
  return QuadIdeal(x.order(), t.a, t.b);
}

bool is_reduced(const QuadIdeal& x) {
  const BigInt c = x.c();
  if (!x.is_primitive()) return false;
  if (abs(x.b()) > x.a() || x.a() > c) return false;
  if ((abs(x.b()) == x.a() || x.a() == c) && x.b() < 0) return false;
  return true;
}

std::optional<QuadNumber> is_principal(const QuadIdeal& x) {
  const BigInt& disc = x.order().discriminant();
  const TrackedReduction t = reduce_tracked(disc, x.a(), x.b());
  if (t.a != 1) return std::nullopt;
  // The form takes the value 1 at (p, r), so p*a + r*(b + sqrt(D))/2 has
  // norm a and generates the primitive part.
  QuadNumber alpha{Rational(2 * t.p * x.a() + t.r * x.b()), Rational(t.r)};
  if (!x.primitive_part().contains(alpha) || alpha.norm(disc) != x.a()) {
    throw std::logic_error("reduction produced a non-generator for " + x.to_string());
  }
  if (alpha.u < 0 || (alpha.u == 0 && alpha.v < 0)) {
    alpha.u = -alpha.u;
    alpha.v = -alpha.v;
  }
  alpha.u *= x.scale();
  alpha.v *= x.scale();
  return alpha;
}

std::vector<QuadIdeal> reduced_ideals(const QuadOrder& order) {
  const BigInt& disc = order.discriminant();
  const BigInt abs_disc = abs(disc);
  std::vector<QuadIdeal> out;
  for (BigInt a = 1; 3 * a * a <= abs_disc; ++a) {
    for (BigInt b = -a + 1; b <= a; ++b) {
      if (mod_floor(BigInt(b * b - disc), BigInt(4 * a)) != 0) continue;
      const BigInt c = (b * b - disc) / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (gcd(gcd(a, b), c) != 1) continue;
      out.emplace_back(order, a, b);
    }
  }
  return out;
}

BigInt class_number(const QuadOrder& order) { return BigInt(reduced_ideals(order).size()); }

BigInt class_order(const QuadIdeal& x) {
  const QuadIdeal base = reduce(x);
  const BigInt h = class_number(x.order());
  QuadIdeal power = base;
  BigInt n = 1;
  while (power.a() != 1) {
    power = reduce(ideal_mul(power, base));
    ++n;
    if (n > h) throw PreconditionError("class order exceeds class number");
  }
  return n;
}

bool is_prime_ideal(const QuadIdeal& x) {
  if (!x.is_integral()) return false;
  const BigInt& disc = x.order().discriminant();
  if (x.scale() == 1) {
    return is_prime(x.a()) && kronecker_symbol(disc, x.a()) != -1;
  }
  const BigInt s = x.scale().get_num();
  return x.a() == 1 && is_prime(s) && kronecker_symbol(disc, s) == -1;
}

Verdict classify_dedekind(const QuadOrder& order, const std::vector<QuadIdeal>& primes) {
  DenominatorsWitness witness;
  std::string description;
  for (const QuadIdeal& p : primes) {
    if (!(p.order() == order)) throw InputError("prime from a different order");
    if (!is_prime_ideal(p)) throw InputError(p.to_string() + " is not a nonzero prime ideal");
    const BigInt n = class_order(p);
    const QuadIdeal power = ideal_pow(p, static_cast<unsigned>(n.get_ui()));
    const auto generator = is_principal(power);
    if (!generator) throw PreconditionError("p^order is not principal");
    witness.entries.push_back({p.to_string(), n.get_str(), generator->to_string(order)});
    if (!description.empty()) description += ", ";
    description += p.to_string();
  }
  if (primes.empty()) description = "{} (identity localisation)";
  Verdict v("quad:" + order.d().get_str(), description, Tri::Yes, Tri::Yes, Tri::Yes,
            std::move(witness),
            {citation::kDimensionOne, citation::kPicTorsionClassical, citation::kClassicalSupport});
  v.add_note("class group of " + order.name() + " has order " + class_number(order).get_str() +
             " (finite, hence torsion)");
  return v;
}

}  // namespace flatloc
