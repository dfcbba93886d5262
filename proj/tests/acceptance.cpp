// Prints one PASS/FAIL line per acceptance criterion; exit status is nonzero
// if any criterion fails.

#include "flatloc/abgroup.hpp"
#include "flatloc/catalog.hpp"
#include "flatloc/divisors.hpp"
#include "flatloc/elliptic.hpp"
#include "flatloc/lcohom.hpp"
#include "flatloc/quadorder.hpp"
#include "flatloc/segre.hpp"
#include "flatloc/spectool.hpp"

#include "properties.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace flatloc;

namespace {

struct Checks {
  std::vector<std::string> failed;
  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
};

void criterion1(Checks& c) {
  const QuadOrder order = QuadOrder::from_d(-5);
  c.expect(class_number(order) == 2, "class_number(-20) == 2");
  const auto dec = decompose_prime(order, 2);
  c.expect(std::holds_alternative<RamifiedPrime>(dec), "2 ramifies");
  const QuadIdeal p2 = std::get<RamifiedPrime>(dec).prime;
  c.expect(!is_principal(p2).has_value(), "p2 non-principal");
  c.expect(ideal_mul(p2, p2) == QuadIdeal::principal_integer(order, 2), "p2^2 == (2)");
  const Verdict v = classify("quad:-5", "p2");
  c.expect(v.flat() == Tri::Yes && v.universal() == Tri::Yes && v.classical() == Tri::Yes,
           "quad:-5 p2 classical");
  const auto* w = std::get_if<DenominatorsWitness>(&v.witness());
  c.expect(w && w->entries.size() == 1 && w->entries[0].generator == "2", "denominators {2}");
}

void criterion2(Checks& c) {
  const Verdict free = classify("ell:0,-4", "2,2");
  c.expect(free.flat() == Tri::Yes && free.universal() == Tri::No && free.classical() == Tri::No,
           "ell:0,-4 (2,2) = yes/no/no");
  const auto* fw = std::get_if<TorsionWitness>(&free.witness());
  c.expect(fw && fw->order == "infinite", "(2,2) non-torsion witness");

  const std::vector<std::tuple<Rational, Rational, long, long, unsigned>> torsion{
      {-1, 0, 0, 0, 2}, {0, 1, 2, 3, 6}};
  for (const auto& [a, b, x, y, n] : torsion) {
    const WeierstrassCurve e(a, b);
    const ECPoint p = ECPoint::affine(x, y);
    const std::string label = e.id() + " " + p.label();
    const Verdict v = classify(e.id(), std::to_string(x) + "," + std::to_string(y));
    c.expect(v.flat() == Tri::Yes && v.universal() == Tri::Yes && v.classical() == Tri::Yes,
             label + " all yes");
    const TorsionResult t = torsion_order(e, p);
    c.expect(t.is_finite() && t.order == n, label + " torsion order " + std::to_string(n));
    c.expect(check_line_program(e, miller_function(e, p, n), p, n), label + " Miller certificate");
    const auto* w = std::get_if<TorsionWitness>(&v.witness());
    c.expect(w && w->order == std::to_string(n) && !w->line_program.empty(),
             label + " witness carries the line program");
  }
}

void criterion3(Checks& c) {
  const std::vector<std::pair<std::string, Bidegree>> table{
      {"(X,V)", {1, 0}}, {"(Y,U)", {1, 0}}, {"(X,Y)", {0, 1}}, {"(U,V)", {0, 1}}};
  for (const auto& [text, expected] : table) {
    c.expect(psi(parse_linear_pair(text)) == expected, "psi" + text);
  }
  const Verdict one = classify("segre", "", "S0");
  c.expect(one.flat() == Tri::No && one.universal() == Tri::No && one.classical() == Tri::No,
           "S0: not flat");
  c.expect(std::holds_alternative<CohomologyWitness>(one.witness()), "S0: cohomology witness");
  const Verdict two = classify("segre", "", "S0*T0^2 + S1*T1^2");
  c.expect(two.flat() == Tri::Yes && two.universal() == Tri::No && two.classical() == Tri::No,
           "S0T0^2+S1T1^2: flat only");
  const Verdict three = classify("segre", "", "S0*T0 + S1*T1");
  c.expect(three.flat() == Tri::Yes && three.universal() == Tri::Yes && three.classical() == Tri::Yes,
           "S0T0+S1T1: classical");
  const auto* w = std::get_if<PrincipalElementWitness>(&three.witness());
  c.expect(w && w->element == "X + U", "classical witness X + U");
}

void criterion4(Checks& c) {
  const MonomialAlgebra planes = MonomialAlgebra::parse("X,Y,U", "XU");
  const auto r1 = certify_nonvanishing(planes, VariableIdeal::from_names(planes, {"X", "Y"}), 2, 3);
  c.expect(r1.witness.has_value(), "H^2_(X,Y)(k[X,Y,U]/(XU)) witness");
  const MonomialAlgebra quotient = MonomialAlgebra::parse("X,U,V", "XU");
  const auto r2 =
      certify_nonvanishing(quotient, VariableIdeal::from_names(quotient, {"X", "V"}), 2, 3);
  c.expect(r2.witness.has_value(), "H^2_(X,V)(k[X,U,V]/(XU)) witness");
  const auto v = props::cech_vanishing_suite(50);
  c.expect(v.passed(50), "vanishing above generator count: " + v.summary());
}

void criterion5(Checks& c) {
  IntMatrix one_one(1, 2);
  one_one << 1, 1;
  c.expect(cokernel_structure(one_one).to_string() == "Z", "coker [[1,1]] == Z");
  const DivisorClassModel model({"g", "t"}, {Divisor::prime("t", 6)});
  const auto q = model.quotient_by_divisor(Divisor::prime("g", 3));
  const GroupStructure s = q.structure();
  c.expect(s.free_rank == 0 && s.invariant_factors == std::vector<BigInt>{3, 6},
           "quotient model == Z/3 + Z/6");
}

void criterion6(Checks& c) {
  const SpecPoset z = SpecPoset::parse("(0) < (2)\n(0) < (3)\n(0) < (5)\n");
  c.expect(enumerate_closed(z).count == 9, "truncated Spec Z has 9 closed subsets");
  const SpecPoset plane = SpecPoset::parse("(0) < (x)\n(0) < (y)\n(x) < m\n(y) < m\n");
  c.expect(!check_height_condition(plane, {"m"}), "V = {m} rejected on a height-2 poset");
}

void criterion7(Checks& c) {
  const std::vector<std::pair<std::string, props::Outcome>> suites{
      {"snf", props::snf_suite()},
      {"ideal norms", props::ideal_norm_suite()},
      {"elliptic", props::elliptic_suite()},
      {"cech d^2", props::cech_square_suite()},
      {"verdicts", props::verdict_suite()},
  };
  for (const auto& [name, r] : suites) c.expect(r.passed(1000), name + ": " + r.summary());
}

}  // namespace

int main() {
  const std::vector<std::function<void(Checks&)>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i](checks);
    } catch (const std::exception& e) {
      checks.failed.push_back(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    checks.expect(ms < 5000, "runtime " + std::to_string(ms) + " ms exceeds 5 s");
    const bool ok = checks.failed.empty();
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << " (" << ms << " ms)";
    for (const auto& f : checks.failed) std::cout << "\n  - " << f;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
