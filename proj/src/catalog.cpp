#include "flatloc/catalog.hpp"

#include "flatloc/elliptic.hpp"
#include "flatloc/lcohom.hpp"
#include "flatloc/quadorder.hpp"
#include "flatloc/segre.hpp"
#include "flatloc/spectool.hpp"

#include <algorithm>
#include <functional>
#include <future>

namespace flatloc {

namespace {

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  return s;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

// ---- quadratic orders ----

QuadIdeal parse_quad_prime(const QuadOrder& order, const std::string& token) {
  if (token.size() < 2 || token[0] != 'p') {
    throw InputError("quad prime must look like p2, p3 or p3bar: '" + token + "'");
  }
  const bool bar = token.size() > 3 && token.substr(token.size() - 3) == "bar";
  const BigInt ell = parse_integer(token.substr(1, token.size() - 1 - (bar ? 3 : 0)));
  const PrimeDecomposition dec = decompose_prime(order, ell);
  if (const auto* s = std::get_if<SplitPrime>(&dec)) return bar ? s->conjugate : s->prime;
  if (bar) throw InputError(ell.get_str() + " does not split in " + order.name());
  if (const auto* r = std::get_if<RamifiedPrime>(&dec)) return r->prime;
  return std::get<InertPrime>(dec).prime;
}

Verdict classify_quad(const std::string& ring, const std::string& prime_spec) {
  const QuadOrder order = QuadOrder::from_d(parse_integer(ring.substr(5)));
  std::vector<QuadIdeal> primes;
  const std::string spec = strip(prime_spec);
  if (!spec.empty()) {
    for (const auto& t : split_commas(spec)) primes.push_back(parse_quad_prime(order, t));
  }
  return classify_dedekind(order, primes);
}

// ---- elliptic cones ----

Verdict classify_curve(const WeierstrassCurve& e, const std::string& prime_spec) {
  const ECPoint p = parse_point(prime_spec);
  if (!e.contains(p)) throw InputError("point " + p.label() + " is not on " + e.to_string());
  return classify_point(e, p);
}

WeierstrassCurve parse_ell(const std::string& ring) {
  const auto parts = split_commas(strip(ring.substr(4)));
  if (parts.size() != 2) throw InputError("curve spec must be ell:a,b");
  return WeierstrassCurve(parse_rational(parts[0]), parse_rational(parts[1]));
}

// ---- monomial-type rings with primes generated by variables ----

struct VariableRing {
  std::string id;
  std::vector<std::string> variables;
  std::function<bool(const VariableSet&)> is_prime;
  std::string model_note;
};

const std::vector<std::string> kTwoPlanesVars{"X", "Y", "U"};
const std::vector<std::string> kHyperVars{"X", "Y", "U", "V"};

bool has(const VariableSet& s, std::size_t i) { return std::binary_search(s.begin(), s.end(), i); }

VariableRing twoplanes_ring() {
  // k[X,Y,U]/(XU): A/P is a domain iff P contains X or U.
  return VariableRing{"twoplanes", kTwoPlanesVars,
                      [](const VariableSet& s) { return has(s, 0) || has(s, 2); },
                      "polynomial model k[X,Y,U]/(XU) of k[[X,Y,U]]/(XU); multigraded Cech pieces "
                      "agree degreewise"};
}

VariableRing hyper_ring() {
  // k[X,Y,U,V]/(XU - YV) is a domain; A/P is a domain iff P = 0 or P meets
  // both {X,U} and {Y,V}.
  return VariableRing{
      "dim3hyper", kHyperVars,
      [](const VariableSet& s) {
        return s.empty() || ((has(s, 0) || has(s, 2)) && (has(s, 1) || has(s, 3)));
      },
      "polynomial model k[X,Y,U,V]/(XU - YV) of k[[X,Y,U,V]]/(XU - YV); reductions modulo a "
      "variable land on monomial quotients"};
}

std::string label(const VariableRing& r, const VariableSet& s) {
  if (s.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += r.variables[s[i]];
  }
  return out + ")";
}

std::vector<VariableSet> all_subsets(std::size_t n) {
  std::vector<VariableSet> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    VariableSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

SpecPoset variable_prime_poset(const VariableRing& r) {
  SpecPoset p;
  std::vector<VariableSet> primes;
  for (auto& s : all_subsets(r.variables.size())) {
    if (r.is_prime(s)) primes.push_back(std::move(s));
  }
  for (const auto& s : primes) p.add_node(label(r, s));
  for (const auto& s : primes) {
    for (const auto& t : primes) {
      if (s.size() < t.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        p.add_relation(label(r, s), label(r, t));
      }
    }
  }
  return p;
}

VariableSet parse_variable_ideal(const VariableRing& r, const std::string& spec) {
  std::string body = strip(spec);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  VariableSet s;
  if (body.empty() || body == "0") return s;
  for (const auto& name : split_commas(body)) {
    const auto it = std::find(r.variables.begin(), r.variables.end(), name);
    if (it == r.variables.end()) {
      throw InputError("'" + name + "' is not a variable of " + r.id);
    }
    s.push_back(static_cast<std::size_t>(it - r.variables.begin()));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Verdict classify_variable_prime(const VariableRing& r, const std::string& prime_spec, int box) {
  const VariableSet s = parse_variable_ideal(r, prime_spec);
  const std::string name = label(r, s);
  if (!r.is_prime(s)) throw InputError(name + " is not a prime ideal of " + r.id);
  const SpecPoset poset = variable_prime_poset(r);
  const std::string fragment = "Spec fragment: the " + std::to_string(poset.size()) +
                               " primes generated by variables";
  auto finish = [&](Verdict v) {
    v.add_note(r.model_note);
    v.add_note(fragment);
    return v;
  };

  if (s.empty()) {
    return finish(Verdict(r.id, name, Tri::Yes, Tri::Yes, Tri::Yes,
                          PrincipalElementWitness{"0", "V(0) = Spec A; the localisation is zero"},
                          {citation::kClassicalSupport}));
  }

  const NodeSet v = specialisation_closure(poset, {name});
  const NodeSet minimal = minimal_primes(poset, v);
  if (!check_height_condition(poset, v)) {
    HeightViolationWitness w;
    for (const auto& m : minimal) {
      w.minimal_primes.push_back(m);
      w.heights.push_back(poset.height(m));
    }
    return finish(Verdict(r.id, name, Tri::No, Tri::No, Tri::No, std::move(w),
                          {citation::kHeightCondition, citation::kCoherence}));
  }

  if (s.size() == 1) {
    const std::string x = r.variables[s[0]];
    return finish(Verdict(r.id, name, Tri::Yes, Tri::Yes, Tri::Yes,
                          PrincipalElementWitness{x, "V(" + x + ") = V" + name},
                          {citation::kClassicalSupport}));
  }

  if (r.id == "twoplanes") {
    const MonomialAlgebra algebra = MonomialAlgebra::parse("X,Y,U", "XU");
    VariableIdeal ideal{s};
    if (vanishes_by_length(algebra, ideal, 2)) {
      // Every product of two generators is zero, so each generator has its
      // square in (sum), and V(sum) = V(p).
      std::string sum;
      for (std::size_t i : s) sum += (sum.empty() ? "" : " + ") + r.variables[i];
      Verdict out(r.id, name, Tri::Yes, Tri::Yes, Tri::Yes,
                  PrincipalElementWitness{sum, "generators multiply to zero, so each lies in the "
                                               "radical of (" + sum + ") and V(" + sum + ") = V" +
                                               name},
                  {citation::kClassicalSupport, citation::kCoherence});
      return finish(std::move(out));
    }
    const NonvanishingResult res = certify_nonvanishing(algebra, ideal, 2, box);
    if (res.witness) {
      return finish(Verdict(
          r.id, name, Tri::No, Tri::No, Tri::No,
          make_cohomology_witness(algebra, ideal, 2, *res.witness, {res.note}),
          {citation::kCoherence}));
    }
    Verdict out(r.id, name, Tri::Unknown, Tri::Unknown, Tri::Unknown, NoWitness{"box-exhausted"},
                {});
    out.add_note(res.note);
    return finish(std::move(out));
  }

  // dim3hyper: kill a variable outside p; the binomial becomes a monomial.
  std::string kill;
  for (const char* cand : {"V", "Y", "U", "X"}) {
    const auto idx = static_cast<std::size_t>(
        std::find(r.variables.begin(), r.variables.end(), cand) - r.variables.begin());
    if (!has(s, idx)) {
      kill = cand;
      break;
    }
  }
  if (kill.empty() || s.size() != 2) {
    return finish(Verdict(r.id, name, Tri::Unknown, Tri::Unknown, Tri::Unknown,
                          NoWitness{"no-monomial-reduction"}, {}));
  }
  const bool keeps_xu = kill == "Y" || kill == "V";
  const MonomialAlgebra surrogate = MonomialAlgebra::parse("X,Y,U,V", keeps_xu ? "XU" : "YV");
  const VariableIdeal p_ideal{s};
  const QuotientCertificate cert = nonvanish_via_quotient(surrogate, kill, p_ideal, 2, box);
  if (!cert.result.witness) {
    Verdict out(r.id, name, Tri::Unknown, Tri::Unknown, Tri::Unknown, NoWitness{"box-exhausted"},
                {});
    out.add_note(cert.result.note);
    return finish(std::move(out));
  }
  std::vector<std::string> steps = cert.steps;
  steps.at(1) = "A/(" + kill + ") = " + cert.quotient.to_string() + " since XU - YV = " +
                (keeps_xu ? "XU" : "-YV") + " mod " + kill;
  return finish(Verdict(
      r.id, name, Tri::No, Tri::No, Tri::No,
      make_cohomology_witness(cert.quotient, cert.ideal, 2, *cert.result.witness, std::move(steps)),
      {citation::kCoherence, citation::kTopCechRightExact}));
}

Verdict classify_segre_spec(const std::string& prime_spec, const std::string& fp) {
  if (!strip(fp).empty()) return classify_segre(PolyPrime{BihomogPoly::parse(fp)});
  if (strip(prime_spec).empty()) throw InputError("segre needs --prime or --fp");
  return classify_segre(parse_linear_pair(prime_spec));
}

}  // namespace

const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> entries{
      {"quad:-5", "Z[sqrt(-5)], Dedekind domain with class group Z/2", "QuadOrder d = -5",
       "primes p<l> / p<l>bar; any quad:<d> with d < 0 squarefree also accepted", true},
      {"ell:0,-4", "Q[X,Y,Z]/(X^3 - Y^2Z - 4Z^3), cone over y^2 = x^3 - 4", "a = 0, b = -4",
       "(2,2) is a non-torsion point", true},
      {"ell:-1,0", "Q[X,Y,Z]/(X^3 - XZ^2 - Y^2Z), cone over y^2 = x^3 - x", "a = -1, b = 0",
       "E(Q) is finite", true},
      {"ell:0,1", "Q[X,Y,Z]/(X^3 - Y^2Z + Z^3), cone over y^2 = x^3 + 1", "a = 0, b = 1",
       "E(Q) = Z/6 generated by (2,3)", true},
      {"segre", "k[X,Y,U,V]/(XU - YV), cone over P^1 x P^1", "X=S0T0, Y=S1T0, U=S1T1, V=S0T1",
       "primes as linear pairs or by their equation f_p (--fp)", true},
      {"twoplanes", "k[[X,Y,U]]/(XU), two planes meeting in a line", "monomial algebra",
       "computed on the polynomial model k[X,Y,U]/(XU)", true},
      {"dim3hyper", "k[[X,Y,U,V]]/(XU - YV), three-dimensional quadric cone", "binomial hypersurface",
       "computed on the polynomial model; reductions modulo a variable are monomial", true},
      {"nagata", "Nagata's noetherian normal local domain with a non-coherent height-one prime",
       "non-constructive completion", "not representable: no finite presentation is available",
       false},
  };
  return entries;
}

std::vector<CatalogEntry> catalog_list(const std::string& filter) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog_list()) {
    if (filter.empty() || e.id.find(filter) != std::string::npos ||
        e.description.find(filter) != std::string::npos) {
      out.push_back(e);
    }
  }
  return out;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const auto& e : catalog_list()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

Verdict classify(const std::string& ring_spec, const std::string& prime_spec,
                 const std::string& fp) {
  const std::string ring = strip(ring_spec);
  if (const CatalogEntry* e = find_entry(ring); e && !e->representable) {
    throw NotRepresentable(e->id + ": " + e->notes);
  }
  if (starts_with(ring, "quad:")) return classify_quad(ring, prime_spec);
  if (starts_with(ring, "ell:")) return classify_curve(parse_ell(ring), prime_spec);
  if (starts_with(ring, "cubic:")) {
    const Polynomial f = parse_polynomial(ring_spec.substr(ring_spec.find(':') + 1), {"X", "Y", "Z"});
    return classify_curve(from_homogeneous(HomogeneousCubic::from_polynomial(f)), prime_spec);
  }
  if (ring == "segre") return classify_segre_spec(prime_spec, fp);
  if (ring == "twoplanes") return classify_variable_prime(twoplanes_ring(), prime_spec, 3);
  if (ring == "dim3hyper") return classify_variable_prime(hyper_ring(), prime_spec, 3);
  throw InputError("unknown ring '" + ring_spec + "'; see `catalog list`");
}

std::vector<Verdict> classify_batch(const std::vector<ClassifyRequest>& requests) {
  std::vector<std::future<Verdict>> futures;
  futures.reserve(requests.size());
  for (const auto& r : requests) {
    futures.push_back(std::async(std::launch::async, [r] { return classify(r); }));
  }
  std::vector<Verdict> out;
  out.reserve(requests.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

std::vector<ClassifyRequest> catalog_examples() {
  return {
      {"quad:-5", "p2", ""},          {"quad:-5", "p3", ""},
      {"quad:-5", "p3bar", ""},       {"quad:-5", "p11", ""},
      {"quad:-5", "p2,p3", ""},       {"quad:-5", "", ""},
      {"ell:0,-4", "2,2", ""},        {"ell:-1,0", "0,0", ""},
      {"ell:-1,0", "1,0", ""},        {"ell:0,1", "2,3", ""},
      {"ell:0,1", "O", ""},           {"segre", "(X,V)", ""},
      {"segre", "(Y,U)", ""},         {"segre", "(X,Y)", ""},
      {"segre", "(U,V)", ""},         {"segre", "", "S0*T0^2 + S1*T1^2"},
      {"segre", "", "S0*T0 + S1*T1"}, {"segre", "", "S0 + S1"},
      {"twoplanes", "(X,Y)", ""},     {"twoplanes", "(X,U)", ""},
      {"twoplanes", "(X)", ""},       {"twoplanes", "(X,Y,U)", ""},
      {"dim3hyper", "(X,Y)", ""},     {"dim3hyper", "(X,V)", ""},
      {"dim3hyper", "(X,Y,U,V)", ""},
  };
}

}  // namespace flatloc
