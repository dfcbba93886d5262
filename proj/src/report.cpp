#include "flatloc/report.hpp"

#include "flatloc/numeric.hpp"

#include <sstream>

namespace flatloc {

using nlohmann::json;

namespace {

Tri tri_from_string(const std::string& s) {
  if (s == "yes") return Tri::Yes;
  if (s == "no") return Tri::No;
  if (s == "unknown") return Tri::Unknown;
  throw InputError("bad tri-state '" + s + "'");
}

struct ToJson {
  json operator()(const NoWitness& w) const { return {{"reason_code", w.reason_code}}; }
  json operator()(const DenominatorsWitness& w) const {
    json entries = json::array();
    for (const auto& e : w.entries) {
      entries.push_back(
          {{"prime", e.prime}, {"class_order", e.class_order}, {"generator", e.generator}});
    }
    return {{"entries", entries}};
  }
  json operator()(const TorsionWitness& w) const {
    json lines = json::array();
    for (const auto& l : w.line_program) {
      lines.push_back({{"form", l.form}, {"exponent", l.exponent}, {"divisor", l.divisor}});
    }
    return {{"order", w.order},
            {"class_image", w.class_image},
            {"reason", w.reason},
            {"line_program", lines},
            {"program_divisor", w.program_divisor}};
  }
  json operator()(const PrincipalElementWitness& w) const {
    return {{"element", w.element}, {"note", w.note}};
  }
  json operator()(const CohomologyWitness& w) const {
    return {{"algebra", w.algebra},
            {"ideal", w.ideal},
            {"degree", w.degree},
            {"multidegree", w.multidegree},
            {"steps", w.steps}};
  }
  json operator()(const HeightViolationWitness& w) const {
    return {{"minimal_primes", w.minimal_primes}, {"heights", w.heights}};
  }
};

std::string multiplicative_set(const DenominatorsWitness& w) {
  if (w.entries.empty()) return "{1}";
  std::string out = "generated by {";
  for (std::size_t i = 0; i < w.entries.size(); ++i) {
    if (i) out += ", ";
    out += w.entries[i].generator;
  }
  return out + "}";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  throw InputError("unknown format '" + name + "' (json|text)");
}

json witness_to_json(const Witness& w) {
  json j = std::visit(ToJson{}, w);
  j["kind"] = witness_kind(w);
  return j;
}

Witness witness_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "None") return NoWitness{j.at("reason_code").get<std::string>()};
  if (kind == "Denominators") {
    DenominatorsWitness w;
    for (const auto& e : j.at("entries")) {
      w.entries.push_back({e.at("prime").get<std::string>(), e.at("class_order").get<std::string>(),
                           e.at("generator").get<std::string>()});
    }
    return w;
  }
  if (kind == "TorsionOrder") {
    TorsionWitness w;
    w.order = j.at("order").get<std::string>();
    w.class_image = j.at("class_image").get<std::string>();
    w.reason = j.at("reason").get<std::string>();
    for (const auto& l : j.at("line_program")) {
      w.line_program.push_back({l.at("form").get<std::string>(), l.at("exponent").get<long>(),
                                l.at("divisor").get<std::string>()});
    }
    w.program_divisor = j.at("program_divisor").get<std::string>();
    return w;
  }
  if (kind == "PrincipalElement") {
    return PrincipalElementWitness{j.at("element").get<std::string>(),
                                   j.at("note").get<std::string>()};
  }
  if (kind == "CohomologyWitness") {
    CohomologyWitness w;
    w.algebra = j.at("algebra").get<std::string>();
    w.ideal = j.at("ideal").get<std::string>();
    w.degree = j.at("degree").get<int>();
    w.multidegree = j.at("multidegree").get<std::vector<int>>();
    w.steps = j.at("steps").get<std::vector<std::string>>();
    return w;
  }
  if (kind == "HeightViolation") {
    HeightViolationWitness w;
    w.minimal_primes = j.at("minimal_primes").get<std::vector<std::string>>();
    w.heights = j.at("heights").get<std::vector<int>>();
    return w;
  }
  throw InputError("unknown witness kind '" + kind + "'");
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["schema"] = kSchemaVersion;
  j["ring"] = v.ring_id();
  j["prime"] = v.prime_description();
  j["flat"] = to_string(v.flat());
  j["universal"] = to_string(v.universal());
  j["classical"] = to_string(v.classical());
  j["witness"] = witness_to_json(v.witness());
  j["citations"] = v.citations();
  j["notes"] = v.notes();
  if (const auto* t = std::get_if<TorsionWitness>(&v.witness())) {
    if (t->order == "infinite") {
      j["torsion"] = "infinite";
    } else {
      j["torsion"] = std::stol(t->order);
    }
  }
  return j;
}

Verdict verdict_from_json(const json& j) {
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) throw InputError("unsupported schema version");
    Verdict v(j.at("ring").get<std::string>(), j.at("prime").get<std::string>(),
              tri_from_string(j.at("flat").get<std::string>()),
              tri_from_string(j.at("universal").get<std::string>()),
              tri_from_string(j.at("classical").get<std::string>()),
              witness_from_json(j.at("witness")),
              j.at("citations").get<std::vector<std::string>>());
    for (const auto& n : j.at("notes")) v.add_note(n.get<std::string>());
    return v;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed verdict JSON: ") + e.what());
  }
}

std::string verdict_to_text(const Verdict& v) {
  std::ostringstream out;
  out << "ring:      " << v.ring_id() << "\n";
  out << "prime:     " << v.prime_description() << "\n";
  out << "flat:      " << to_string(v.flat()) << "\n";
  out << "universal: " << to_string(v.universal()) << "\n";
  out << "classical: " << to_string(v.classical()) << "\n";
  out << "witness:   " << witness_kind(v.witness()) << "\n";
  std::visit(
      [&out](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, NoWitness>) {
          out << "  reason: " << w.reason_code << "\n";
        } else if constexpr (std::is_same_v<W, DenominatorsWitness>) {
          out << "  multiplicative set: " << multiplicative_set(w) << "\n";
          for (const auto& e : w.entries) {
            out << "  " << e.prime << ": class order " << e.class_order << ", generator of power "
                << e.generator << "\n";
          }
        } else if constexpr (std::is_same_v<W, TorsionWitness>) {
          out << "  torsion order: " << w.order << "\n";
          out << "  class image: " << w.class_image << "\n";
          out << "  reason: " << w.reason << "\n";
          for (const auto& l : w.line_program) {
            out << "  line (" << l.form << ")^" << l.exponent << "  div " << l.divisor << "\n";
          }
          if (!w.program_divisor.empty()) out << "  program divisor: " << w.program_divisor << "\n";
        } else if constexpr (std::is_same_v<W, PrincipalElementWitness>) {
          out << "  multiplicative set: {(" << w.element << ")^n}\n";
          out << "  " << w.note << "\n";
        } else if constexpr (std::is_same_v<W, CohomologyWitness>) {
          out << "  H^" << w.degree << "_" << w.ideal << "(" << w.algebra << ") != 0 in degree (";
          for (std::size_t i = 0; i < w.multidegree.size(); ++i) {
            out << (i ? "," : "") << w.multidegree[i];
          }
          out << ")\n";
          for (const auto& s : w.steps) out << "  - " << s << "\n";
        } else if constexpr (std::is_same_v<W, HeightViolationWitness>) {
          for (std::size_t i = 0; i < w.minimal_primes.size(); ++i) {
            out << "  minimal prime " << w.minimal_primes[i] << " has height " << w.heights[i]
                << "\n";
          }
        }
      },
      v.witness());
  if (!v.citations().empty()) {
    out << "citations:\n";
    for (const auto& c : v.citations()) out << "  - " << c << "\n";
  }
  if (!v.notes().empty()) {
    out << "notes:\n";
    for (const auto& n : v.notes()) out << "  - " << n << "\n";
  }
  return out.str();
}

std::string report(const Verdict& v, Format format) {
  if (format == Format::Json) return verdict_to_json(v).dump(2) + "\n";
  return verdict_to_text(v);
}

}  // namespace flatloc
