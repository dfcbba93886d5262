#include "flatloc/verdict.hpp"

#include <stdexcept>

namespace flatloc {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "yes";
    case Tri::No:
      return "no";
    case Tri::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string witness_kind(const Witness& w) {
  struct Visitor {
    std::string operator()(const NoWitness&) const { return "None"; }
    std::string operator()(const DenominatorsWitness&) const { return "Denominators"; }
    std::string operator()(const TorsionWitness&) const { return "TorsionOrder"; }
    std::string operator()(const PrincipalElementWitness&) const { return "PrincipalElement"; }
    std::string operator()(const CohomologyWitness&) const { return "CohomologyWitness"; }
    std::string operator()(const HeightViolationWitness&) const { return "HeightViolation"; }
  };
  return std::visit(Visitor{}, w);
}

namespace {

// stronger => weaker on tri-states.
bool implies(Tri stronger, Tri weaker) {
  if (stronger == Tri::Yes && weaker != Tri::Yes) return false;
  if (weaker == Tri::No && stronger != Tri::No) return false;
  return true;
}

}  // namespace

bool Verdict::is_monotone(Tri flat, Tri universal, Tri classical) {
  return implies(classical, universal) && implies(universal, flat) && implies(classical, flat);
}

Verdict::Verdict(std::string ring_id, std::string prime_description, Tri flat, Tri universal,
                 Tri classical, Witness witness, std::vector<std::string> citations)
    : ring_id_(std::move(ring_id)),
      prime_description_(std::move(prime_description)),
      flat_(flat),
      universal_(universal),
      classical_(classical),
      witness_(std::move(witness)),
      citations_(std::move(citations)) {
  if (!is_monotone(flat_, universal_, classical_)) {
    throw std::logic_error("verdict violates classical => universal => flat: flat=" +
                           to_string(flat_) + " universal=" + to_string(universal_) +
                           " classical=" + to_string(classical_));
  }
  const bool decided = flat_ != Tri::Unknown || universal_ != Tri::Unknown ||
                       classical_ != Tri::Unknown;
  if (decided && citations_.empty()) {
    throw std::logic_error("decided verdict without a citation");
  }
}

Verdict& Verdict::add_note(std::string note) {
  notes_.push_back(std::move(note));
  return *this;
}

Verdict& Verdict::add_citation(std::string anchor) {
  citations_.push_back(std::move(anchor));
  return *this;
}

Verdict& Verdict::set_ring_id(std::string id) {
  ring_id_ = std::move(id);
  return *this;
}

}  // namespace flatloc
