#ifndef FLATLOC_VERDICT_HPP
#define FLATLOC_VERDICT_HPP

// Tri-state classification result shared by every classifier.
//
// Invariant (checked on construction): classical => universal => flat, read
// on tri-states as "a stronger yes forces a weaker yes, a weaker no forces a
// stronger no".

#include <string>
#include <variant>
#include <vector>

namespace flatloc {

enum class Tri { Yes, No, Unknown };

std::string to_string(Tri t);

/// Short criterion names attached to verdicts.
namespace citation {
inline constexpr const char* kDimensionOne =
    "dimension <= 1: every flat epimorphism is a universal localisation";
inline constexpr const char* kPicTorsionClassical =
    "invertible ideal torsion in Pic A: universal localisation is classical";
inline constexpr const char* kNormalDomain =
    "normal domain: universal iff [p] torsion in Cl A/Pic A; classical if torsion in Cl A";
inline constexpr const char* kCoherence = "coherence: H^k_V(A)=0 for all k>1";
inline constexpr const char* kHeightCondition =
    "coherence forces minimal primes of V of height zero or one";
inline constexpr const char* kClassicalSupport = "classical at S iff V = union of V(s), s in S";
inline constexpr const char* kGradedPicZero = "graded normal ring with A_0=k: Pic A = 0";
inline constexpr const char* kEllipticClassGroup = "elliptic cone: Cl A = E(k) x Z/(3), [p] -> (P, 1)";
inline constexpr const char* kTwoDimensionalGRing =
    "normal G-ring of dimension two: minimal primes of height <= 1 give coherent complement";
inline constexpr const char* kNonTorsionPoint =
    "non-torsion rational point: flat epimorphism exists, not a universal localisation";
inline constexpr const char* kMazur = "Mazur: rational torsion orders lie in {1..10, 12}";
inline constexpr const char* kNagellLutz = "Nagell-Lutz: torsion points of integral models are integral";
inline constexpr const char* kSegreClassGroup = "Segre cone: Cl A = Z via [p] -> e_p - d_p";
inline constexpr const char* kSegreTrichotomy = "Segre cone: bidegree trichotomy for height-one primes";
inline constexpr const char* kTopCechRightExact =
    "top local cohomology is right exact: reduce modulo a variable";
inline constexpr const char* kPrincipalPrime = "principal prime p = sA: V(p) = V(s) is classical";
}  // namespace citation

struct DenominatorsWitness {
  struct Entry {
    std::string prime;
    std::string class_order;
    std::string generator;  // s with (s) = p^order
  };
  std::vector<Entry> entries;
};

struct LineRecord {
  std::string form;     // linear form in X, Y, Z
  long exponent = 0;
  std::string divisor;  // formal divisor of form/Z
};

struct TorsionWitness {
  std::string order;        // decimal or "infinite"
  std::string class_image;  // image of [p] in the class group description
  std::string reason;
  std::vector<LineRecord> line_program;
  std::string program_divisor;  // formal divisor of the whole program
};

struct PrincipalElementWitness {
  std::string element;
  std::string note;
};

struct CohomologyWitness {
  std::string algebra;
  std::string ideal;
  int degree = 0;
  std::vector<int> multidegree;
  std::vector<std::string> steps;
};

struct HeightViolationWitness {
  std::vector<std::string> minimal_primes;
  std::vector<int> heights;
};

struct NoWitness {
  std::string reason_code;
};

using Witness = std::variant<NoWitness, DenominatorsWitness, TorsionWitness,
                             PrincipalElementWitness, CohomologyWitness, HeightViolationWitness>;

std::string witness_kind(const Witness& w);

class Verdict {
 public:
  /// Throws std::logic_error if the tri-states break monotonicity.
  Verdict(std::string ring_id, std::string prime_description, Tri flat, Tri universal,
          Tri classical, Witness witness, std::vector<std::string> citations);

  const std::string& ring_id() const { return ring_id_; }
  const std::string& prime_description() const { return prime_description_; }
  Tri flat() const { return flat_; }
  Tri universal() const { return universal_; }
  Tri classical() const { return classical_; }
  const Witness& witness() const { return witness_; }
  const std::vector<std::string>& citations() const { return citations_; }
  const std::vector<std::string>& notes() const { return notes_; }

  Verdict& add_note(std::string note);
  Verdict& add_citation(std::string anchor);
  Verdict& set_ring_id(std::string id);

  static bool is_monotone(Tri flat, Tri universal, Tri classical);

 private:
  std::string ring_id_;
  std::string prime_description_;
  Tri flat_;
  Tri universal_;
  Tri classical_;
  Witness witness_;
  std::vector<std::string> citations_;
  std::vector<std::string> notes_;
};

}  // namespace flatloc

#endif  // FLATLOC_VERDICT_HPP
