#ifndef FLATLOC_LCOHOM_HPP
#define FLATLOC_LCOHOM_HPP

// Multigraded Cech local cohomology of k[x_1..x_m]/(squarefree monomials)
// with respect to ideals generated by variables.
//
// In multidegree a the localisation A_{x_W} has a piece of dimension 0 or 1:
// it is nonzero iff a_k >= 0 outside W and W together with the positive
// support of a contains no relation.

#include "flatloc/numeric.hpp"
#include "flatloc/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flatloc {

using Multidegree = std::vector<int>;
using VariableSet = std::vector<std::size_t>;  // sorted indices

class MonomialAlgebra {
 public:
  /// Relations are squarefree monomials given by their variable names.
  /// Throws InputError on unknown or repeated names, or comparable relations.
  MonomialAlgebra(std::vector<std::string> variables,
                  const std::vector<std::vector<std::string>>& relations);

  /// "X,Y,U" and "XU,YV" (or "X*U"); an empty relation list is allowed.
  static MonomialAlgebra parse(const std::string& variables, const std::string& relations);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<VariableSet>& relations() const { return relations_; }
  std::size_t size() const { return variables_.size(); }
  std::size_t index(const std::string& name) const;

  /// True iff the set contains some relation (the monomial is zero).
  bool contains_relation(const VariableSet& set) const;
  /// Largest size of a relation-free variable set.
  std::size_t dimension() const;

  /// A/(x): relations through x disappear along with x.
  MonomialAlgebra kill(const std::string& name) const;

  /// "k[X,Y,U]/(XU)"
  std::string to_string() const;

 private:
  std::vector<std::string> variables_;
  std::vector<VariableSet> relations_;
};

struct VariableIdeal {
  VariableSet generators;

  static VariableIdeal from_names(const MonomialAlgebra& algebra,
                                  const std::vector<std::string>& names);
  std::vector<std::string> names(const MonomialAlgebra& algebra) const;
  /// "(X,Y)"
  std::string to_string(const MonomialAlgebra& algebra) const;
};

/// Dimension of the degree-a piece of A_{x_W}.
bool localisation_piece_nonzero(const MonomialAlgebra& algebra, const VariableSet& w,
                                const Multidegree& a);

/// Cech differential d^j in degree a: rows index (j+1)-subsets, columns
/// j-subsets of the generators, both in lexicographic order.
IntMatrix cech_differential(const MonomialAlgebra& algebra, const VariableIdeal& ideal,
                            std::size_t j, const Multidegree& a);

/// dim_Q H^i_I(A)_a.
std::size_t cech_dim(const MonomialAlgebra& algebra, const VariableIdeal& ideal, std::size_t i,
                     const Multidegree& a);

/// Largest j with some relation-free j-subset of the generators: the Cech
/// complex is zero above it.
std::size_t effective_length(const MonomialAlgebra& algebra, const VariableIdeal& ideal);

/// H^i_I(A) = 0 in every degree, by the complex length or the dimension bound.
bool vanishes_by_length(const MonomialAlgebra& algebra, const VariableIdeal& ideal,
                        std::size_t i);

/// All multidegrees with |a_j| <= box, ordered by L1 norm then lexicographically.
std::vector<Multidegree> box_degrees(std::size_t variable_count, int box);

struct NonvanishingResult {
  std::optional<Multidegree> witness;
  bool vanishes = false;  // proven zero by vanishes_by_length
  std::size_t scanned = 0;
  std::string note;
};

/// First degree in the box with nonzero H^i. A miss is not a vanishing proof
/// unless `vanishes` is set.
NonvanishingResult certify_nonvanishing(const MonomialAlgebra& algebra,
                                        const VariableIdeal& ideal, std::size_t i, int box);

struct QuotientCertificate {
  MonomialAlgebra quotient;
  VariableIdeal ideal;  // indices into the quotient
  std::size_t degree;
  NonvanishingResult result;
  std::vector<std::string> steps;
};

/// H^g_I(A) -> H^g_I(A/(x)) is onto for g the generator count, so a witness
/// on the quotient proves H^g_I(A) != 0. Throws PreconditionError unless
/// i == g, InputError if x is a generator of I.
QuotientCertificate nonvanish_via_quotient(const MonomialAlgebra& algebra,
                                           const std::string& kill, const VariableIdeal& ideal,
                                           std::size_t i, int box);

/// Sum over the box of dim H^i in each degree, for i = 0..generator count.
std::vector<std::size_t> box_piecewise_dims(const MonomialAlgebra& algebra,
                                            const VariableIdeal& ideal, int box);
/// Same totals from one block complex over the whole box.
std::vector<std::size_t> box_total_dims(const MonomialAlgebra& algebra,
                                        const VariableIdeal& ideal, int box);

CohomologyWitness make_cohomology_witness(const MonomialAlgebra& algebra,
                                          const VariableIdeal& ideal, std::size_t i,
                                          const Multidegree& a, std::vector<std::string> steps);

/// "(-1,-1,0)"
std::string multidegree_to_string(const Multidegree& a);

}  // namespace flatloc

#endif  // FLATLOC_LCOHOM_HPP
