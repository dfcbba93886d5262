#include "flatloc/abgroup.hpp"

#include <ostream>
#include <sstream>

namespace flatloc {

std::string GroupStructure::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank > 0) {
    out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  for (const BigInt& d : invariant_factors) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GroupStructure& g) {
  return os << g.to_string();
}

GroupStructure cokernel_structure(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  const Eigen::Index rank = snf.rank();
  GroupStructure g;
  g.free_rank = static_cast<std::size_t>(m.cols() - rank);
  for (Eigen::Index i = 0; i < rank; ++i) {
    if (snf.diagonal(i, i) > 1) g.invariant_factors.push_back(snf.diagonal(i, i));
  }
  return g;
}

const BigInt& ElementOrder::value() const {
  if (!value_) throw PreconditionError("element has infinite order");
  return *value_;
}

std::string ElementOrder::to_string() const {
  return value_ ? value_->get_str() : std::string("infinite");
}

AbelianGroupPresentation::AbelianGroupPresentation(std::size_t generator_count,
                                                   IntMatrix relations)
    : generator_count_(generator_count), relations_(std::move(relations)) {
  if (relations_.rows() > 0 &&
      static_cast<std::size_t>(relations_.cols()) != generator_count_) {
    throw InputError("relation length " + std::to_string(relations_.cols()) +
                     " does not match generator count " +
                     std::to_string(generator_count_));
  }
  if (relations_.rows() == 0) {
    relations_.resize(0, static_cast<Eigen::Index>(generator_count_));
  }
}

AbelianGroupPresentation::AbelianGroupPresentation(std::size_t generator_count)
    : AbelianGroupPresentation(
          generator_count, IntMatrix(0, static_cast<Eigen::Index>(generator_count))) {}

AbelianGroupPresentation AbelianGroupPresentation::with_relation(
    const IntVector& relation) const {
  if (static_cast<std::size_t>(relation.size()) != generator_count_) {
    throw InputError("relation has wrong length");
  }
  IntMatrix next(relations_.rows() + 1, relations_.cols());
  if (relations_.rows() > 0) next.topRows(relations_.rows()) = relations_;
  next.row(relations_.rows()) = relation.transpose();
  return AbelianGroupPresentation(generator_count_, std::move(next));
}

GroupStructure AbelianGroupPresentation::structure() const {
  return cokernel_structure(relations_);
}

ElementOrder element_order(const AbelianGroupPresentation& group, const IntVector& v) {
  if (static_cast<std::size_t>(v.size()) != group.generator_count()) {
    throw InputError("vector length " + std::to_string(v.size()) +
                     " does not match generator count " +
                     std::to_string(group.generator_count()));
  }
  const auto snf = smith_normal_form(group.relations());
  // x -> x * right maps the relation lattice onto rowspan(diagonal).
  const IntVector coords = (v.transpose() * snf.right).transpose();
  const Eigen::Index rank = snf.rank();
  for (Eigen::Index j = rank; j < coords.size(); ++j) {
    if (coords(j) != 0) return ElementOrder::infinite();
  }
  BigInt order = 1;
  for (Eigen::Index i = 0; i < rank; ++i) {
    const BigInt& d = snf.diagonal(i, i);
    BigInt g = gcd(d, coords(i));
    order = lcm(order, BigInt(d / g));
  }
  return ElementOrder::finite(order);
}

IntMatrix parse_int_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  auto next = [&](const char* what) {
    if (!(in >> token)) throw InputError(std::string("matrix text: missing ") + what);
    return parse_integer(token);
  };
  const BigInt rows = next("row count");
  const BigInt cols = next("column count");
  if (rows < 0 || cols < 0 || !rows.fits_slong_p() || !cols.fits_slong_p()) {
    throw InputError("matrix text: bad dimensions");
  }
  IntMatrix m(rows.get_si(), cols.get_si());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = next("entry");
  }
  if (in >> token) throw InputError("matrix text: trailing data '" + token + "'");
  return m;
}

std::string format_int_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << " " << m.cols() << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << " ";
      out << m(i, j).get_str();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace flatloc
