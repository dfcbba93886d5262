#include "flatloc/lcohom.hpp"

#include "flatloc/abgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace flatloc {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool is_subset(const VariableSet& small, const VariableSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<VariableSet> combinations(std::size_t n, std::size_t k) {
  std::vector<VariableSet> out;
  if (k > n) return out;
  VariableSet cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

VariableSet map_positions(const VariableSet& positions, const VariableSet& generators) {
  VariableSet out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(generators[p]);
  return out;
}

// Nonzero Cech summands of C^j in degree a, as subsets of generator positions.
std::vector<VariableSet> nonzero_summands(const MonomialAlgebra& algebra,
                                          const VariableIdeal& ideal, std::size_t j,
                                          const Multidegree& a) {
  std::vector<VariableSet> out;
  for (auto& w : combinations(ideal.generators.size(), j)) {
    if (localisation_piece_nonzero(algebra, map_positions(w, ideal.generators), a)) {
      out.push_back(std::move(w));
    }
  }
  return out;
}

IntMatrix differential_between(const MonomialAlgebra& algebra, const VariableIdeal& ideal,
                               const std::vector<VariableSet>& sources,
                               const std::vector<VariableSet>& targets, const Multidegree& a) {
  (void)algebra;
  (void)a;
  std::map<VariableSet, Eigen::Index> row_of;
  for (std::size_t r = 0; r < targets.size(); ++r) row_of[targets[r]] = static_cast<Eigen::Index>(r);
  IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(targets.size()),
                                static_cast<Eigen::Index>(sources.size()));
  const std::size_t g = ideal.generators.size();
  for (std::size_t c = 0; c < sources.size(); ++c) {
    const VariableSet& w = sources[c];
    for (std::size_t k = 0; k < g; ++k) {
      if (std::binary_search(w.begin(), w.end(), k)) continue;
      VariableSet t = w;
      t.insert(std::upper_bound(t.begin(), t.end(), k), k);
      const auto it = row_of.find(t);
      if (it == row_of.end()) continue;
      const auto pos = std::lower_bound(t.begin(), t.end(), k) - t.begin();
      d(it->second, static_cast<Eigen::Index>(c)) = (pos % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

void check_degree(const MonomialAlgebra& algebra, const Multidegree& a) {
  if (a.size() != algebra.size()) {
    throw InputError("multidegree has " + std::to_string(a.size()) + " entries, algebra has " +
                     std::to_string(algebra.size()) + " variables");
  }
}

}  // namespace

MonomialAlgebra::MonomialAlgebra(std::vector<std::string> variables,
                                 const std::vector<std::vector<std::string>>& relations)
    : variables_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw InputError("empty variable name");
    if (!seen.insert(v).second) throw InputError("repeated variable " + v);
  }
  for (const auto& rel : relations) {
    VariableSet s;
    for (const auto& name : rel) s.push_back(index(name));
    std::sort(s.begin(), s.end());
    if (s.empty()) throw InputError("empty monomial relation");
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InputError("relation is not squarefree");
    }
    relations_.push_back(std::move(s));
  }
  std::sort(relations_.begin(), relations_.end());
  relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    for (std::size_t j = 0; j < relations_.size(); ++j) {
      if (i != j && is_subset(relations_[i], relations_[j])) {
        throw InputError("relations must be pairwise incomparable");
      }
    }
  }
}

MonomialAlgebra MonomialAlgebra::parse(const std::string& variables,
                                       const std::string& relations) {
  std::vector<std::string> vars;
  for (auto& v : split(variables, ',')) {
    if (!v.empty()) vars.push_back(v);
  }
  std::vector<std::vector<std::string>> rels;
  for (auto& mono : split(relations, ',')) {
    mono.erase(std::remove(mono.begin(), mono.end(), '*'), mono.end());
    if (mono.empty()) continue;
    std::vector<std::string> names;
    std::size_t pos = 0;
    while (pos < mono.size()) {
      std::size_t best = 0;
      for (const auto& v : vars) {
        if (v.size() > best && mono.compare(pos, v.size(), v) == 0) best = v.size();
      }
      if (best == 0) throw InputError("cannot read relation '" + mono + "'");
      names.push_back(mono.substr(pos, best));
      pos += best;
    }
    rels.push_back(std::move(names));
  }
  return MonomialAlgebra(std::move(vars), rels);
}

std::size_t MonomialAlgebra::index(const std::string& name) const {
  const auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) throw InputError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - variables_.begin());
}

bool MonomialAlgebra::contains_relation(const VariableSet& set) const {
  for (const auto& r : relations_) {
    if (is_subset(r, set)) return true;
  }
  return false;
}

std::size_t MonomialAlgebra::dimension() const {
  for (std::size_t k = size(); k > 0; --k) {
    for (const auto& s : combinations(size(), k)) {
      if (!contains_relation(s)) return k;
    }
  }
  return 0;
}

MonomialAlgebra MonomialAlgebra::kill(const std::string& name) const {
  const std::size_t x = index(name);
  std::vector<std::string> vars;
  for (const auto& v : variables_) {
    if (v != name) vars.push_back(v);
  }
  std::vector<std::vector<std::string>> rels;
  for (const auto& r : relations_) {
    if (std::binary_search(r.begin(), r.end(), x)) continue;
    std::vector<std::string> names;
    for (std::size_t i : r) names.push_back(variables_[i]);
    rels.push_back(std::move(names));
  }
  return MonomialAlgebra(std::move(vars), rels);
}

std::string MonomialAlgebra::to_string() const {
  std::string out = "k[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ",";
    out += variables_[i];
  }
  out += "]";
  if (!relations_.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (i) out += ",";
      for (std::size_t v : relations_[i]) out += variables_[v];
    }
    out += ")";
  }
  return out;
}

VariableIdeal VariableIdeal::from_names(const MonomialAlgebra& algebra,
                                        const std::vector<std::string>& names) {
  VariableIdeal ideal;
  for (const auto& n : names) ideal.generators.push_back(algebra.index(n));
  std::sort(ideal.generators.begin(), ideal.generators.end());
  ideal.generators.erase(std::unique(ideal.generators.begin(), ideal.generators.end()),
                         ideal.generators.end());
  if (ideal.generators.empty()) throw InputError("ideal needs at least one generator");
  return ideal;
}

std::vector<std::string> VariableIdeal::names(const MonomialAlgebra& algebra) const {
  std::vector<std::string> out;
  for (std::size_t g : generators) out.push_back(algebra.variables().at(g));
  return out;
}

std::string VariableIdeal::to_string(const MonomialAlgebra& algebra) const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ",";
    out += algebra.variables().at(generators[i]);
  }
  return out + ")";
}

bool localisation_piece_nonzero(const MonomialAlgebra& algebra, const VariableSet& w,
                                const Multidegree& a) {
  check_degree(algebra, a);
  VariableSet support = w;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const bool inverted = std::binary_search(w.begin(), w.end(), k);
    if (!inverted && a[k] < 0) return false;
    if (!inverted && a[k] > 0) support.push_back(k);
  }
  std::sort(support.begin(), support.end());
  return !algebra.contains_relation(support);
}

IntMatrix cech_differential(const MonomialAlgebra& algebra, const VariableIdeal& ideal,
                            std::size_t j, const Multidegree& a) {
  check_degree(algebra, a);
  return differential_between(algebra, ideal, nonzero_summands(algebra, ideal, j, a),
                              nonzero_summands(algebra, ideal, j + 1, a), a);
}

std::size_t cech_dim(const MonomialAlgebra& algebra, const VariableIdeal& ideal, std::size_t i,
                     const Multidegree& a) {
  check_degree(algebra, a);
  const std::size_t g = ideal.generators.size();
  if (i > g) return 0;
  const auto here = nonzero_summands(algebra, ideal, i, a);
  if (here.empty()) return 0;
  std::size_t rank_out = 0;
  if (i < g) {
    rank_out = static_cast<std::size_t>(exact_rank(
        differential_between(algebra, ideal, here, nonzero_summands(algebra, ideal, i + 1, a), a)));
  }
  std::size_t rank_in = 0;
  if (i > 0) {
    rank_in = static_cast<std::size_t>(exact_rank(
        differential_between(algebra, ideal, nonzero_summands(algebra, ideal, i - 1, a), here, a)));
  }
  return here.size() - rank_out - rank_in;
}

std::size_t effective_length(const MonomialAlgebra& algebra, const VariableIdeal& ideal) {
  const std::size_t g = ideal.generators.size();
  for (std::size_t k = g; k > 0; --k) {
    for (const auto& w : combinations(g, k)) {
      if (!algebra.contains_relation(map_positions(w, ideal.generators))) return k;
    }
  }
  return 0;
}

bool vanishes_by_length(const MonomialAlgebra& algebra, const VariableIdeal& ideal,
                        std::size_t i) {
  return i > effective_length(algebra, ideal) || i > algebra.dimension();
}

std::vector<Multidegree> box_degrees(std::size_t variable_count, int box) {
  if (box < 0) throw InputError("box must be non-negative");
  std::vector<Multidegree> out;
  Multidegree cur(variable_count, -box);
  while (true) {
    out.push_back(cur);
    std::size_t k = variable_count;
    while (k > 0 && cur[k - 1] == box) {
      cur[k - 1] = -box;
      --k;
    }
    if (k == 0) break;
    ++cur[k - 1];
  }
  auto l1 = [](const Multidegree& a) {
    long s = 0;
    for (int x : a) s += std::abs(x);
    return s;
  };
  std::stable_sort(out.begin(), out.end(), [&](const Multidegree& x, const Multidegree& y) {
    const long nx = l1(x), ny = l1(y);
    if (nx != ny) return nx < ny;
    return x < y;
  });
  return out;
}

NonvanishingResult certify_nonvanishing(const MonomialAlgebra& algebra,
                                        const VariableIdeal& ideal, std::size_t i, int box) {
  if (box < 1) throw InputError("box must be at least 1");
  NonvanishingResult r;
  if (vanishes_by_length(algebra, ideal, i)) {
    r.vanishes = true;
    std::ostringstream note;
    note << "H^" << i << " vanishes: ";
    if (i > ideal.generators.size()) {
      note << "degree exceeds the " << ideal.generators.size() << " generators of "
           << ideal.to_string(algebra);
    } else if (i > effective_length(algebra, ideal)) {
      note << "every Cech term of degree >= " << i << " localises at a zero monomial";
    } else {
      note << "degree exceeds dim A = " << algebra.dimension();
    }
    r.note = note.str();
    return r;
  }
  for (const auto& a : box_degrees(algebra.size(), box)) {
    ++r.scanned;
    if (cech_dim(algebra, ideal, i, a) > 0) {
      r.witness = a;
      r.note = "H^" + std::to_string(i) + " nonzero in degree " + multidegree_to_string(a);
      return r;
    }
  }
  r.note = "no nonzero degree with |a_j| <= " + std::to_string(box) +
           "; inconclusive, not a vanishing proof";
  return r;
}

QuotientCertificate nonvanish_via_quotient(const MonomialAlgebra& algebra,
                                           const std::string& kill, const VariableIdeal& ideal,
                                           std::size_t i, int box) {
  const std::size_t g = ideal.generators.size();
  if (i != g) {
    throw PreconditionError("quotient reduction needs the top degree i = " + std::to_string(g) +
                            ", got " + std::to_string(i));
  }
  const std::size_t x = algebra.index(kill);
  if (std::binary_search(ideal.generators.begin(), ideal.generators.end(), x)) {
    throw InputError("cannot kill generator " + kill + " of the ideal");
  }
  MonomialAlgebra quotient = algebra.kill(kill);
  const VariableIdeal reduced = VariableIdeal::from_names(quotient, ideal.names(algebra));
  NonvanishingResult result = certify_nonvanishing(quotient, reduced, i, box);
  std::vector<std::string> steps;
  steps.push_back("H^" + std::to_string(i) + "_I(A) -> H^" + std::to_string(i) + "_I(A/(" + kill +
                  ")) is onto: top Cech degree is right exact");
  steps.push_back("A/(" + kill + ") = " + quotient.to_string());
  if (result.witness) {
    steps.push_back("H^" + std::to_string(i) + "_" + reduced.to_string(quotient) + "(" +
                    quotient.to_string() + ") has dimension " +
                    std::to_string(cech_dim(quotient, reduced, i, *result.witness)) +
                    " in degree " + multidegree_to_string(*result.witness));
  } else {
    steps.push_back(result.note);
  }
  return QuotientCertificate{std::move(quotient), reduced, i, std::move(result), std::move(steps)};
}

std::vector<std::size_t> box_piecewise_dims(const MonomialAlgebra& algebra,
                                            const VariableIdeal& ideal, int box) {
  const std::size_t g = ideal.generators.size();
  std::vector<std::size_t> totals(g + 1, 0);
  for (const auto& a : box_degrees(algebra.size(), box)) {
    for (std::size_t i = 0; i <= g; ++i) totals[i] += cech_dim(algebra, ideal, i, a);
  }
  return totals;
}

std::vector<std::size_t> box_total_dims(const MonomialAlgebra& algebra,
                                        const VariableIdeal& ideal, int box) {
  const std::size_t g = ideal.generators.size();
  const auto degrees = box_degrees(algebra.size(), box);
  // Block sizes of C^j over the whole box, then the block-diagonal d^j.
  std::vector<std::vector<std::vector<VariableSet>>> summands(g + 1);
  std::vector<Eigen::Index> dims(g + 1, 0);
  for (std::size_t j = 0; j <= g; ++j) {
    for (const auto& a : degrees) {
      summands[j].push_back(nonzero_summands(algebra, ideal, j, a));
      dims[j] += static_cast<Eigen::Index>(summands[j].back().size());
    }
  }
  std::vector<Eigen::Index> ranks(g + 1, 0);  // rank of d^j : C^j -> C^{j+1}
  for (std::size_t j = 0; j < g; ++j) {
    IntMatrix d = IntMatrix::Zero(dims[j + 1], dims[j]);
    Eigen::Index row = 0, col = 0;
    for (std::size_t t = 0; t < degrees.size(); ++t) {
      const IntMatrix block =
          differential_between(algebra, ideal, summands[j][t], summands[j + 1][t], degrees[t]);
      d.block(row, col, block.rows(), block.cols()) = block;
      row += block.rows();
      col += block.cols();
    }
    ranks[j] = exact_rank(d);
  }
  std::vector<std::size_t> totals(g + 1, 0);
  for (std::size_t i = 0; i <= g; ++i) {
    const Eigen::Index in = i > 0 ? ranks[i - 1] : 0;
    totals[i] = static_cast<std::size_t>(dims[i] - ranks[i] - in);
  }
  return totals;
}

CohomologyWitness make_cohomology_witness(const MonomialAlgebra& algebra,
                                          const VariableIdeal& ideal, std::size_t i,
                                          const Multidegree& a, std::vector<std::string> steps) {
  CohomologyWitness w;
  w.algebra = algebra.to_string();
  w.ideal = ideal.to_string(algebra);
  w.degree = static_cast<int>(i);
  w.multidegree = a;
  w.steps = std::move(steps);
  return w;
}

std::string multidegree_to_string(const Multidegree& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out + ")";
}

}  // namespace flatloc
