#ifndef FLATLOC_SPECTOOL_HPP
#define FLATLOC_SPECTOOL_HPP

// Finite fragments of Spec A as posets under inclusion, and their
// specialisation closed (upward closed) subsets.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace flatloc {

using NodeSet = std::set<std::string>;

class SpecPoset {
 public:
  SpecPoset() = default;

  /// Lines "child < parent" (child properly contained in parent); a line
  /// with a single label adds an isolated node; '#' starts a comment.
  /// Throws InputError on malformed lines or cycles.
  static SpecPoset parse(const std::string& text);

  void add_node(const std::string& label);
  /// child < parent. Throws InputError if this creates a cycle.
  void add_relation(const std::string& child, const std::string& parent);

  std::size_t size() const { return order_.size(); }
  bool contains(const std::string& label) const { return parents_.count(label) > 0; }
  /// Insertion order.
  const std::vector<std::string>& nodes() const { return order_; }
  const NodeSet& parents(const std::string& label) const;
  const NodeSet& children(const std::string& label) const;

  /// Longest chain strictly below the node.
  int height(const std::string& label) const;
  /// Every node above or equal to the given one.
  NodeSet up_set(const std::string& label) const;

 private:
  void require(const std::string& label) const;
  std::vector<std::string> order_;
  std::map<std::string, NodeSet> parents_;
  std::map<std::string, NodeSet> children_;
};

NodeSet specialisation_closure(const SpecPoset& p, const NodeSet& s);
bool is_closed(const SpecPoset& p, const NodeSet& s);

/// Members of v with no member strictly below them.
NodeSet minimal_primes(const SpecPoset& p, const NodeSet& v);
/// All minimal members have height <= 1. Throws InputError if v is not closed.
bool check_height_condition(const SpecPoset& p, const NodeSet& v);

inline constexpr std::size_t kDefaultEnumerationBound = 20;

struct ClosedSetEnumeration {
  std::size_t count = 0;
  std::vector<NodeSet> sets;  // empty when only counting
};

/// Every upward closed subset. Throws InputError if the poset exceeds the bound.
ClosedSetEnumeration enumerate_closed(const SpecPoset& p, bool list = true,
                                      std::size_t bound = kDefaultEnumerationBound);

/// v equals the union of the closures of the vanishing sets V(s).
bool classical_support_check(const SpecPoset& p, const NodeSet& v,
                             const std::vector<NodeSet>& vanishing_sets);

std::string node_set_to_string(const NodeSet& s);

}  // namespace flatloc

#endif  // FLATLOC_SPECTOOL_HPP
