#include "flatloc/spectool.hpp"

#include "flatloc/numeric.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace flatloc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

SpecPoset SpecPoset::parse(const std::string& text) {
  SpecPoset p;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto lt = line.find('<');
    if (lt == std::string::npos) {
      p.add_node(line);
      continue;
    }
    const std::string child = trim(line.substr(0, lt));
    const std::string parent = trim(line.substr(lt + 1));
    if (child.empty() || parent.empty() || parent.find('<') != std::string::npos) {
      throw InputError("poset line " + std::to_string(line_no) + ": expected 'child < parent'");
    }
    p.add_relation(child, parent);
  }
  return p;
}

void SpecPoset::add_node(const std::string& label) {
  if (label.empty()) throw InputError("empty node label");
  if (parents_.count(label)) return;
  order_.push_back(label);
  parents_[label];
  children_[label];
}

void SpecPoset::add_relation(const std::string& child, const std::string& parent) {
  if (child == parent) throw InputError("node " + child + " cannot lie below itself");
  add_node(child);
  add_node(parent);
  if (up_set(parent).count(child)) {
    throw InputError("relation " + child + " < " + parent + " creates a cycle");
  }
  parents_[child].insert(parent);
  children_[parent].insert(child);
}

void SpecPoset::require(const std::string& label) const {
  if (!contains(label)) throw InputError("unknown prime '" + label + "'");
}

const NodeSet& SpecPoset::parents(const std::string& label) const {
  require(label);
  return parents_.at(label);
}

const NodeSet& SpecPoset::children(const std::string& label) const {
  require(label);
  return children_.at(label);
}

int SpecPoset::height(const std::string& label) const {
  require(label);
  std::map<std::string, int> memo;
  std::function<int(const std::string&)> h = [&](const std::string& n) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    int best = 0;
    for (const auto& c : children_.at(n)) best = std::max(best, h(c) + 1);
    memo[n] = best;
    return best;
  };
  return h(label);
}

NodeSet SpecPoset::up_set(const std::string& label) const {
  require(label);
  NodeSet out{label};
  std::vector<std::string> stack{label};
  while (!stack.empty()) {
    const std::string n = stack.back();
    stack.pop_back();
    for (const auto& q : parents_.at(n)) {
      if (out.insert(q).second) stack.push_back(q);
    }
  }
  return out;
}

NodeSet specialisation_closure(const SpecPoset& p, const NodeSet& s) {
  NodeSet out;
  for (const auto& n : s) {
    const NodeSet up = p.up_set(n);
    out.insert(up.begin(), up.end());
  }
  return out;
}

bool is_closed(const SpecPoset& p, const NodeSet& s) {
  return specialisation_closure(p, s) == s;
}

NodeSet minimal_primes(const SpecPoset& p, const NodeSet& v) {
  NodeSet out;
  for (const auto& n : v) {
    bool minimal = true;
    for (const auto& m : v) {
      if (m != n && p.up_set(m).count(n)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(n);
  }
  return out;
}

bool check_height_condition(const SpecPoset& p, const NodeSet& v) {
  if (!is_closed(p, v)) throw InputError("set " + node_set_to_string(v) + " is not closed");
  for (const auto& n : minimal_primes(p, v)) {
    if (p.height(n) > 1) return false;
  }
  return true;
}

ClosedSetEnumeration enumerate_closed(const SpecPoset& p, bool list, std::size_t bound) {
  if (p.size() > bound) {
    throw InputError("poset has " + std::to_string(p.size()) + " nodes; enumeration bound is " +
                     std::to_string(bound));
  }
  // Nodes sorted so that parents come before children; a node may join only
  // once all its parents are in.
  std::vector<std::string> order = p.nodes();
  std::map<std::string, int> depth;  // longest chain above
  std::function<int(const std::string&)> up = [&](const std::string& n) {
    if (auto it = depth.find(n); it != depth.end()) return it->second;
    int best = 0;
    for (const auto& q : p.parents(n)) best = std::max(best, up(q) + 1);
    depth[n] = best;
    return best;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](const std::string& a, const std::string& b) { return up(a) < up(b); });

  ClosedSetEnumeration out;
  NodeSet current;
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == order.size()) {
      ++out.count;
      if (list) out.sets.push_back(current);
      return;
    }
    walk(k + 1);
    const auto& ps = p.parents(order[k]);
    if (std::all_of(ps.begin(), ps.end(), [&](const std::string& q) { return current.count(q); })) {
      current.insert(order[k]);
      walk(k + 1);
      current.erase(order[k]);
    }
  };
  walk(0);
  return out;
}

bool classical_support_check(const SpecPoset& p, const NodeSet& v,
                             const std::vector<NodeSet>& vanishing_sets) {
  if (!is_closed(p, v)) throw InputError("set " + node_set_to_string(v) + " is not closed");
  NodeSet covered;
  for (const auto& s : vanishing_sets) {
    const NodeSet c = specialisation_closure(p, s);
    covered.insert(c.begin(), c.end());
  }
  return covered == v;
}

std::string node_set_to_string(const NodeSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : s) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  return out + "}";
}

}  // namespace flatloc
