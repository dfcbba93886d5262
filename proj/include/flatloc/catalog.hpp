#ifndef FLATLOC_CATALOG_HPP
#define FLATLOC_CATALOG_HPP

// Built-in rings and the classify dispatcher.
//
// Ring specs: a catalog id, "quad:<d>", "ell:<a>,<b>" or "cubic:<f(X,Y,Z)>".
// Prime specs depend on the ring:
//   quad        comma list of "p<l>" / "p<l>bar", empty for V = {}
//   ell, cubic  "x,y" rational point or "O"
//   segre       "(X,V)" style linear pair, or an equation via `fp`
//   twoplanes,
//   dim3hyper   ideal generated by variables, e.g. "(X,Y)"

#include "flatloc/verdict.hpp"

#include <string>
#include <vector>

namespace flatloc {

struct CatalogEntry {
  std::string id;
  std::string description;
  std::string construction;
  std::string notes;
  bool representable = true;
};

const std::vector<CatalogEntry>& catalog_list();
/// Entries whose id or description contains `filter`; all for an empty filter.
std::vector<CatalogEntry> catalog_list(const std::string& filter);
/// nullptr when absent.
const CatalogEntry* find_entry(const std::string& id);

struct ClassifyRequest {
  std::string ring;
  std::string prime;
  std::string fp;  // Segre equation, overrides prime
};

/// Throws InputError on bad specs and NotRepresentable for catalog entries
/// outside exact reach.
Verdict classify(const std::string& ring_spec, const std::string& prime_spec,
                 const std::string& fp = "");
inline Verdict classify(const ClassifyRequest& r) { return classify(r.ring, r.prime, r.fp); }

/// Independent requests run concurrently; results keep input order.
std::vector<Verdict> classify_batch(const std::vector<ClassifyRequest>& requests);

/// One or more showcase requests per representable catalog entry.
std::vector<ClassifyRequest> catalog_examples();

}  // namespace flatloc

#endif  // FLATLOC_CATALOG_HPP
