#ifndef AGRIONT_INFERENCE_HPP
#define AGRIONT_INFERENCE_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "agriont/graph.hpp"

namespace agriont {

enum class Rule {
  SubClassTransitivity,
  TypeInheritance,
  SubPropertyTransitivity,
  PropertyInheritance,
  DomainTyping,
  RangeTyping,
  InverseCompletion,
};

struct RuleSet {
  std::set<Rule> enabled;

  static RuleSet all();
  /// Comma-separated rule names, e.g. "TypeInheritance,InverseCompletion".
  static RuleSet fromNames(const std::string& csv);

  bool has(Rule r) const { return enabled.count(r) != 0; }
  bool empty() const { return enabled.empty(); }
};

class SubclassCycleError : public std::runtime_error {
 public:
  explicit SubclassCycleError(std::vector<Iri> cycle);
  std::vector<Iri> cycle;
};

/// Forward-chains the enabled rules to their least fixpoint. Derived triples
/// are flagged as inferred; the input's asserted triples are untouched.
/// Throws SubclassCycleError when the declared class hierarchy is cyclic.
Graph materialize(const Graph& graph, const RuleSet& rules = RuleSet::all());

/// Reflexive-transitive closure of the declared subclass edges.
std::set<std::pair<Iri, Iri>> subclassClosure(const Graph& graph);

}  // namespace agriont

#endif
