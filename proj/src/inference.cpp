#include "agriont/inference.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "agriont/vocab.hpp"

namespace agriont {

RuleSet RuleSet::all() {
  return RuleSet{{Rule::SubClassTransitivity, Rule::TypeInheritance,
                  Rule::SubPropertyTransitivity, Rule::PropertyInheritance,
                  Rule::DomainTyping, Rule::RangeTyping,
                  Rule::InverseCompletion}};
}

RuleSet RuleSet::fromNames(const std::string& csv) {
  static const std::map<std::string, Rule> names = {
      {"SubClassTransitivity", Rule::SubClassTransitivity},
      {"TypeInheritance", Rule::TypeInheritance},
      {"SubPropertyTransitivity", Rule::SubPropertyTransitivity},
      {"PropertyInheritance", Rule::PropertyInheritance},
      {"DomainTyping", Rule::DomainTyping},
      {"RangeTyping", Rule::RangeTyping},
      {"InverseCompletion", Rule::InverseCompletion},
  };
  RuleSet rs;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto it = names.find(item);
    if (it == names.end())
      throw std::invalid_argument("unknown inference rule: " + item);
    rs.enabled.insert(it->second);
  }
  return rs;
}

namespace {

std::string joinCycle(const std::vector<Iri>& cycle) {
  std::string out = "subclass cycle: ";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += " -> ";
    out += cycle[i].value();
  }
  return out;
}

/// DFS cycle check over the declared subclass edges.
void checkAcyclic(
    const std::unordered_map<std::string, std::vector<std::string>>& edges) {
  enum State { White, Grey, Black };
  std::unordered_map<std::string, State> state;
  std::vector<std::string> stack;

  std::function<void(const std::string&)> visit =
      [&](const std::string& node) {
        state[node] = Grey;
        stack.push_back(node);
        auto it = edges.find(node);
        if (it != edges.end()) {
          for (const std::string& next : it->second) {
            State s = state.count(next) ? state[next] : White;
            if (s == Grey) {
              std::vector<Iri> cycle;
              auto start =
                  std::find(stack.begin(), stack.end(), next);
              for (auto jt = start; jt != stack.end(); ++jt)
                cycle.emplace_back(*jt);
              cycle.emplace_back(next);
              throw SubclassCycleError(std::move(cycle));
            }
            if (s == White) visit(next);
          }
        }
        state[node] = Black;
        stack.pop_back();
      };

  for (const auto& [node, _] : edges)
    if (!state.count(node)) visit(node);
}

}  // namespace

SubclassCycleError::SubclassCycleError(std::vector<Iri> cycleIn)
    : std::runtime_error(joinCycle(cycleIn)), cycle(std::move(cycleIn)) {}

Graph materialize(const Graph& input, const RuleSet& rules) {
  if (rules.empty())
    throw std::invalid_argument("materialize called with empty rule set");

  {
    std::unordered_map<std::string, std::vector<std::string>> declared;
    for (const Triple& t :
         input.match({}, vocab::rdfsSubClassOf, {})) {
      if (t.subject.isIri() && t.object.isIri() &&
          t.subject.iri() != t.object.iri())
        declared[t.subject.iri().value()].push_back(t.object.iri().value());
      else if (t.subject.isIri() && t.object.isIri())
        throw SubclassCycleError({t.subject.iri(), t.object.iri()});
    }
    checkAcyclic(declared);
  }

  Graph g = input;
  auto add = [&](Triple t) { return g.insert(std::move(t), true); };

  bool changed = true;
  while (changed) {
    changed = false;

    // Schema views for this pass.
    std::unordered_map<std::string, std::vector<Iri>> subClassOf, subPropOf,
        inverses;
    std::unordered_map<std::string, std::vector<Iri>> domains, ranges;
    std::unordered_set<std::string> objectProps;

    for (const Triple& t : g.match({}, vocab::rdfType, {}))
      if (t.subject.isIri() && t.object.isIri() &&
          t.object.iri() == vocab::owlObjectProperty)
        objectProps.insert(t.subject.iri().value());
    for (const Triple& t : g.match({}, vocab::rdfsSubClassOf, {}))
      if (t.subject.isIri() && t.object.isIri())
        subClassOf[t.subject.iri().value()].push_back(t.object.iri());
    for (const Triple& t : g.match({}, vocab::rdfsSubPropertyOf, {}))
      if (t.subject.isIri() && t.object.isIri())
        subPropOf[t.subject.iri().value()].push_back(t.object.iri());
    for (const Triple& t : g.match({}, vocab::rdfsDomain, {}))
      if (t.subject.isIri() && t.object.isIri())
        domains[t.subject.iri().value()].push_back(t.object.iri());
    for (const Triple& t : g.match({}, vocab::rdfsRange, {}))
      if (t.subject.isIri() && t.object.isIri())
        ranges[t.subject.iri().value()].push_back(t.object.iri());
    for (const Triple& t : g.match({}, vocab::owlInverseOf, {}))
      if (t.subject.isIri() && t.object.isIri()) {
        inverses[t.subject.iri().value()].push_back(t.object.iri());
        inverses[t.object.iri().value()].push_back(t.subject.iri());
      }

    if (rules.has(Rule::SubClassTransitivity)) {
      for (const auto& [a, bs] : subClassOf)
        for (const Iri& b : bs) {
          auto it = subClassOf.find(b.value());
          if (it == subClassOf.end()) continue;
          for (const Iri& c : it->second)
            if (a != c.value())
              changed |= add(Triple(Term(Iri(a)), vocab::rdfsSubClassOf,
                                    Term(c)));
        }
    }
    if (rules.has(Rule::SubPropertyTransitivity)) {
      for (const auto& [a, bs] : subPropOf)
        for (const Iri& b : bs) {
          auto it = subPropOf.find(b.value());
          if (it == subPropOf.end()) continue;
          for (const Iri& c : it->second)
            if (a != c.value())
              changed |= add(Triple(Term(Iri(a)), vocab::rdfsSubPropertyOf,
                                    Term(c)));
        }
    }

    for (const Triple& t : g.triples()) {
      const std::string& p = t.predicate.value();
      if (rules.has(Rule::TypeInheritance) && t.predicate == vocab::rdfType &&
          t.object.isIri()) {
        auto it = subClassOf.find(t.object.iri().value());
        if (it != subClassOf.end())
          for (const Iri& super : it->second)
            changed |= add(Triple(t.subject, vocab::rdfType, Term(super)));
      }
      if (rules.has(Rule::PropertyInheritance)) {
        auto it = subPropOf.find(p);
        if (it != subPropOf.end())
          for (const Iri& super : it->second)
            changed |= add(Triple(t.subject, super, t.object));
      }
      if (rules.has(Rule::DomainTyping)) {
        auto it = domains.find(p);
        if (it != domains.end())
          for (const Iri& d : it->second)
            changed |= add(Triple(t.subject, vocab::rdfType, Term(d)));
      }
      if (rules.has(Rule::RangeTyping) && objectProps.count(p) &&
          !t.object.isLiteral()) {
        auto it = ranges.find(p);
        if (it != ranges.end())
          for (const Iri& r : it->second)
            changed |= add(Triple(t.object, vocab::rdfType, Term(r)));
      }
      if (rules.has(Rule::InverseCompletion) && !t.object.isLiteral()) {
        auto it = inverses.find(p);
        if (it != inverses.end())
          for (const Iri& q : it->second)
            changed |= add(Triple(t.object, q, t.subject));
      }
    }
  }

  g.materialized = true;
  return g;
}

std::set<std::pair<Iri, Iri>> subclassClosure(const Graph& graph) {
  std::unordered_map<std::string, std::vector<std::string>> edges;
  std::set<std::string> nodes;
  for (const Triple& t : graph.match({}, vocab::rdfsSubClassOf, {})) {
    if (!t.subject.isIri() || !t.object.isIri()) continue;
    edges[t.subject.iri().value()].push_back(t.object.iri().value());
    nodes.insert(t.subject.iri().value());
    nodes.insert(t.object.iri().value());
  }
  for (const Triple& t : graph.match({}, vocab::rdfType,
                                     Term(vocab::owlClass)))
    if (t.subject.isIri()) nodes.insert(t.subject.iri().value());

  std::set<std::pair<Iri, Iri>> closure;
  for (const std::string& start : nodes) {
    std::vector<std::string> work{start};
    std::unordered_set<std::string> seen{start};
    while (!work.empty()) {
      std::string cur = work.back();
      work.pop_back();
      closure.emplace(Iri(start), Iri(cur));
      auto it = edges.find(cur);
      if (it == edges.end()) continue;
      for (const std::string& next : it->second)
        if (seen.insert(next).second) work.push_back(next);
    }
  }
  return closure;
}

}  // namespace agriont
