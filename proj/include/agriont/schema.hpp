#ifndef AGRIONT_SCHEMA_HPP
#define AGRIONT_SCHEMA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agriont/graph.hpp"
#include "agriont/vocab.hpp"

namespace agriont {

enum class Subdomain { Top, Agricultural, IoT, Geographical, Business };

struct ClassDef {
  Iri iri;
  std::string label;
  std::vector<Iri> parents;
  Subdomain subdomain = Subdomain::Top;
  std::vector<std::string> altLabels;
};

enum class PropertyKind { Object, Data };

struct PropertyDef {
  Iri iri;
  PropertyKind kind = PropertyKind::Object;
  std::optional<Iri> domain;
  std::optional<Iri> range;
  std::optional<Iri> inverse;
  std::vector<Iri> parents;
};

struct OntologyMetrics {
  std::uint64_t axiomCount = 0;
  std::uint64_t logicalAxiomCount = 0;
  std::uint64_t declarationAxiomCount = 0;
  std::uint64_t classCount = 0;
  std::uint64_t objectPropertyCount = 0;
  std::uint64_t dataPropertyCount = 0;
  std::uint64_t individualCount = 0;
};

/// The core class inventory: four thematic subdomains rooted at Entity.
std::vector<ClassDef> coreClasses(const std::string& ns = vocab::defaultNs);
std::vector<PropertyDef> coreProperties(
    const std::string& ns = vocab::defaultNs);

/// Builds the core ontology graph: class hierarchy, object/data properties
/// with domains, ranges and inverse pairs, and labels.
Graph buildCoreSchema(const Iri& namespaceIri = Iri(vocab::defaultNs));

OntologyMetrics computeMetrics(const Graph& graph);

}  // namespace agriont

#endif
