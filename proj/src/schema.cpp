#include "agriont/schema.hpp"

#include <set>
#include <unordered_set>

namespace agriont {

namespace {

struct ClassSpec {
  const char* name;
  const char* parent;  // nullptr for the root
  Subdomain subdomain;
  std::vector<const char*> altLabels;
  const char* extraParent = nullptr;  // rare multiple inheritance
};

const std::vector<ClassSpec>& classTable() {
  static const std::vector<ClassSpec> table = {
      // Top level
      {"Entity", nullptr, Subdomain::Top, {"Thing"}},
      {"VirtualEntity", "Entity", Subdomain::Top, {}},
      {"PhysicalEntity", "Entity", Subdomain::Top, {}},

      // Agricultural subdomain
      // A farm is also a located thing; the spatial parent pulls the
      // location data properties into its warehouse table.
      {"Farm", "PhysicalEntity", Subdomain::Agricultural, {"Field"},
       "SpatialThing"},
      {"Product", "PhysicalEntity", Subdomain::Agricultural, {}},
      {"Food", "Product", Subdomain::Agricultural, {}},
      {"DairyFood", "Food", Subdomain::Agricultural, {}},
      {"ProcessedFood", "Food", Subdomain::Agricultural, {}},
      {"Oil", "Product", Subdomain::Agricultural, {}},
      {"AnimalOil", "Oil", Subdomain::Agricultural, {}},
      {"PlantOil", "Oil", Subdomain::Agricultural, {}},
      {"Nutrient", "Product", Subdomain::Agricultural, {}},
      {"Crop", "PhysicalEntity", Subdomain::Agricultural, {}},
      {"Cereal", "Crop", Subdomain::Agricultural, {}},
      {"Flower", "Crop", Subdomain::Agricultural, {}},
      {"Fruit", "Crop", Subdomain::Agricultural, {}},
      {"Vegetable", "Crop", Subdomain::Agricultural, {}},
      {"Livestock", "PhysicalEntity", Subdomain::Agricultural, {}},
      {"Poultry", "Livestock", Subdomain::Agricultural, {}},
      {"Cattle", "Livestock", Subdomain::Agricultural, {}},
      {"Fishery", "PhysicalEntity", Subdomain::Agricultural, {}},
      {"Process", "VirtualEntity", Subdomain::Agricultural, {"Phase"}},
      {"SoilProcess", "Process", Subdomain::Agricultural, {}},
      // Canonical spellings; the source material's variants are kept as
      // alternate labels.
      {"Planting", "Process", Subdomain::Agricultural, {"Plainting"}},
      {"Spraying", "Process", Subdomain::Agricultural, {}},
      {"Fertilizing", "Process", Subdomain::Agricultural, {"Fertilizering"}},
      {"Harvesting", "Process", Subdomain::Agricultural, {}},
      {"Marketing", "Process", Subdomain::Agricultural, {}},
      {"Transportation", "Process", Subdomain::Agricultural, {}},
      {"Condition", "VirtualEntity", Subdomain::Agricultural, {}},
      {"WeatherCondition", "Condition", Subdomain::Agricultural, {}},
      {"SoilCondition", "Condition", Subdomain::Agricultural, {}},
      {"WaterCondition", "Condition", Subdomain::Agricultural, {}},
      {"Fertilizer", "PhysicalEntity", Subdomain::Agricultural, {}},
      {"Disease", "PhysicalEntity", Subdomain::Agricultural, {}},
      {"PlantDisease", "Disease", Subdomain::Agricultural, {}},
      {"AnimalDisease", "Disease", Subdomain::Agricultural, {}},

      // IoT subdomain
      {"System", "PhysicalEntity", Subdomain::IoT, {"ObserveSystem"}},
      {"Sensor", "PhysicalEntity", Subdomain::IoT, {}},
      {"FeatureOfInterest", "VirtualEntity", Subdomain::IoT, {}},
      {"Observation", "VirtualEntity", Subdomain::IoT, {}},
      {"ObservationValue", "VirtualEntity", Subdomain::IoT, {}},
      {"Property", "VirtualEntity", Subdomain::IoT, {}},

      // Geographical subdomain
      {"SpatialThing", "PhysicalEntity", Subdomain::Geographical, {}},
      {"Point", "SpatialThing", Subdomain::Geographical, {}},
      {"Country", "SpatialThing", Subdomain::Geographical, {}},
      {"Subcountry", "SpatialThing", Subdomain::Geographical, {}},

      // Business subdomain
      {"Organization", "VirtualEntity", Subdomain::Business, {}},
      {"Company", "Organization", Subdomain::Business, {}},
      {"GovernmentOrganization", "Organization", Subdomain::Business, {}},
      {"NonGovernmentOrganization", "Organization", Subdomain::Business, {}},
      {"Person", "PhysicalEntity", Subdomain::Business, {}},
      {"Farmer", "Person", Subdomain::Business, {}},
      {"LandOwner", "Person", Subdomain::Business, {}},
  };
  return table;
}

struct PropSpec {
  const char* name;
  PropertyKind kind;
  const char* domain;   // class local name, nullptr if open
  const char* range;    // class local name (Object) or xsd datatype (Data)
  const char* inverse;  // object properties only
};

const std::vector<PropSpec>& propTable() {
  static const std::vector<PropSpec> table = {
      {"hasLocation", PropertyKind::Object, nullptr, "SpatialThing",
       "isLocationOf"},
      {"isLocationOf", PropertyKind::Object, "SpatialThing", nullptr,
       "hasLocation"},
      {"isProducedAt", PropertyKind::Object, "Product", "Farm", nullptr},
      {"hasCountry", PropertyKind::Object, "SpatialThing", "Country",
       nullptr},
      {"hasSubCountry", PropertyKind::Object, "SpatialThing", "Subcountry",
       nullptr},
      {"hasProduct", PropertyKind::Object, nullptr, "Product", nullptr},
      {"produces", PropertyKind::Object, nullptr, "Product", "isProducedBy"},
      {"isProducedBy", PropertyKind::Object, "Product", nullptr, "produces"},
      {"partOf", PropertyKind::Object, nullptr, nullptr, "hasPart"},
      {"hasPart", PropertyKind::Object, nullptr, nullptr, "partOf"},
      {"precedes", PropertyKind::Object, "Process", "Process", "precededBy"},
      {"precededBy", PropertyKind::Object, "Process", "Process", "precedes"},
      {"participates", PropertyKind::Object, nullptr, nullptr,
       "hasParticipant"},
      {"hasParticipant", PropertyKind::Object, nullptr, nullptr,
       "participates"},
      {"observes", PropertyKind::Object, nullptr, "FeatureOfInterest",
       nullptr},
      {"hasCondition", PropertyKind::Object, "Farm", "Condition", nullptr},
      {"hasObservationValue", PropertyKind::Object, "Observation",
       "ObservationValue", nullptr},
      {"affects", PropertyKind::Object, "Disease", nullptr, nullptr},

      {"longitude", PropertyKind::Data, "SpatialThing", "decimal", nullptr},
      {"latitude", PropertyKind::Data, "SpatialThing", "decimal", nullptr},
      {"address", PropertyKind::Data, "SpatialThing", "string", nullptr},
      {"postcode", PropertyKind::Data, "SpatialThing", "string", nullptr},
      {"population", PropertyKind::Data, "SpatialThing", "decimal", nullptr},
      {"area", PropertyKind::Data, "SpatialThing", "decimal", nullptr},
      {"agriculturalLandArea", PropertyKind::Data, "SpatialThing", "decimal",
       nullptr},
      {"iso3166_1Code", PropertyKind::Data, "Country", "string", nullptr},
      {"iso3166_2Code", PropertyKind::Data, "Subcountry", "string", nullptr},
      {"wikipediaLink", PropertyKind::Data, nullptr, "string", nullptr},
      {"climate", PropertyKind::Data, "SpatialThing", "string", nullptr},
      {"windSpeed", PropertyKind::Data, "WeatherCondition", "decimal",
       nullptr},
      {"temperature", PropertyKind::Data, "WeatherCondition", "decimal",
       nullptr},
      {"humidity", PropertyKind::Data, "WeatherCondition", "decimal",
       nullptr},
      {"causalAgent", PropertyKind::Data, "Disease", "string", nullptr},
  };
  return table;
}

Iri xsdIri(const std::string& local) {
  return Iri(std::string(xsd::ns) + local);
}

}  // namespace

std::vector<ClassDef> coreClasses(const std::string& ns) {
  std::vector<ClassDef> out;
  for (const ClassSpec& spec : classTable()) {
    ClassDef def;
    def.iri = Iri(ns + spec.name);
    def.label = spec.name;
    def.subdomain = spec.subdomain;
    if (spec.parent) def.parents.push_back(Iri(ns + spec.parent));
    if (spec.extraParent) def.parents.push_back(Iri(ns + spec.extraParent));
    for (const char* alt : spec.altLabels) def.altLabels.emplace_back(alt);
    out.push_back(std::move(def));
  }
  return out;
}

std::vector<PropertyDef> coreProperties(const std::string& ns) {
  std::vector<PropertyDef> out;
  for (const PropSpec& spec : propTable()) {
    PropertyDef def;
    def.iri = Iri(ns + spec.name);
    def.kind = spec.kind;
    if (spec.domain) def.domain = Iri(ns + spec.domain);
    if (spec.range) {
      def.range = spec.kind == PropertyKind::Object
                      ? Iri(ns + spec.range)
                      : xsdIri(spec.range);
    }
    if (spec.inverse) def.inverse = Iri(ns + spec.inverse);
    out.push_back(std::move(def));
  }
  return out;
}

Graph buildCoreSchema(const Iri& namespaceIri) {
  const std::string& ns = namespaceIri.value();
  Graph g;
  g.prefixes().bind("agriont", namespaceIri);
  g.prefixes().bind("rdf", Iri(vocab::rdfNs));
  g.prefixes().bind("rdfs", Iri(vocab::rdfsNs));
  g.prefixes().bind("owl", Iri(vocab::owlNs));
  g.prefixes().bind("xsd", Iri(std::string(xsd::ns)));

  for (const ClassDef& c : coreClasses(ns)) {
    g.insert(Triple(Term(c.iri), vocab::rdfType, Term(vocab::owlClass)));
    g.insert(Triple(Term(c.iri), vocab::rdfsLabel, Term(Literal(c.label))));
    for (const std::string& alt : c.altLabels)
      g.insert(Triple(Term(c.iri), vocab::rdfsLabel, Term(Literal(alt))));
    for (const Iri& parent : c.parents)
      g.insert(Triple(Term(c.iri), vocab::rdfsSubClassOf, Term(parent)));
  }
  for (const PropertyDef& p : coreProperties(ns)) {
    g.insert(Triple(Term(p.iri), vocab::rdfType,
                    Term(p.kind == PropertyKind::Object
                             ? vocab::owlObjectProperty
                             : vocab::owlDatatypeProperty)));
    if (p.domain)
      g.insert(Triple(Term(p.iri), vocab::rdfsDomain, Term(*p.domain)));
    if (p.range)
      g.insert(Triple(Term(p.iri), vocab::rdfsRange, Term(*p.range)));
    if (p.inverse)
      g.insert(Triple(Term(p.iri), vocab::owlInverseOf, Term(*p.inverse)));
    for (const Iri& parent : p.parents)
      g.insert(Triple(Term(p.iri), vocab::rdfsSubPropertyOf, Term(parent)));
  }
  return g;
}

OntologyMetrics computeMetrics(const Graph& graph) {
  OntologyMetrics m;
  std::unordered_set<std::string> classes, objectProps, dataProps;
  std::unordered_set<std::string> schemaEntities;

  for (const Triple& t : graph.match({}, vocab::rdfType, {})) {
    if (!t.subject.isIri() || !t.object.isIri()) continue;
    const std::string& s = t.subject.iri().value();
    const Iri& o = t.object.iri();
    if (o == vocab::owlClass) {
      classes.insert(s);
      schemaEntities.insert(s);
    } else if (o == vocab::owlObjectProperty) {
      objectProps.insert(s);
      schemaEntities.insert(s);
    } else if (o == vocab::owlDatatypeProperty) {
      dataProps.insert(s);
      schemaEntities.insert(s);
    }
  }

  std::unordered_set<std::string> individuals;
  std::uint64_t declarations = 0, annotations = 0;
  for (const Triple& t : graph.triples()) {
    ++m.axiomCount;
    bool isDecl = false;
    if (t.predicate == vocab::rdfType && t.object.isIri()) {
      const Iri& o = t.object.iri();
      if (o == vocab::owlClass || o == vocab::owlObjectProperty ||
          o == vocab::owlDatatypeProperty || o == vocab::owlNamedIndividual)
        isDecl = true;
      // Subjects typed by a declared class, and not themselves part of the
      // schema vocabulary, are counted as individuals.
      if (t.subject.isIri() && classes.count(o.value()) &&
          !schemaEntities.count(t.subject.iri().value()))
        individuals.insert(t.subject.iri().value());
    }
    if (isDecl) {
      ++declarations;
      continue;
    }
    const std::string& p = t.predicate.value();
    if (t.predicate == vocab::rdfsLabel ||
        t.predicate == vocab::rdfsComment ||
        (p.size() > 13 &&
         p.compare(p.size() - 13, 13, "wikipediaLink") == 0)) {
      ++annotations;
    }
  }

  m.declarationAxiomCount = declarations;
  m.logicalAxiomCount = m.axiomCount - declarations - annotations;
  m.classCount = classes.size();
  m.objectPropertyCount = objectProps.size();
  m.dataPropertyCount = dataProps.size();
  m.individualCount = individuals.size();
  return m;
}

}  // namespace agriont
