#include "agriont/example.hpp"

#include "agriont/schema.hpp"

namespace agriont {

Graph buildExampleDataset(const Iri& namespaceIri) {
  const std::string& ns = namespaceIri.value();
  Graph g = buildCoreSchema(namespaceIri);

  auto iri = [&](const char* local) { return Iri(ns + local); };
  auto individual = [&](const char* local, const char* cls,
                        const char* label) {
    Iri subject = iri(local);
    g.insert(Triple(Term(subject), vocab::rdfType,
                    Term(vocab::owlNamedIndividual)));
    g.insert(Triple(Term(subject), vocab::rdfType, Term(iri(cls))));
    g.insert(Triple(Term(subject), vocab::rdfsLabel, Term(Literal(label))));
    return subject;
  };
  auto link = [&](const Iri& s, const char* prop, const Iri& o) {
    g.insert(Triple(Term(s), iri(prop), Term(o)));
  };
  auto data = [&](const Iri& s, const char* prop, Literal value) {
    g.insert(Triple(Term(s), iri(prop), Term(std::move(value))));
  };

  Iri field = individual("field_0365", "Farm", "Field 01");
  Iri weather = individual("weather_1150", "WeatherCondition",
                           "Weather of Field 01");
  Iri soil = individual("soil_721", "SoilCondition", "Soil of Field 01");
  Iri country = individual("country_IE", "Country", "Ireland");
  Iri subcountry = individual("subcountry_IE-D", "Subcountry", "Dublin");
  Iri farmer = individual("farmer_0017", "Farmer", "John Murphy");
  Iri crop = individual("crop_0042", "Cereal", "Winter wheat");
  Iri product = individual("product_0871", "Food", "Wheat flour batch 0871");

  link(field, "hasCondition", weather);
  link(field, "hasCondition", soil);
  link(field, "hasCountry", country);
  link(field, "hasSubCountry", subcountry);
  data(field, "longitude", Literal::decimal("-6.4312"));
  data(field, "latitude", Literal::decimal("53.3127"));
  data(field, "address", Literal("Lucan, Co. Dublin"));

  data(weather, "temperature", Literal::decimal("18.5"));
  data(weather, "humidity", Literal::decimal("72.0"));
  data(weather, "windSpeed", Literal::decimal("4.2"));

  data(country, "iso3166_1Code", Literal("IE"));
  link(subcountry, "hasCountry", country);
  data(subcountry, "iso3166_2Code", Literal("IE-D"));

  link(farmer, "hasProduct", product);
  link(farmer, "produces", product);
  link(crop, "partOf", field);
  link(product, "isProducedAt", field);
  link(product, "isProducedBy", farmer);

  return g;
}

}  // namespace agriont
