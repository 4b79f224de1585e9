#include <doctest.h>

#include <set>
#include <sstream>

#include "agriont/ingest.hpp"
#include "agriont/schema.hpp"
#include "agriont/vocab.hpp"

using namespace agriont;

namespace {

const std::string& ns = vocab::defaultNs;
Iri a(const std::string& name) { return Iri(ns + name); }

const char* kCountriesHeader =
    "name,iso_3166_1,longitude,latitude,population,area_km2,agri_land_km2,"
    "climate,wikipedia\n";
const char* kSubdivisionsHeader =
    "name,iso_3166_2,country_code,longitude,latitude,population,area_km2,"
    "wikipedia\n";

IngestReport runGeo(Graph& g, const std::string& countries,
                    const std::string& subdivisions) {
  std::istringstream c(countries), s(subdivisions);
  return ingestGeo(g, c, s);
}

}  // namespace

TEST_CASE("slugify") {
  CHECK(slugify("Ireland") == "ireland");
  CHECK(slugify("Bosnia & Herzegovina") == "bosnia_herzegovina");
  CHECK(slugify("  Côte d'Ivoire  ") == "c_te_d_ivoire");
  CHECK(slugify("A--B") == "a_b");
  CHECK(slugify("!!!") == "");
}

TEST_CASE("empty geo CSVs leave the graph untouched") {
  Graph g = buildCoreSchema();
  std::size_t before = g.size();
  IngestReport r = runGeo(g, kCountriesHeader, kSubdivisionsHeader);
  CHECK(r.recordsRead == 0);
  CHECK(r.individualsCreated == 0);
  CHECK(r.triplesAdded == 0);
  CHECK(r.recordsRejected == 0);
  CHECK(g.size() == before);
}

TEST_CASE("small geo ingest creates the expected individuals") {
  Graph g = buildCoreSchema();
  std::size_t before = g.size();
  std::string countries = std::string(kCountriesHeader) +
      "Ireland,IE,-8.0,53.0,5033000,70273,44500,temperate,"
      "https://en.wikipedia.org/wiki/Ireland\n"
      "France,FR,2.2,46.2,67750000,643801,286500,temperate,\n"
      "Vietnam,VN,108.3,14.1,97470000,331212,122000,tropical,\n";
  std::string subdivisions = std::string(kSubdivisionsHeader) +
      "Dublin,IE-D,IE,-6.3,53.4,1458000,922,\n"
      "Paris,FR-75,FR,2.35,48.85,2161000,105,\n";
  IngestReport r = runGeo(g, countries, subdivisions);
  CHECK(r.recordsRead == 5);
  CHECK(r.individualsCreated == 5);
  CHECK(r.recordsRejected == 0);
  CHECK(r.triplesAdded == g.size() - before);

  for (const char* iri : {"country_IE", "country_FR", "country_VN",
                          "subcountry_IE-D", "subcountry_FR-75"})
    CHECK(g.contains(Triple(Term(a(iri)), vocab::rdfType,
                            Term(vocab::owlNamedIndividual))));

  // Exactly one hasCountry per subdivision, pointing at a Country.
  for (const char* sub : {"subcountry_IE-D", "subcountry_FR-75"}) {
    auto links = g.match(Term(a(sub)), a("hasCountry"), {});
    REQUIRE(links.size() == 1);
    CHECK(g.contains(Triple(links[0].object, vocab::rdfType,
                            Term(a("Country")))));
  }
  CHECK(g.contains(
      Triple(Term(a("country_IE")), a("iso3166_1Code"), Term(Literal("IE")))));
  CHECK(g.contains(Triple(Term(a("subcountry_IE-D")), a("hasCountry"),
                          Term(a("country_IE")))));
}

TEST_CASE("invalid geo rows are rejected with line numbers") {
  Graph g = buildCoreSchema();
  std::size_t before = g.size();
  std::string countries = std::string(kCountriesHeader) +
      "Ireland,IE,,,,,,,\n"          // line 2: ok
      "Badland,XYZ,,,,,,,\n"         // line 3: bad ISO code
      "Polarland,PL,0,95.0,,,,,\n"   // line 4: latitude out of range
      ",ZZ,,,,,,,\n";                // line 5: empty name
  std::string subdivisions = std::string(kSubdivisionsHeader) +
      "Dublin,IE-D,IE,,,,,\n"        // line 2: ok
      "Ghost,QQ-1,QQ,,,,,\n"         // line 3: unknown parent
      "Mismatch,FR-75,IE,,,,,\n";    // line 4: code/parent mismatch
  IngestReport r = runGeo(g, countries, subdivisions);
  CHECK(r.recordsRead == 7);
  CHECK(r.individualsCreated == 2);
  CHECK(r.recordsRejected == 5);
  REQUIRE(r.rejections.size() == 5);
  CHECK(r.rejections[0].first == 3);
  CHECK(r.rejections[1].first == 4);
  CHECK(r.rejections[2].first == 5);
  CHECK(r.triplesAdded == g.size() - before);
  // Rejected rows must not leave partial triples behind.
  CHECK(g.match(Term(a("country_PL")), {}, {}).empty());
}

TEST_CASE("subdivisions without a code get name-based IRIs") {
  Graph g = buildCoreSchema();
  std::string countries =
      std::string(kCountriesHeader) + "Ireland,IE,,,,,,,\n";
  std::string subdivisions = std::string(kSubdivisionsHeader) +
      "West Region,,IE,,,,,\n";
  IngestReport r = runGeo(g, countries, subdivisions);
  CHECK(r.individualsCreated == 2);
  CHECK(g.contains(Triple(Term(a("subcountry_IE_west_region")),
                          vocab::rdfType, Term(a("Subcountry")))));
}

TEST_CASE("geo ingest is idempotent") {
  std::string countries =
      std::string(kCountriesHeader) + "Ireland,IE,-8.0,53.0,,,,temperate,\n";
  std::string subdivisions =
      std::string(kSubdivisionsHeader) + "Dublin,IE-D,IE,,,,,\n";
  Graph g = buildCoreSchema();
  IngestReport first = runGeo(g, countries, subdivisions);
  CHECK(first.triplesAdded > 0);
  std::size_t size = g.size();
  IngestReport second = runGeo(g, countries, subdivisions);
  CHECK(second.triplesAdded == 0);
  CHECK(second.recordsRejected == 0);
  CHECK(g.size() == size);
}

TEST_CASE("geo IRIs do not depend on row order") {
  std::string a1 = std::string(kCountriesHeader) +
                   "Ireland,IE,,,,,,,\nFrance,FR,,,,,,,\n";
  std::string a2 = std::string(kCountriesHeader) +
                   "France,FR,,,,,,,\nIreland,IE,,,,,,,\n";
  Graph g1 = buildCoreSchema(), g2 = buildCoreSchema();
  runGeo(g1, a1, kSubdivisionsHeader);
  runGeo(g2, a2, kSubdivisionsHeader);
  auto t1 = g1.triples();
  auto t2 = g2.triples();
  CHECK(std::set<Triple>(t1.begin(), t1.end()) ==
        std::set<Triple>(t2.begin(), t2.end()));
}

TEST_CASE("empty disease CSV gives a zero report") {
  Graph g = buildCoreSchema();
  std::istringstream in("name,kind,affected,causal_agent\n");
  IngestReport r = ingestDiseases(g, in);
  CHECK(r.recordsRead == 0);
  CHECK(r.triplesAdded == 0);
}

TEST_CASE("single disease row resolves an affected class") {
  Graph g = buildCoreSchema();
  std::istringstream in(
      "name,kind,affected,causal_agent\n"
      "wheat leaf rust,Plant,Cereal,Puccinia triticina\n");
  IngestReport r = ingestDiseases(g, in);
  CHECK(r.individualsCreated == 1);
  Iri d = a("disease_wheat_leaf_rust");
  CHECK(g.contains(Triple(Term(d), vocab::rdfType, Term(a("PlantDisease")))));
  CHECK(g.contains(Triple(Term(d), a("affects"), Term(a("Cereal")))));
  CHECK(g.contains(Triple(Term(d), a("causalAgent"),
                          Term(Literal("Puccinia triticina")))));
}

TEST_CASE("unresolved taxa are kept as annotations") {
  Graph g = buildCoreSchema();
  std::istringstream in(
      "name,kind,affected,causal_agent\n"
      "mystery blight,Plant,Cereal;unknown weed,\n");
  ingestDiseases(g, in);
  Iri d = a("disease_mystery_blight");
  CHECK(g.contains(Triple(Term(d), a("affects"), Term(a("Cereal")))));
  CHECK(g.contains(
      Triple(Term(d), a("affectsLabel"), Term(Literal("unknown weed")))));
}

TEST_CASE("duplicate disease rows merge onto one IRI") {
  Graph g = buildCoreSchema();
  std::istringstream in(
      "name,kind,affected,causal_agent\n"
      "foot rot,Animal,Cattle,\n"
      "foot rot,Animal,Cattle;Poultry,\n");
  std::size_t before = g.size();
  IngestReport r = ingestDiseases(g, in);
  CHECK(r.recordsRead == 2);
  CHECK(r.individualsCreated == 2);
  CHECK(r.triplesAdded == g.size() - before);
  auto types = g.match(Term(a("disease_foot_rot")), vocab::rdfType, {});
  // One NamedIndividual + one AnimalDisease triple, not doubled.
  CHECK(types.size() == 2);
  CHECK(g.contains(Triple(Term(a("disease_foot_rot")), a("affects"),
                          Term(a("Poultry")))));
}

TEST_CASE("disease rows with empty name or bad kind are rejected") {
  Graph g = buildCoreSchema();
  std::istringstream in(
      "name,kind,affected,causal_agent\n"
      ",Plant,Cereal,\n"
      "odd thing,Mineral,,\n");
  IngestReport r = ingestDiseases(g, in);
  CHECK(r.recordsRejected == 2);
  REQUIRE(r.rejections.size() == 2);
  CHECK(r.rejections[0].first == 2);
  CHECK(r.rejections[1].first == 3);
}
