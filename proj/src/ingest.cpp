#include "agriont/ingest.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <unordered_map>

#include "agriont/csv.hpp"

namespace agriont {

namespace {

bool isUpperAlpha(char c) { return c >= 'A' && c <= 'Z'; }
bool isUpperAlnum(char c) { return isUpperAlpha(c) || (c >= '0' && c <= '9'); }

bool validCountryCode(const std::string& s) {
  return s.size() == 2 && isUpperAlpha(s[0]) && isUpperAlpha(s[1]);
}

bool validSubdivisionCode(const std::string& s) {
  if (s.size() < 4 || s.size() > 6) return false;
  if (!isUpperAlpha(s[0]) || !isUpperAlpha(s[1]) || s[2] != '-') return false;
  for (std::size_t i = 3; i < s.size(); ++i)
    if (!isUpperAlnum(s[i])) return false;
  return true;
}

std::optional<double> parseNumber(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') return std::nullopt;
  return v;
}

struct Minter {
  Graph& graph;
  std::size_t added = 0;

  bool add(Triple t) {
    bool fresh = graph.insert(std::move(t));
    if (fresh) ++added;
    return fresh;
  }
};

void addDecimal(Minter& m, const Iri& subject, const Iri& prop,
                const std::string& lexical) {
  m.add(Triple(Term(subject), prop, Term(Literal(lexical,
                                                 Iri(xsd::decimal_)))));
}

}  // namespace

std::string slugify(const std::string& name) {
  std::string out;
  bool lastUnderscore = false;
  for (unsigned char c : name) {
    if (std::isalnum(c)) {
      out += static_cast<char>(std::tolower(c));
      lastUnderscore = false;
    } else if (!lastUnderscore && !out.empty()) {
      out += '_';
      lastUnderscore = true;
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

IngestReport ingestGeo(Graph& graph, std::istream& countriesCsv,
                       std::istream& subdivisionsCsv, const std::string& ns) {
  IngestReport report;
  Minter minter{graph};
  const Iri countryClass(ns + "Country");
  const Iri subcountryClass(ns + "Subcountry");
  const Iri isoCountryProp(ns + "iso3166_1Code");
  const Iri isoSubProp(ns + "iso3166_2Code");
  const Iri hasCountryProp(ns + "hasCountry");
  const Iri wikipediaProp(ns + "wikipediaLink");
  const Iri climateProp(ns + "climate");

  std::unordered_map<std::string, Iri> countryByCode;
  // Countries already in the graph count as known parents on re-ingest.
  for (const Triple& t : graph.match({}, isoCountryProp, {}))
    if (t.subject.isIri() && t.object.isLiteral())
      countryByCode.emplace(t.object.literal().lexical(), t.subject.iri());

  auto reject = [&](std::size_t line, const std::string& reason) {
    ++report.recordsRejected;
    report.rejections.emplace_back(line, reason);
  };

  auto coordOk = [](double v, double lo, double hi) {
    return v >= lo && v <= hi;
  };

  // Shared columns of both geo files.
  auto applyCommon = [&](CsvReader& csv, const CsvRow& row, const Iri& iri,
                         bool withAgri) -> std::optional<std::string> {
    std::string lon = csv.field(row, "longitude");
    std::string lat = csv.field(row, "latitude");
    if (!lon.empty()) {
      auto v = parseNumber(lon);
      if (!v) return "malformed longitude '" + lon + "'";
      if (!coordOk(*v, -180, 180)) return "longitude out of range: " + lon;
    }
    if (!lat.empty()) {
      auto v = parseNumber(lat);
      if (!v) return "malformed latitude '" + lat + "'";
      if (!coordOk(*v, -90, 90)) return "latitude out of range: " + lat;
    }
    for (const char* col : {"population", "area_km2", "agri_land_km2"}) {
      if (!withAgri && std::string(col) == "agri_land_km2") continue;
      std::string v = csv.field(row, col);
      if (!v.empty() && !parseNumber(v))
        return std::string("malformed ") + col + " '" + v + "'";
      if (!v.empty()) {
        if (*parseNumber(v) < 0)
          return std::string(col) + " is negative: " + v;
      }
    }
    // All validations passed; emit the optional data properties.
    if (!lon.empty()) addDecimal(minter, iri, Iri(ns + "longitude"), lon);
    if (!lat.empty()) addDecimal(minter, iri, Iri(ns + "latitude"), lat);
    if (std::string v = csv.field(row, "population"); !v.empty())
      addDecimal(minter, iri, Iri(ns + "population"), v);
    if (std::string v = csv.field(row, "area_km2"); !v.empty())
      addDecimal(minter, iri, Iri(ns + "area"), v);
    if (withAgri) {
      if (std::string v = csv.field(row, "agri_land_km2"); !v.empty())
        addDecimal(minter, iri, Iri(ns + "agriculturalLandArea"), v);
    }
    if (std::string v = csv.field(row, "wikipedia"); !v.empty())
      minter.add(Triple(Term(iri), wikipediaProp, Term(Literal(v))));
    return std::nullopt;
  };

  {
    CsvReader csv(countriesCsv);
    CsvRow row;
    while (csv.next(row)) {
      ++report.recordsRead;
      std::string name = csv.field(row, "name");
      std::string iso = csv.field(row, "iso_3166_1");
      if (name.empty()) {
        reject(row.line, "empty country name");
        continue;
      }
      if (!iso.empty() && !validCountryCode(iso)) {
        reject(row.line, "invalid ISO 3166-1 code '" + iso + "'");
        continue;
      }
      Iri iri(ns + "country_" + (iso.empty() ? slugify(name) : iso));
      // applyCommon validates every optional column before it writes, so a
      // rejected row leaves the graph untouched.
      if (auto reason = applyCommon(csv, row, iri, true)) {
        reject(row.line, *reason);
        continue;
      }
      minter.add(Triple(Term(iri), vocab::rdfType,
                        Term(vocab::owlNamedIndividual)));
      minter.add(Triple(Term(iri), vocab::rdfType, Term(countryClass)));
      minter.add(Triple(Term(iri), vocab::rdfsLabel, Term(Literal(name))));
      if (!iso.empty()) {
        minter.add(Triple(Term(iri), isoCountryProp, Term(Literal(iso))));
        countryByCode.emplace(iso, iri);
      }
      if (std::string v = csv.field(row, "climate"); !v.empty())
        minter.add(Triple(Term(iri), climateProp, Term(Literal(v))));
      ++report.individualsCreated;
    }
  }

  {
    CsvReader csv(subdivisionsCsv);
    CsvRow row;
    while (csv.next(row)) {
      ++report.recordsRead;
      std::string name = csv.field(row, "name");
      std::string code = csv.field(row, "iso_3166_2");
      std::string parent = csv.field(row, "country_code");
      if (name.empty()) {
        reject(row.line, "empty subdivision name");
        continue;
      }
      if (parent.empty() || !validCountryCode(parent)) {
        reject(row.line, "missing or invalid country_code '" + parent + "'");
        continue;
      }
      auto parentIt = countryByCode.find(parent);
      if (parentIt == countryByCode.end()) {
        reject(row.line, "unknown parent country '" + parent + "'");
        continue;
      }
      if (!code.empty()) {
        if (!validSubdivisionCode(code)) {
          reject(row.line, "invalid ISO 3166-2 code '" + code + "'");
          continue;
        }
        if (code.compare(0, 2, parent) != 0) {
          reject(row.line, "code '" + code + "' does not match country '" +
                               parent + "'");
          continue;
        }
      }
      Iri iri(ns + "subcountry_" +
              (code.empty() ? parent + "_" + slugify(name) : code));
      if (auto reason = applyCommon(csv, row, iri, false)) {
        reject(row.line, *reason);
        continue;
      }
      minter.add(Triple(Term(iri), vocab::rdfType,
                        Term(vocab::owlNamedIndividual)));
      minter.add(Triple(Term(iri), vocab::rdfType, Term(subcountryClass)));
      minter.add(Triple(Term(iri), vocab::rdfsLabel, Term(Literal(name))));
      if (!code.empty())
        minter.add(Triple(Term(iri), isoSubProp, Term(Literal(code))));
      minter.add(Triple(Term(iri), hasCountryProp, Term(parentIt->second)));
      ++report.individualsCreated;
    }
  }

  report.triplesAdded = minter.added;
  return report;
}

IngestReport ingestDiseases(Graph& graph, std::istream& csvIn,
                            const std::string& ns) {
  IngestReport report;
  Minter minter{graph};
  const Iri plantClass(ns + "PlantDisease");
  const Iri animalClass(ns + "AnimalDisease");
  const Iri affectsProp(ns + "affects");
  const Iri affectsLabelProp(ns + "affectsLabel");
  const Iri causalAgentProp(ns + "causalAgent");

  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.pop_back();
    return s;
  };

  CsvReader csv(csvIn);
  CsvRow row;
  while (csv.next(row)) {
    ++report.recordsRead;
    std::string name = trim(csv.field(row, "name"));
    std::string kind = trim(csv.field(row, "kind"));
    if (name.empty()) {
      ++report.recordsRejected;
      report.rejections.emplace_back(row.line, "empty disease name");
      continue;
    }
    bool plant;
    if (kind == "Plant" || kind == "plant") {
      plant = true;
    } else if (kind == "Animal" || kind == "animal") {
      plant = false;
    } else {
      ++report.recordsRejected;
      report.rejections.emplace_back(row.line,
                                     "unknown disease kind '" + kind + "'");
      continue;
    }

    Iri iri(ns + "disease_" + slugify(name));
    minter.add(Triple(Term(iri), vocab::rdfType,
                      Term(vocab::owlNamedIndividual)));
    minter.add(Triple(Term(iri), vocab::rdfType,
                      Term(plant ? plantClass : animalClass)));
    minter.add(Triple(Term(iri), vocab::rdfsLabel, Term(Literal(name))));

    std::string affected = csv.field(row, "affected");
    std::size_t start = 0;
    while (start <= affected.size() && !affected.empty()) {
      std::size_t end = affected.find(';', start);
      std::string taxon = trim(affected.substr(
          start, end == std::string::npos ? std::string::npos : end - start));
      if (!taxon.empty()) {
        // Taxa with characters an IRI cannot hold are never class names.
        bool iriSafe = taxon.find_first_of(" <>\"\t\n\r") == std::string::npos;
        Iri individualCandidate(ns + slugify(taxon));
        if (iriSafe &&
            graph.contains(Triple(Term(Iri(ns + taxon)), vocab::rdfType,
                                  Term(vocab::owlClass)))) {
          minter.add(Triple(Term(iri), affectsProp, Term(Iri(ns + taxon))));
        } else if (!graph.match(Term(individualCandidate), {}, {}).empty()) {
          minter.add(
              Triple(Term(iri), affectsProp, Term(individualCandidate)));
        } else {
          // Unresolved taxon: keep it as an annotation rather than dropping.
          minter.add(
              Triple(Term(iri), affectsLabelProp, Term(Literal(taxon))));
        }
      }
      if (end == std::string::npos) break;
      start = end + 1;
    }

    if (std::string agent = trim(csv.field(row, "causal_agent"));
        !agent.empty())
      minter.add(Triple(Term(iri), causalAgentProp, Term(Literal(agent))));

    ++report.individualsCreated;
  }
  report.triplesAdded = minter.added;
  return report;
}

}  // namespace agriont
