#ifndef AGRIONT_INGEST_HPP
#define AGRIONT_INGEST_HPP

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agriont/graph.hpp"
#include "agriont/vocab.hpp"

namespace agriont {

enum class GeoLevel { Country, Subcountry };

struct GeoRecord {
  std::string name;
  GeoLevel level = GeoLevel::Country;
  std::optional<std::string> isoCode;
  std::optional<std::string> parentCountryCode;
  std::optional<double> longitude;
  std::optional<double> latitude;
  std::optional<std::string> population;
  std::optional<std::string> area;
  std::optional<std::string> agriculturalLandArea;
  std::optional<std::string> climate;
  std::optional<std::string> wikipediaLink;
};

enum class DiseaseKind { Plant, Animal };

struct DiseaseRecord {
  std::string name;
  DiseaseKind kind = DiseaseKind::Plant;
  std::vector<std::string> affectedTaxa;
  std::optional<std::string> causalAgent;
};

struct IngestReport {
  std::size_t recordsRead = 0;
  std::size_t individualsCreated = 0;
  std::size_t triplesAdded = 0;
  std::size_t recordsRejected = 0;
  std::vector<std::pair<std::size_t, std::string>> rejections;
};

/// Lowercase, non-alphanumerics collapsed to single '_'.
std::string slugify(const std::string& name);

/// Countries first, then subdivisions (a subdivision row whose parent
/// country code is unknown is rejected). Individual IRIs are minted from
/// ISO codes, falling back to slugified names.
IngestReport ingestGeo(Graph& graph, std::istream& countriesCsv,
                       std::istream& subdivisionsCsv,
                       const std::string& ns = vocab::defaultNs);

IngestReport ingestDiseases(Graph& graph, std::istream& csv,
                            const std::string& ns = vocab::defaultNs);

}  // namespace agriont

#endif
