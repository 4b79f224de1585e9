#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "agriont/csv.hpp"
#include "agriont/example.hpp"
#include "agriont/inference.hpp"
#include "agriont/ingest.hpp"
#include "agriont/query.hpp"
#include "agriont/schema.hpp"
#include "agriont/turtle.hpp"
#include "agriont/vocab.hpp"
#include "agriont/warehouse.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace agriont;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string baseIri = vocab::defaultNs;
  bool quiet = false;
  std::string format = "table";
};

std::ofstream openOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  return out;
}

void writeMetricsTable(std::ostream& os, const OntologyMetrics& m) {
  auto row = [&](const char* name, std::uint64_t v) {
    os << std::left << std::setw(24) << name << std::right << std::setw(10)
       << v << "\n";
  };
  row("Axiom", m.axiomCount);
  row("Logical axiom count", m.logicalAxiomCount);
  row("Declaration axioms", m.declarationAxiomCount);
  row("Class count", m.classCount);
  row("Object property count", m.objectPropertyCount);
  row("Data property count", m.dataPropertyCount);
  row("Individual count", m.individualCount);
}

json metricsJson(const OntologyMetrics& m) {
  return json{{"axiomCount", m.axiomCount},
              {"logicalAxiomCount", m.logicalAxiomCount},
              {"declarationAxioms", m.declarationAxiomCount},
              {"classCount", m.classCount},
              {"objectPropertyCount", m.objectPropertyCount},
              {"dataPropertyCount", m.dataPropertyCount},
              {"individualCount", m.individualCount}};
}

void printIngestReport(const Options& opt, const IngestReport& r) {
  if (opt.quiet) return;
  std::cout << "records read:        " << r.recordsRead << "\n"
            << "individuals created: " << r.individualsCreated << "\n"
            << "triples added:       " << r.triplesAdded << "\n"
            << "records rejected:    " << r.recordsRejected << "\n";
  for (const auto& [line, reason] : r.rejections)
    std::cerr << "  line " << line << ": " << reason << "\n";
}

json termJson(const Term& t) {
  switch (t.kind()) {
    case TermKind::Iri:
      return json{{"type", "iri"}, {"value", t.iri().value()}};
    case TermKind::BlankNode:
      return json{{"type", "bnode"}, {"value", t.blank().label}};
    case TermKind::Literal: {
      json j{{"type", "literal"}, {"value", t.literal().lexical()},
             {"datatype", t.literal().datatype().value()}};
      if (t.literal().language()) j["language"] = *t.literal().language();
      return j;
    }
  }
  return json{};
}

std::string termDisplay(const Term& t, const PrefixMap& pm) {
  switch (t.kind()) {
    case TermKind::Iri: return pm.compact(t.iri());
    case TermKind::BlankNode: return "_:" + t.blank().label;
    case TermKind::Literal: return t.literal().lexical();
  }
  return "";
}

void printSolutions(const Options& opt, const SolutionSet& solutions,
                    const PrefixMap& pm) {
  if (opt.format == "json") {
    json j;
    j["vars"] = solutions.vars;
    j["rows"] = json::array();
    for (const Binding& row : solutions.rows) {
      json r;
      for (const auto& [var, term] : row) r[var] = termJson(term);
      j["rows"].push_back(std::move(r));
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (opt.format == "csv") {
    for (std::size_t i = 0; i < solutions.vars.size(); ++i)
      std::cout << (i ? "," : "") << solutions.vars[i];
    std::cout << "\n";
    for (const Binding& row : solutions.rows) {
      for (std::size_t i = 0; i < solutions.vars.size(); ++i)
        std::cout << (i ? "," : "")
                  << csvEscape(termDisplay(row.at(solutions.vars[i]), pm));
      std::cout << "\n";
    }
    return;
  }
  // table
  std::vector<std::size_t> widths;
  for (const std::string& v : solutions.vars) widths.push_back(v.size() + 1);
  std::vector<std::vector<std::string>> cells;
  for (const Binding& row : solutions.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < solutions.vars.size(); ++i) {
      line.push_back(termDisplay(row.at(solutions.vars[i]), pm));
      widths[i] = std::max(widths[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  for (std::size_t i = 0; i < solutions.vars.size(); ++i)
    std::cout << std::left << std::setw(static_cast<int>(widths[i]) + 2)
              << ("?" + solutions.vars[i]);
  std::cout << "\n";
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i)
      std::cout << std::left << std::setw(static_cast<int>(widths[i]) + 2)
                << line[i];
    std::cout << "\n";
  }
}

std::vector<Iri> resolveRoots(const std::string& csv, const Graph& graph,
                              const std::string& ns) {
  std::vector<Iri> roots;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.front() == '<' && item.back() == '>')
      roots.emplace_back(item.substr(1, item.size() - 2));
    else if (item.find(':') != std::string::npos &&
             item.find("://") == std::string::npos)
      roots.push_back(graph.prefixes().expand(item));
    else if (item.find("://") != std::string::npos)
      roots.emplace_back(item);
    else
      roots.emplace_back(ns + item);
  }
  return roots;
}

int runCli(int argc, char** argv) {
  CLI::App app{"AgriOnt knowledge-graph toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Options opt;
  app.add_option("--base-iri", opt.baseIri, "Ontology namespace IRI");
  app.add_flag("--quiet", opt.quiet, "Suppress progress output");
  app.add_option("--format", opt.format, "Output format: table|json|csv");

  // schema
  auto* schemaCmd = app.add_subcommand("schema", "Emit the core ontology");
  std::string schemaOut;
  schemaCmd->add_option("--out", schemaOut, "Output .ttl path");

  // stats
  auto* statsCmd =
      app.add_subcommand("stats", "Print ontology metrics for a graph");
  std::string statsFile;
  statsCmd->add_option("file", statsFile, "Input .ttl")->required();

  // infer
  auto* inferCmd = app.add_subcommand("infer", "Materialize inferences");
  std::string inferIn, inferOut, inferRules;
  bool noInferred = false;
  inferCmd->add_option("input", inferIn, "Input .ttl")->required();
  inferCmd->add_option("--out", inferOut, "Output .ttl")->required();
  inferCmd->add_option("--rules", inferRules,
                       "Comma-separated rule names (default: all)");
  inferCmd->add_flag("--no-inferred", noInferred,
                     "Serialize without inferred triples");

  // ingest
  auto* ingestCmd = app.add_subcommand("ingest", "Load CSV datasets");
  ingestCmd->require_subcommand(1);
  auto* geoCmd = ingestCmd->add_subcommand("geo", "ISO 3166 geography");
  std::string geoCountries, geoSubdivisions, geoGraph;
  geoCmd->add_option("--countries", geoCountries, "countries.csv")
      ->required();
  geoCmd->add_option("--subdivisions", geoSubdivisions, "subdivisions.csv")
      ->required();
  geoCmd->add_option("graph", geoGraph, "Graph .ttl updated in place")
      ->required();
  auto* diseaseCmd = ingestCmd->add_subcommand("diseases", "Disease list");
  std::string diseaseCsv, diseaseGraph;
  diseaseCmd->add_option("csv", diseaseCsv, "diseases.csv")->required();
  diseaseCmd->add_option("graph", diseaseGraph, "Graph .ttl updated in place")
      ->required();

  // query
  auto* queryCmd = app.add_subcommand("query", "Evaluate a graph pattern");
  std::string queryFile, queryText;
  bool queryInfer = false;
  queryCmd->add_option("graph", queryFile, "Input .ttl")->required();
  queryCmd->add_option("--query", queryText, "Query file or inline string")
      ->required();
  queryCmd->add_flag("--infer", queryInfer,
                     "Materialize before evaluating");

  // gen-ddl
  auto* ddlCmd =
      app.add_subcommand("gen-ddl", "Generate warehouse DDL from a graph");
  std::string ddlFile, ddlRoots, ddlOut;
  ddlCmd->add_option("graph", ddlFile, "Input .ttl")->required();
  ddlCmd->add_option("--roots", ddlRoots, "Comma-separated root classes");
  ddlCmd->add_option("--out", ddlOut, "Output .sql")->required();

  // export-rows
  auto* exportCmd = app.add_subcommand(
      "export-rows", "Export one CSV per warehouse table");
  std::string exportFile, exportRootsCsv, exportDir;
  exportCmd->add_option("graph", exportFile, "Input .ttl")->required();
  exportCmd->add_option("--schema-roots", exportRootsCsv,
                        "Comma-separated root classes");
  exportCmd->add_option("--out-dir", exportDir, "Output directory")
      ->required();

  // example
  auto* exampleCmd =
      app.add_subcommand("example", "Write the bundled example dataset");
  std::string exampleOut;
  exampleCmd->add_option("--out", exampleOut, "Output .ttl")->required();

  // Globals like --format may follow the subcommand on the command line.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) {
         return true;
       })) {
    sub->fallthrough();
    for (CLI::App* nested :
         sub->get_subcommands([](const CLI::App*) { return true; }))
      nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const Iri ns(opt.baseIri);

  if (*schemaCmd) {
    Graph g = buildCoreSchema(ns);
    if (schemaOut.empty())
      std::cout << serializeTurtle(g);
    else
      saveTurtleFile(g, schemaOut);
    return 0;
  }

  if (*statsCmd) {
    Graph g = loadTurtleFile(statsFile);
    OntologyMetrics m = computeMetrics(g);
    if (opt.format == "json") {
      std::cout << metricsJson(m).dump(2) << "\n";
    } else {
      writeMetricsTable(std::cout, m);
      if (!opt.quiet) std::cout << "\n" << metricsJson(m).dump(2) << "\n";
    }
    return 0;
  }

  if (*inferCmd) {
    Graph g = loadTurtleFile(inferIn);
    RuleSet rules =
        inferRules.empty() ? RuleSet::all() : RuleSet::fromNames(inferRules);
    Graph out = materialize(g, rules);
    saveTurtleFile(out, inferOut, !noInferred);
    if (!opt.quiet)
      std::cout << "materialized " << (out.size() - g.size())
                << " new triples\n";
    return 0;
  }

  if (*geoCmd) {
    Graph g = loadTurtleFile(geoGraph);
    std::ifstream countries(geoCountries);
    if (!countries) throw IoError("cannot open file: " + geoCountries);
    std::ifstream subdivisions(geoSubdivisions);
    if (!subdivisions) throw IoError("cannot open file: " + geoSubdivisions);
    IngestReport report =
        ingestGeo(g, countries, subdivisions, ns.value());
    saveTurtleFile(g, geoGraph);
    printIngestReport(opt, report);
    return 0;
  }

  if (*diseaseCmd) {
    Graph g = loadTurtleFile(diseaseGraph);
    std::ifstream csv(diseaseCsv);
    if (!csv) throw IoError("cannot open file: " + diseaseCsv);
    IngestReport report = ingestDiseases(g, csv, ns.value());
    saveTurtleFile(g, diseaseGraph);
    printIngestReport(opt, report);
    return 0;
  }

  if (*queryCmd) {
    Graph g = loadTurtleFile(queryFile);
    if (queryInfer) g = materialize(g);
    std::string text = queryText;
    if (fs::exists(queryText) && fs::is_regular_file(queryText)) {
      std::ifstream in(queryText);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    Query q = parseQuery(text, g.prefixes());
    q.inferenceAware = queryInfer;
    SolutionSet solutions = evaluate(g, q);
    printSolutions(opt, solutions, g.prefixes());
    return 0;
  }

  if (*ddlCmd) {
    Graph g = materialize(loadTurtleFile(ddlFile));
    std::vector<Iri> roots = ddlRoots.empty()
                                 ? defaultWarehouseRoots(ns.value())
                                 : resolveRoots(ddlRoots, g, ns.value());
    WarehouseSchema schema = generateWarehouseSchema(g, roots);
    openOut(ddlOut) << emitDdl(schema);
    if (!opt.quiet)
      std::cout << "wrote " << schema.tables.size() << " tables, "
                << schema.foreignKeys.size() << " foreign keys\n";
    return 0;
  }

  if (*exportCmd) {
    Graph g = materialize(loadTurtleFile(exportFile));
    std::vector<Iri> roots =
        exportRootsCsv.empty() ? defaultWarehouseRoots(ns.value())
                               : resolveRoots(exportRootsCsv, g, ns.value());
    WarehouseSchema schema = generateWarehouseSchema(g, roots);
    ExportStats stats;
    auto files = exportRows(g, schema, &stats);
    std::error_code ec;
    fs::create_directories(exportDir, ec);
    if (ec) throw IoError("cannot create directory: " + exportDir);
    for (const auto& [table, csv] : files)
      openOut((fs::path(exportDir) / (table + ".csv")).string()) << csv;
    if (!opt.quiet) {
      for (const auto& [table, rows] : stats.rowsPerTable)
        std::cout << table << ": " << rows << " rows\n";
      if (stats.multiValueWarnings)
        std::cerr << "warning: " << stats.multiValueWarnings
                  << " multi-valued cells reduced to first value\n";
    }
    return 0;
  }

  if (*exampleCmd) {
    saveTurtleFile(buildExampleDataset(ns), exampleOut);
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return runCli(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
