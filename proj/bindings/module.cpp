#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "agriont/example.hpp"
#include "agriont/inference.hpp"
#include "agriont/ingest.hpp"
#include "agriont/query.hpp"
#include "agriont/schema.hpp"
#include "agriont/turtle.hpp"
#include "agriont/vocab.hpp"
#include "agriont/warehouse.hpp"

namespace py = pybind11;
using namespace agriont;

namespace {

py::object termToPy(const Term& t) {
  py::dict d;
  switch (t.kind()) {
    case TermKind::Iri:
      d["type"] = "iri";
      d["value"] = t.iri().value();
      break;
    case TermKind::BlankNode:
      d["type"] = "bnode";
      d["value"] = t.blank().label;
      break;
    case TermKind::Literal:
      d["type"] = "literal";
      d["value"] = t.literal().lexical();
      d["datatype"] = t.literal().datatype().value();
      if (t.literal().language()) d["language"] = *t.literal().language();
      break;
  }
  return d;
}

Term pyToTerm(const py::handle& h) {
  if (py::isinstance<py::str>(h)) {
    std::string s = h.cast<std::string>();
    if (s.rfind("_:", 0) == 0) return Term(BlankNode{s.substr(2)});
    return Term(Iri(s));
  }
  py::dict d = h.cast<py::dict>();
  std::string type = d["type"].cast<std::string>();
  std::string value = d["value"].cast<std::string>();
  if (type == "iri") return Term(Iri(value));
  if (type == "bnode") return Term(BlankNode{value});
  if (d.contains("language"))
    return Term(Literal(value, d["language"].cast<std::string>()));
  if (d.contains("datatype"))
    return Term(Literal(value, Iri(d["datatype"].cast<std::string>())));
  return Term(Literal(value));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "AgriOnt knowledge-graph toolkit (C++ core)";
  m.attr("DEFAULT_NAMESPACE") = vocab::defaultNs;

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def("__len__", &Graph::size)
      .def("insert",
           [](Graph& g, const py::handle& s, const std::string& p,
              const py::handle& o) {
             return g.insert(Triple(pyToTerm(s), Iri(p), pyToTerm(o)));
           })
      .def("contains",
           [](const Graph& g, const py::handle& s, const std::string& p,
              const py::handle& o) {
             return g.contains(Triple(pyToTerm(s), Iri(p), pyToTerm(o)));
           })
      .def("match",
           [](const Graph& g, const py::object& s, const py::object& p,
              const py::object& o) {
             std::optional<Term> sq, oq;
             std::optional<Iri> pq;
             if (!s.is_none()) sq = pyToTerm(s);
             if (!p.is_none()) pq = Iri(p.cast<std::string>());
             if (!o.is_none()) oq = pyToTerm(o);
             py::list out;
             for (const Triple& t : g.match(sq, pq, oq))
               out.append(py::make_tuple(termToPy(t.subject),
                                         t.predicate.value(),
                                         termToPy(t.object)));
             return out;
           },
           py::arg("s") = py::none(), py::arg("p") = py::none(),
           py::arg("o") = py::none())
      .def("bind_prefix",
           [](Graph& g, const std::string& prefix, const std::string& ns) {
             g.prefixes().bind(prefix, Iri(ns));
           })
      .def_readwrite("materialized", &Graph::materialized);

  m.def("parse_turtle",
        [](const std::string& text) { return parseTurtle(text); });
  m.def("serialize_turtle", &serializeTurtle, py::arg("graph"),
        py::arg("include_inferred") = true);
  m.def("load_turtle_file",
        [](const std::string& path) { return loadTurtleFile(path); });

  m.def("build_core_schema",
        [](const std::string& ns) { return buildCoreSchema(Iri(ns)); },
        py::arg("namespace_iri") = vocab::defaultNs);
  m.def("build_example_dataset",
        [](const std::string& ns) { return buildExampleDataset(Iri(ns)); },
        py::arg("namespace_iri") = vocab::defaultNs);

  m.def("compute_metrics", [](const Graph& g) {
    OntologyMetrics metrics = computeMetrics(g);
    py::dict d;
    d["axiomCount"] = metrics.axiomCount;
    d["logicalAxiomCount"] = metrics.logicalAxiomCount;
    d["declarationAxioms"] = metrics.declarationAxiomCount;
    d["classCount"] = metrics.classCount;
    d["objectPropertyCount"] = metrics.objectPropertyCount;
    d["dataPropertyCount"] = metrics.dataPropertyCount;
    d["individualCount"] = metrics.individualCount;
    return d;
  });

  m.def("materialize",
        [](const Graph& g, const std::string& rules) {
          return materialize(g, rules.empty() ? RuleSet::all()
                                              : RuleSet::fromNames(rules));
        },
        py::arg("graph"), py::arg("rules") = "");

  m.def("subclass_closure", [](const Graph& g) {
    py::list out;
    for (const auto& [sub, super] : subclassClosure(g))
      out.append(py::make_tuple(sub.value(), super.value()));
    return out;
  });

  m.def("evaluate_query",
        [](const Graph& g, const std::string& text, bool infer) {
          Graph working = infer ? materialize(g) : g;
          Query q = parseQuery(text, working.prefixes());
          q.inferenceAware = infer;
          SolutionSet solutions = evaluate(working, q);
          py::dict result;
          result["vars"] = solutions.vars;
          py::list rows;
          for (const Binding& row : solutions.rows) {
            py::dict r;
            for (const auto& [var, term] : row)
              r[py::str(var)] = termToPy(term);
            rows.append(std::move(r));
          }
          result["rows"] = std::move(rows);
          return result;
        },
        py::arg("graph"), py::arg("query"), py::arg("infer") = false);

  m.def("ingest_geo",
        [](Graph& g, const std::string& countriesCsv,
           const std::string& subdivisionsCsv, const std::string& ns) {
          std::istringstream c(countriesCsv), s(subdivisionsCsv);
          IngestReport r = ingestGeo(g, c, s, ns);
          py::dict d;
          d["recordsRead"] = r.recordsRead;
          d["individualsCreated"] = r.individualsCreated;
          d["triplesAdded"] = r.triplesAdded;
          d["recordsRejected"] = r.recordsRejected;
          return d;
        },
        py::arg("graph"), py::arg("countries_csv"),
        py::arg("subdivisions_csv"),
        py::arg("namespace_iri") = vocab::defaultNs);

  m.def("ingest_diseases",
        [](Graph& g, const std::string& csvText, const std::string& ns) {
          std::istringstream c(csvText);
          IngestReport r = ingestDiseases(g, c, ns);
          py::dict d;
          d["recordsRead"] = r.recordsRead;
          d["individualsCreated"] = r.individualsCreated;
          d["triplesAdded"] = r.triplesAdded;
          d["recordsRejected"] = r.recordsRejected;
          return d;
        },
        py::arg("graph"), py::arg("csv_text"),
        py::arg("namespace_iri") = vocab::defaultNs);

  m.def("generate_ddl",
        [](const Graph& g, const std::vector<std::string>& roots,
           const std::string& ns) {
          std::vector<Iri> rootIris;
          if (roots.empty())
            rootIris = defaultWarehouseRoots(ns);
          else
            for (const std::string& r : roots) rootIris.emplace_back(r);
          return emitDdl(generateWarehouseSchema(g, rootIris));
        },
        py::arg("graph"), py::arg("roots") = std::vector<std::string>{},
        py::arg("namespace_iri") = vocab::defaultNs);

  m.def("export_rows",
        [](const Graph& g, const std::vector<std::string>& roots,
           const std::string& ns) {
          std::vector<Iri> rootIris;
          if (roots.empty())
            rootIris = defaultWarehouseRoots(ns);
          else
            for (const std::string& r : roots) rootIris.emplace_back(r);
          return exportRows(g, generateWarehouseSchema(g, rootIris));
        },
        py::arg("graph"), py::arg("roots") = std::vector<std::string>{},
        py::arg("namespace_iri") = vocab::defaultNs);
}
