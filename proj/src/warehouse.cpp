#include "agriont/warehouse.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "agriont/csv.hpp"
#include "agriont/inference.hpp"
#include "agriont/vocab.hpp"

namespace agriont {

namespace {

std::string localName(const Iri& iri) {
  const std::string& v = iri.value();
  auto hash = v.rfind('#');
  if (hash != std::string::npos) return v.substr(hash + 1);
  auto slash = v.rfind('/');
  if (slash != std::string::npos) return v.substr(slash + 1);
  return v;
}

const char* sqlTypeName(SqlType t) {
  switch (t) {
    case SqlType::Text: return "TEXT";
    case SqlType::BigInt: return "BIGINT";
    case SqlType::Double: return "DOUBLE";
    case SqlType::Boolean: return "BOOLEAN";
  }
  return "TEXT";
}

SqlType sqlTypeForDatatype(const std::optional<Iri>& range) {
  if (!range) return SqlType::Text;
  const std::string& v = range->value();
  if (v == xsd::integer_) return SqlType::BigInt;
  if (v == xsd::decimal_ || v == xsd::double_) return SqlType::Double;
  if (v == xsd::boolean_) return SqlType::Boolean;
  return SqlType::Text;
}

struct PropInfo {
  Iri iri;
  bool isData = false;
  std::optional<Iri> domain;
  std::optional<Iri> range;
};

/// Declared properties in graph insertion order; that order drives the
/// column order after id.
std::vector<PropInfo> collectProperties(const Graph& graph) {
  std::vector<PropInfo> props;
  std::unordered_set<std::string> seen;
  for (const Triple& t : graph.triples()) {
    if (t.predicate != vocab::rdfType || !t.subject.isIri() ||
        !t.object.isIri())
      continue;
    bool data = t.object.iri() == vocab::owlDatatypeProperty;
    bool object = t.object.iri() == vocab::owlObjectProperty;
    if (!data && !object) continue;
    if (!seen.insert(t.subject.iri().value()).second) continue;
    PropInfo info;
    info.iri = t.subject.iri();
    info.isData = data;
    auto domains = graph.match(t.subject, vocab::rdfsDomain, {});
    if (!domains.empty() && domains.front().object.isIri())
      info.domain = domains.front().object.iri();
    auto ranges = graph.match(t.subject, vocab::rdfsRange, {});
    if (!ranges.empty() && ranges.front().object.isIri())
      info.range = ranges.front().object.iri();
    props.push_back(std::move(info));
  }
  return props;
}

}  // namespace

std::string snakeCase(const std::string& localName) {
  std::string out;
  for (std::size_t i = 0; i < localName.size(); ++i) {
    char c = localName[i];
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (i > 0 && (std::islower(static_cast<unsigned char>(localName[i - 1])) ||
                    std::isdigit(static_cast<unsigned char>(localName[i - 1]))))
        out += '_';
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      out += c;
    }
  }
  return out;
}

std::vector<Iri> defaultWarehouseRoots(const std::string& ns) {
  std::vector<Iri> roots;
  for (const char* name : {"Product", "Crop", "Farm", "Farmer",
                           "SoilCondition", "WeatherCondition"})
    roots.emplace_back(ns + name);
  return roots;
}

WarehouseSchema generateWarehouseSchema(const Graph& graph,
                                        const std::vector<Iri>& rootClasses) {
  WarehouseSchema schema;
  if (rootClasses.empty()) return schema;

  for (const Iri& root : rootClasses)
    if (!graph.contains(
            Triple(Term(root), vocab::rdfType, Term(vocab::owlClass))))
      throw std::runtime_error("unknown root class: " + root.value());

  std::unordered_map<std::string, std::string> tableByClass;
  std::unordered_set<std::string> tableNames;
  for (const Iri& root : rootClasses) {
    std::string table = snakeCase(localName(root));
    if (!tableNames.insert(table).second)
      throw std::runtime_error("duplicate table name after snake_casing: " +
                               table);
    tableByClass.emplace(root.value(), table);
  }

  auto closure = subclassClosure(graph);
  auto subsumes = [&](const Iri& domain, const Iri& cls) {
    return closure.count({cls, domain}) != 0;
  };

  std::vector<PropInfo> props = collectProperties(graph);

  for (const Iri& root : rootClasses) {
    TableDef table;
    table.name = tableByClass.at(root.value());
    table.sourceClass = root;
    table.columns.push_back({"id", SqlType::Text, std::nullopt, false});

    std::unordered_set<std::string> usedNames{"id"};
    for (const PropInfo& p : props) {
      if (!p.domain || !subsumes(*p.domain, root)) continue;
      std::string base = snakeCase(localName(p.iri));
      if (p.isData) {
        if (!usedNames.insert(base).second)
          throw std::runtime_error("duplicate column '" + base +
                                   "' in table " + table.name);
        table.columns.push_back(
            {base, sqlTypeForDatatype(p.range), p.iri, true});
      } else {
        bool fkToRoot =
            p.range && tableByClass.count(p.range->value()) != 0;
        std::string name = fkToRoot ? base + "_id" : base;
        if (!usedNames.insert(name).second)
          throw std::runtime_error("duplicate column '" + name +
                                   "' in table " + table.name);
        table.columns.push_back({name, SqlType::Text, p.iri, true});
        if (fkToRoot)
          schema.foreignKeys.push_back(
              {table.name, name, tableByClass.at(p.range->value()), p.iri});
      }
    }
    schema.tables.push_back(std::move(table));
  }

  std::sort(schema.tables.begin(), schema.tables.end(),
            [](const TableDef& a, const TableDef& b) {
              return a.name < b.name;
            });
  std::sort(schema.foreignKeys.begin(), schema.foreignKeys.end(),
            [](const ForeignKeyDef& a, const ForeignKeyDef& b) {
              return std::tie(a.fromTable, a.fromColumn) <
                     std::tie(b.fromTable, b.fromColumn);
            });
  return schema;
}

std::string emitDdl(const WarehouseSchema& schema) {
  std::ostringstream out;
  for (const TableDef& table : schema.tables) {
    out << "CREATE TABLE " << table.name << " (\n";
    for (const ColumnDef& col : table.columns) {
      out << "  " << col.name << " " << sqlTypeName(col.sqlType);
      if (!col.nullable) out << " NOT NULL";
      out << ",\n";
    }
    out << "  PRIMARY KEY (id)\n);\n\n";
  }
  for (const ForeignKeyDef& fk : schema.foreignKeys) {
    out << "ALTER TABLE " << fk.fromTable << " ADD FOREIGN KEY ("
        << fk.fromColumn << ") REFERENCES " << fk.toTable << " (id);\n";
  }
  return out.str();
}

std::map<std::string, std::string> exportRows(const Graph& graph,
                                              const WarehouseSchema& schema,
                                              ExportStats* stats) {
  std::map<std::string, std::string> out;
  for (const TableDef& table : schema.tables) {
    std::ostringstream csv;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
      csv << (i ? "," : "") << table.columns[i].name;
    csv << "\n";

    std::set<Term> subjects;
    for (const Triple& t :
         graph.match({}, vocab::rdfType, Term(table.sourceClass)))
      subjects.insert(t.subject);

    std::size_t rows = 0;
    for (const Term& subject : subjects) {
      ++rows;
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        const ColumnDef& col = table.columns[i];
        if (i) csv << ",";
        if (col.name == "id") {
          csv << csvEscape(subject.isIri() ? subject.iri().value()
                                           : "_:" + subject.blank().label);
          continue;
        }
        if (!col.sourceProperty) continue;
        auto values = graph.match(subject, *col.sourceProperty, {});
        if (values.empty()) continue;
        std::vector<Term> objects;
        for (const Triple& t : values) objects.push_back(t.object);
        std::sort(objects.begin(), objects.end());
        if (objects.size() > 1 && stats) ++stats->multiValueWarnings;
        const Term& v = objects.front();
        std::string cell;
        switch (v.kind()) {
          case TermKind::Iri: cell = v.iri().value(); break;
          case TermKind::BlankNode: cell = "_:" + v.blank().label; break;
          case TermKind::Literal: cell = v.literal().lexical(); break;
        }
        csv << csvEscape(cell);
      }
      csv << "\n";
    }
    if (stats) stats->rowsPerTable[table.name] = rows;
    out.emplace(table.name, csv.str());
  }
  return out;
}

}  // namespace agriont
