#ifndef AGRIONT_WAREHOUSE_HPP
#define AGRIONT_WAREHOUSE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agriont/graph.hpp"

namespace agriont {

enum class SqlType { Text, BigInt, Double, Boolean };

struct ColumnDef {
  std::string name;
  SqlType sqlType = SqlType::Text;
  std::optional<Iri> sourceProperty;
  bool nullable = true;
};

struct TableDef {
  std::string name;  // snake_case of the class local name
  Iri sourceClass;
  std::vector<ColumnDef> columns;  // id first
};

struct ForeignKeyDef {
  std::string fromTable;
  std::string fromColumn;
  std::string toTable;
  Iri sourceProperty;
};

struct WarehouseSchema {
  std::vector<TableDef> tables;
  std::vector<ForeignKeyDef> foreignKeys;
};

struct ExportStats {
  std::map<std::string, std::size_t> rowsPerTable;
  std::size_t multiValueWarnings = 0;
};

std::string snakeCase(const std::string& localName);

/// One table per root class. Columns come from data properties whose domain
/// subsumes the class (inherited through the subclass closure); object
/// properties become foreign keys when their range is itself a root table,
/// TEXT columns holding the object IRI otherwise.
WarehouseSchema generateWarehouseSchema(const Graph& graph,
                                        const std::vector<Iri>& rootClasses);

/// The default warehouse root classes resolved against a namespace.
std::vector<Iri> defaultWarehouseRoots(const std::string& ns);

/// Deterministic ANSI DDL: CREATE TABLE per table (sorted by name), then
/// ALTER TABLE ... ADD FOREIGN KEY statements.
std::string emitDdl(const WarehouseSchema& schema);

/// One CSV stream per table keyed by table name, header row included.
std::map<std::string, std::string> exportRows(const Graph& graph,
                                              const WarehouseSchema& schema,
                                              ExportStats* stats = nullptr);

}  // namespace agriont

#endif
