#ifndef AGRIONT_TURTLE_HPP
#define AGRIONT_TURTLE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "agriont/graph.hpp"

namespace agriont {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::string offendingToken = "")
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message +
                           (offendingToken.empty()
                                ? ""
                                : " (near '" + offendingToken + "')")),
        line(line),
        column(column),
        message(std::move(message)),
        offendingToken(std::move(offendingToken)) {}

  std::size_t line;
  std::size_t column;
  std::string message;
  std::string offendingToken;
};

/// Parses the supported Turtle subset: @prefix directives, s-p-o statements
/// with ';' and ',' lists, 'a', <iri>, prefixed names, quoted strings with
/// language tags and ^^ datatypes, integer/decimal shorthand, _:label blank
/// nodes and # comments. Throws ParseError on the first violation.
Graph parseTurtle(std::string_view input, const PrefixMap& basePrefixes = {});

/// Deterministic serializer: prefix directives sorted by label, then triples
/// grouped by subject (sorted on compacted form), predicates sorted within
/// subject, objects within predicate.
std::string serializeTurtle(const Graph& graph, bool includeInferred = true);

Graph loadTurtleFile(const std::string& path,
                     const PrefixMap& basePrefixes = {});
void saveTurtleFile(const Graph& graph, const std::string& path,
                    bool includeInferred = true);

}  // namespace agriont

#endif
