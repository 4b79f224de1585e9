#ifndef AGRIONT_QUERY_HPP
#define AGRIONT_QUERY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "agriont/graph.hpp"

namespace agriont {

struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
};

using PatternSlot = std::variant<Term, Variable>;

struct TriplePattern {
  PatternSlot subject;
  PatternSlot predicate;  // holds a Term wrapping an Iri when concrete
  PatternSlot object;
  bool operator==(const TriplePattern&) const = default;
};

enum class FilterOp { Eq, Ne, Lt, Le, Gt, Ge };

struct FilterExpr {
  std::string variable;
  FilterOp op = FilterOp::Eq;
  Term constant;
  bool operator==(const FilterExpr&) const = default;
};

struct Query {
  std::vector<std::string> selectVars;
  std::vector<TriplePattern> patterns;
  std::vector<FilterExpr> filters;
  bool inferenceAware = false;
  bool operator==(const Query&) const = default;
};

using Binding = std::map<std::string, Term>;

struct SolutionSet {
  std::vector<std::string> vars;
  std::vector<Binding> rows;  // deduplicated, deterministically sorted
};

class QueryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validates the query, joins the patterns (most-bound first) and applies
/// filters. Numeric comparison when both sides are numeric literals,
/// lexicographic otherwise.
SolutionSet evaluate(const Graph& graph, const Query& q);

/// Surface syntax:
///   SELECT ?a ?b WHERE { tp . tp . FILTER(?v >= 10) }
/// with Turtle-style terms, resolved against `prefixes`.
Query parseQuery(const std::string& text, const PrefixMap& prefixes);

/// Inverse of parseQuery up to whitespace; parse(print(q)) == q.
std::string printQuery(const Query& q, const PrefixMap& prefixes);

}  // namespace agriont

#endif
