#ifndef AGRIONT_GRAPH_HPP
#define AGRIONT_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "agriont/term.hpp"

namespace agriont {

/// Prefix label -> namespace IRI bindings, with longest-match compaction.
class PrefixMap {
 public:
  void bind(const std::string& prefix, const Iri& ns) {
    bindings_[prefix] = ns;
  }
  bool has(const std::string& prefix) const {
    return bindings_.count(prefix) != 0;
  }
  std::optional<Iri> lookup(const std::string& prefix) const;

  /// "ex:local" -> full IRI. Throws std::invalid_argument on an undeclared
  /// prefix or a curie without a colon.
  Iri expand(const std::string& curie) const;

  /// Longest declared namespace wins; IRIs under no declared namespace come
  /// back as "<...>".
  std::string compact(const Iri& iri) const;

  const std::map<std::string, Iri>& bindings() const { return bindings_; }
  void mergeFrom(const PrefixMap& other);

 private:
  std::map<std::string, Iri> bindings_;
};

struct TriplePatternQuery {
  std::optional<Term> subject;
  std::optional<Iri> predicate;
  std::optional<Term> object;
};

/// Indexed triple set with set semantics and deterministic iteration.
/// Triples keep an asserted/inferred provenance flag so inference output
/// can be serialized with or without derived statements.
class Graph {
 public:
  Graph() = default;

  /// Returns true iff the triple was newly added.
  bool insert(const Triple& t, bool inferred = false);
  bool remove(const Triple& t);
  bool contains(const Triple& t) const;
  bool isInferred(const Triple& t) const;

  std::size_t size() const { return live_; }
  bool empty() const { return live_ == 0; }

  /// All triples agreeing with every bound position, in insertion order.
  std::vector<Triple> match(const TriplePatternQuery& q) const;
  std::vector<Triple> match(std::optional<Term> s, std::optional<Iri> p,
                            std::optional<Term> o) const {
    return match(TriplePatternQuery{std::move(s), std::move(p), std::move(o)});
  }
  std::vector<Triple> triples() const;
  std::vector<Triple> assertedTriples() const;

  /// Checks that the S-, P- and O-keyed indexes each enumerate exactly the
  /// stored triple set. Returns false when any access path disagrees.
  bool auditIndexes() const;

  BlankNode mintBlankNode();

  PrefixMap& prefixes() { return prefixes_; }
  const PrefixMap& prefixes() const { return prefixes_; }

  bool materialized = false;

 private:
  struct Rec {
    Triple triple;
    bool inferred = false;
    bool live = true;
  };

  void appendMatches(const std::vector<std::size_t>& bucket,
                     const TriplePatternQuery& q,
                     std::vector<Triple>& out) const;

  std::vector<Rec> records_;
  std::unordered_map<Triple, std::size_t, TripleHash> byTriple_;
  std::unordered_map<Term, std::vector<std::size_t>, TermHash> bySubject_;
  std::unordered_map<std::string, std::vector<std::size_t>> byPredicate_;
  std::unordered_map<Term, std::vector<std::size_t>, TermHash> byObject_;
  std::size_t live_ = 0;
  std::size_t blankCounter_ = 0;
  PrefixMap prefixes_;
};

}  // namespace agriont

#endif
