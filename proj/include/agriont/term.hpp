#ifndef AGRIONT_TERM_HPP
#define AGRIONT_TERM_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace agriont {

namespace xsd {
inline constexpr std::string_view ns = "http://www.w3.org/2001/XMLSchema#";
inline const std::string string_ = std::string(ns) + "string";
inline const std::string integer_ = std::string(ns) + "integer";
inline const std::string decimal_ = std::string(ns) + "decimal";
inline const std::string double_ = std::string(ns) + "double";
inline const std::string boolean_ = std::string(ns) + "boolean";
inline const std::string langString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
}  // namespace xsd

/// Absolute IRI. Strings compare byte-wise; no normalization.
class Iri {
 public:
  Iri() = default;
  explicit Iri(std::string value) : value_(std::move(value)) {
    if (value_.empty()) throw std::invalid_argument("empty IRI");
    for (char c : value_) {
      if (c == ' ' || c == '<' || c == '>' || c == '"' || c == '\t' ||
          c == '\n' || c == '\r') {
        throw std::invalid_argument("IRI contains forbidden character: " +
                                    value_);
      }
    }
  }

  const std::string& value() const { return value_; }
  auto operator<=>(const Iri&) const = default;

 private:
  std::string value_;
};

/// Literal value: lexical form + datatype IRI + optional language tag.
class Literal {
 public:
  Literal() : datatype_(Iri(xsd::string_)) {}

  explicit Literal(std::string lexical)
      : lexical_(std::move(lexical)), datatype_(Iri(xsd::string_)) {}

  Literal(std::string lexical, Iri datatype)
      : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {
    validateNumeric();
  }

  /// Language-tagged string. Tag is lowercased on construction.
  Literal(std::string lexical, std::string languageTag)
      : lexical_(std::move(lexical)), datatype_(Iri(xsd::langString)) {
    if (languageTag.empty())
      throw std::invalid_argument("empty language tag");
    for (char& c : languageTag) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-'))
        throw std::invalid_argument("malformed language tag: " + languageTag);
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    language_ = std::move(languageTag);
  }

  static Literal integer(long long v) {
    return Literal(std::to_string(v), Iri(xsd::integer_));
  }
  static Literal decimal(std::string lexical) {
    return Literal(std::move(lexical), Iri(xsd::decimal_));
  }

  const std::string& lexical() const { return lexical_; }
  const Iri& datatype() const { return datatype_; }
  const std::optional<std::string>& language() const { return language_; }

  /// Numeric value when the datatype is one of the xsd numeric types.
  std::optional<double> numericValue() const;

  auto operator<=>(const Literal&) const = default;

 private:
  void validateNumeric();

  std::string lexical_;
  Iri datatype_;
  std::optional<std::string> language_;
};

struct BlankNode {
  std::string label;
  auto operator<=>(const BlankNode&) const = default;
};

enum class TermKind { Iri, Literal, BlankNode };

/// One RDF term. Ordering is kind-major (IRIs, then blanks, then literals)
/// so serializer output is stable.
class Term {
 public:
  Term() : node_(Iri("urn:agriont:uninitialized")) {}
  Term(Iri iri) : node_(std::move(iri)) {}
  Term(Literal lit) : node_(std::move(lit)) {}
  Term(BlankNode b) : node_(std::move(b)) {}

  TermKind kind() const {
    if (std::holds_alternative<Iri>(node_)) return TermKind::Iri;
    if (std::holds_alternative<BlankNode>(node_)) return TermKind::BlankNode;
    return TermKind::Literal;
  }
  bool isIri() const { return kind() == TermKind::Iri; }
  bool isLiteral() const { return kind() == TermKind::Literal; }
  bool isBlank() const { return kind() == TermKind::BlankNode; }

  const Iri& iri() const { return std::get<Iri>(node_); }
  const Literal& literal() const { return std::get<Literal>(node_); }
  const BlankNode& blank() const { return std::get<BlankNode>(node_); }

  bool operator==(const Term&) const = default;
  std::strong_ordering operator<=>(const Term& other) const;

 private:
  std::variant<Iri, BlankNode, Literal> node_;
};

struct Triple {
  Term subject;
  Iri predicate;
  Term object;

  Triple() = default;
  Triple(Term s, Iri p, Term o);

  bool operator==(const Triple&) const = default;
  auto operator<=>(const Triple&) const = default;
};

std::size_t hashTerm(const Term& t);

struct TermHash {
  std::size_t operator()(const Term& t) const { return hashTerm(t); }
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const {
    std::size_t h = hashTerm(t.subject);
    h = h * 1000003u ^ std::hash<std::string>{}(t.predicate.value());
    h = h * 1000003u ^ hashTerm(t.object);
    return h;
  }
};

}  // namespace agriont

#endif
