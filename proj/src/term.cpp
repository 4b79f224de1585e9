#include "agriont/term.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace agriont {

std::optional<double> Literal::numericValue() const {
  const std::string& dt = datatype_.value();
  if (dt != xsd::integer_ && dt != xsd::decimal_ && dt != xsd::double_)
    return std::nullopt;
  char* end = nullptr;
  double v = std::strtod(lexical_.c_str(), &end);
  if (end == lexical_.c_str() || *end != '\0') return std::nullopt;
  return v;
}

void Literal::validateNumeric() {
  const std::string& dt = datatype_.value();
  if (dt != xsd::integer_ && dt != xsd::decimal_ && dt != xsd::double_) return;
  if (!numericValue())
    throw std::invalid_argument("lexical form '" + lexical_ +
                                "' is not valid for numeric datatype " + dt);
  if (dt == xsd::integer_ &&
      lexical_.find_first_of(".eE") != std::string::npos)
    throw std::invalid_argument("non-integer lexical form for xsd:integer: " +
                                lexical_);
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  auto rank = [](const Term& t) {
    switch (t.kind()) {
      case TermKind::Iri: return 0;
      case TermKind::BlankNode: return 1;
      case TermKind::Literal: return 2;
    }
    return 3;
  };
  if (auto c = rank(*this) <=> rank(other); c != 0) return c;
  switch (kind()) {
    case TermKind::Iri: return iri() <=> other.iri();
    case TermKind::BlankNode: return blank() <=> other.blank();
    case TermKind::Literal: {
      const Literal& a = literal();
      const Literal& b = other.literal();
      if (auto c = a.lexical() <=> b.lexical(); c != 0) return c;
      if (auto c = a.datatype() <=> b.datatype(); c != 0) return c;
      return a.language() <=> b.language();
    }
  }
  return std::strong_ordering::equal;
}

Triple::Triple(Term s, Iri p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.isLiteral())
    throw std::invalid_argument("literal in subject position");
}

std::size_t hashTerm(const Term& t) {
  std::hash<std::string> h;
  switch (t.kind()) {
    case TermKind::Iri:
      return h(t.iri().value()) * 3u;
    case TermKind::BlankNode:
      return h(t.blank().label) * 5u;
    case TermKind::Literal: {
      const Literal& l = t.literal();
      std::size_t v = h(l.lexical()) * 7u ^ h(l.datatype().value());
      if (l.language()) v ^= h(*l.language()) << 1;
      return v;
    }
  }
  return 0;
}

}  // namespace agriont
