#include "agriont/query.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "agriont/turtle.hpp"
#include "agriont/vocab.hpp"

namespace agriont {

namespace {

bool isVariable(const PatternSlot& slot) {
  return std::holds_alternative<Variable>(slot);
}

const Variable& asVariable(const PatternSlot& slot) {
  return std::get<Variable>(slot);
}

void collectVars(const Query& q, std::set<std::string>& out) {
  for (const TriplePattern& tp : q.patterns)
    for (const PatternSlot* slot : {&tp.subject, &tp.predicate, &tp.object})
      if (isVariable(*slot)) out.insert(asVariable(*slot).name);
}

void validate(const Graph& graph, const Query& q) {
  if (q.patterns.empty())
    throw QueryError("query has no triple patterns");
  if (q.selectVars.empty())
    throw QueryError("query selects no variables");
  std::set<std::string> patternVars;
  collectVars(q, patternVars);
  for (const std::string& v : q.selectVars)
    if (!patternVars.count(v))
      throw QueryError("selected variable ?" + v +
                       " does not occur in any pattern");
  for (const FilterExpr& f : q.filters)
    if (!patternVars.count(f.variable))
      throw QueryError("filter variable ?" + f.variable +
                       " does not occur in any pattern");
  if (q.inferenceAware && !graph.materialized)
    throw QueryError("query is inference-aware but the graph has not been "
                     "materialized");
}

std::string valueString(const Term& t) {
  switch (t.kind()) {
    case TermKind::Iri: return t.iri().value();
    case TermKind::BlankNode: return t.blank().label;
    case TermKind::Literal: return t.literal().lexical();
  }
  return "";
}

bool filterHolds(const FilterExpr& f, const Term& bound) {
  int cmp;
  std::optional<double> lhs, rhs;
  if (bound.isLiteral()) lhs = bound.literal().numericValue();
  if (f.constant.isLiteral()) rhs = f.constant.literal().numericValue();
  if (lhs && rhs) {
    cmp = (*lhs < *rhs) ? -1 : (*lhs > *rhs) ? 1 : 0;
  } else {
    std::string a = valueString(bound), b = valueString(f.constant);
    cmp = (a < b) ? -1 : (a > b) ? 1 : 0;
  }
  switch (f.op) {
    case FilterOp::Eq: return cmp == 0;
    case FilterOp::Ne: return cmp != 0;
    case FilterOp::Lt: return cmp < 0;
    case FilterOp::Le: return cmp <= 0;
    case FilterOp::Gt: return cmp > 0;
    case FilterOp::Ge: return cmp >= 0;
  }
  return false;
}

int boundCount(const TriplePattern& tp, const Binding& binding) {
  int n = 0;
  for (const PatternSlot* slot : {&tp.subject, &tp.predicate, &tp.object}) {
    if (!isVariable(*slot) || binding.count(asVariable(*slot).name)) ++n;
  }
  return n;
}

void joinPatterns(const Graph& graph, const Query& q,
                  std::vector<bool>& used, std::size_t remaining,
                  Binding& binding, std::vector<Binding>& out) {
  if (remaining == 0) {
    for (const FilterExpr& f : q.filters)
      if (!filterHolds(f, binding.at(f.variable))) return;
    Binding projected;
    for (const std::string& v : q.selectVars)
      projected.emplace(v, binding.at(v));
    out.push_back(std::move(projected));
    return;
  }

  // Most-bound pattern first; ties resolved by original order.
  std::size_t best = q.patterns.size();
  int bestScore = -1;
  for (std::size_t i = 0; i < q.patterns.size(); ++i) {
    if (used[i]) continue;
    int score = boundCount(q.patterns[i], binding);
    if (score > bestScore) {
      bestScore = score;
      best = i;
    }
  }
  const TriplePattern& tp = q.patterns[best];
  used[best] = true;

  auto resolve = [&](const PatternSlot& slot) -> std::optional<Term> {
    if (!isVariable(slot)) return std::get<Term>(slot);
    auto it = binding.find(asVariable(slot).name);
    if (it != binding.end()) return it->second;
    return std::nullopt;
  };
  std::optional<Term> s = resolve(tp.subject);
  std::optional<Term> p = resolve(tp.predicate);
  std::optional<Term> o = resolve(tp.object);
  std::optional<Iri> pIri;
  bool predicateSatisfiable = true;
  if (p) {
    if (p->isIri())
      pIri = p->iri();
    else
      predicateSatisfiable = false;  // a variable bound to a non-IRI
  }

  if (predicateSatisfiable) {
    for (const Triple& t : graph.match(s, pIri, o)) {
      std::vector<std::string> introduced;
      bool ok = true;
      auto bind = [&](const PatternSlot& slot, const Term& value) {
        if (!isVariable(slot)) return;
        const std::string& name = asVariable(slot).name;
        auto it = binding.find(name);
        if (it != binding.end()) {
          if (it->second != value) ok = false;
          return;
        }
        binding.emplace(name, value);
        introduced.push_back(name);
      };
      bind(tp.subject, t.subject);
      if (ok) bind(tp.predicate, Term(t.predicate));
      if (ok) bind(tp.object, t.object);
      if (ok) joinPatterns(graph, q, used, remaining - 1, binding, out);
      for (const std::string& name : introduced) binding.erase(name);
    }
  }
  used[best] = false;
}

std::string bindingKey(const Binding& b) {
  std::ostringstream key;
  for (const auto& [var, term] : b) {
    key << var << '=';
    switch (term.kind()) {
      case TermKind::Iri: key << 'I' << term.iri().value(); break;
      case TermKind::BlankNode: key << 'B' << term.blank().label; break;
      case TermKind::Literal: {
        const Literal& l = term.literal();
        key << 'L' << l.lexical() << '^' << l.datatype().value();
        if (l.language()) key << '@' << *l.language();
        break;
      }
    }
    key << '\x1f';
  }
  return key.str();
}

}  // namespace

SolutionSet evaluate(const Graph& graph, const Query& q) {
  validate(graph, q);
  std::vector<Binding> raw;
  Binding binding;
  std::vector<bool> used(q.patterns.size(), false);
  joinPatterns(graph, q, used, q.patterns.size(), binding, raw);

  std::map<std::string, Binding> dedup;
  for (Binding& b : raw) dedup.emplace(bindingKey(b), std::move(b));

  SolutionSet out;
  out.vars = q.selectVars;
  for (auto& [key, b] : dedup) out.rows.push_back(std::move(b));
  return out;
}

// ---------------------------------------------------------------------------
// Surface syntax.

namespace {

class QueryParser {
 public:
  QueryParser(const std::string& text, const PrefixMap& pm)
      : text_(text), pm_(pm) {}

  Query run() {
    keyword("SELECT");
    skipWs();
    while (!atEnd() && peek() == '?') q_.selectVars.push_back(readVarName());
    if (q_.selectVars.empty()) fail("expected at least one ?variable");
    keyword("WHERE");
    skipWs();
    expect('{');
    skipWs();
    while (!atEnd() && peek() != '}') {
      if (lookingAt("FILTER")) {
        readFilter();
      } else {
        readPattern();
      }
      skipWs();
      if (!atEnd() && peek() == '.') {
        advance();
        skipWs();
      }
    }
    expect('}');
    skipWs();
    if (!atEnd()) fail("trailing input after '}'");
    return q_;
  }

 private:
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw QueryError("query syntax error at " + std::to_string(line_) + ":" +
                     std::to_string(col_) + ": " + msg);
  }

  void skipWs() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }

  void expect(char c) {
    if (atEnd() || peek() != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  bool lookingAt(std::string_view word) const {
    return text_.compare(pos_, word.size(), word) == 0;
  }

  void keyword(std::string_view word) {
    skipWs();
    if (!lookingAt(word)) fail("expected " + std::string(word));
    for (std::size_t i = 0; i < word.size(); ++i) advance();
  }

  static bool nameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-';
  }

  std::string readVarName() {
    expect('?');
    std::string name;
    while (!atEnd() && nameChar(peek())) name += advance();
    if (name.empty()) fail("empty variable name");
    skipWs();
    return name;
  }

  Term readTermLike(bool allowLiteral) {
    char c = peek();
    if (c == '<') {
      std::string iri;
      advance();
      while (!atEnd() && peek() != '>') iri += advance();
      if (atEnd()) fail("unterminated IRI");
      advance();
      return Term(Iri(iri));
    }
    if (c == '_') {
      advance();
      expect(':');
      std::string label;
      while (!atEnd() && nameChar(peek())) label += advance();
      return Term(BlankNode{label});
    }
    if (allowLiteral && c == '"') {
      advance();
      std::string lex;
      while (!atEnd() && peek() != '"') {
        char ch = advance();
        if (ch == '\\' && !atEnd()) lex += advance();
        else lex += ch;
      }
      if (atEnd()) fail("unterminated string literal");
      advance();
      if (!atEnd() && peek() == '@') {
        advance();
        std::string tag;
        while (!atEnd() && (nameChar(peek()))) tag += advance();
        return Term(Literal(lex, tag));
      }
      if (pos_ + 1 < text_.size() && peek() == '^' &&
          text_[pos_ + 1] == '^') {
        advance();
        advance();
        Term dt = readTermLike(false);
        return Term(Literal(lex, dt.iri()));
      }
      return Term(Literal(lex));
    }
    if (allowLiteral &&
        (c == '+' || c == '-' ||
         std::isdigit(static_cast<unsigned char>(c)))) {
      std::string lex;
      if (c == '+' || c == '-') lex += advance();
      bool dot = false;
      while (!atEnd() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                          (peek() == '.' && !dot))) {
        if (peek() == '.') dot = true;
        lex += advance();
      }
      return Term(Literal(lex, Iri(dot ? xsd::decimal_ : xsd::integer_)));
    }
    // prefixed name, or the 'a' keyword handled by the caller
    std::string prefix;
    while (!atEnd() && nameChar(peek())) prefix += advance();
    if (atEnd() || peek() != ':') fail("expected a term");
    advance();
    std::string local;
    while (!atEnd() && nameChar(peek())) local += advance();
    auto ns = pm_.lookup(prefix);
    if (!ns) fail("undeclared prefix '" + prefix + ":'");
    return Term(Iri(ns->value() + local));
  }

  PatternSlot readSlot(bool isPredicate, bool allowLiteral) {
    skipWs();
    if (atEnd()) fail("unexpected end of query");
    if (peek() == '?') return Variable{readVarName()};
    if (isPredicate && peek() == 'a' &&
        (pos_ + 1 >= text_.size() ||
         std::isspace(static_cast<unsigned char>(text_[pos_ + 1])))) {
      advance();
      return Term(vocab::rdfType);
    }
    return readTermLike(allowLiteral);
  }

  void readPattern() {
    TriplePattern tp;
    tp.subject = readSlot(false, false);
    tp.predicate = readSlot(true, false);
    tp.object = readSlot(false, true);
    q_.patterns.push_back(std::move(tp));
  }

  void readFilter() {
    keyword("FILTER");
    skipWs();
    expect('(');
    skipWs();
    FilterExpr f;
    f.variable = readVarName();
    skipWs();
    if (lookingAt("!=")) { f.op = FilterOp::Ne; advance(); advance(); }
    else if (lookingAt("<=")) { f.op = FilterOp::Le; advance(); advance(); }
    else if (lookingAt(">=")) { f.op = FilterOp::Ge; advance(); advance(); }
    else if (lookingAt("=")) { f.op = FilterOp::Eq; advance(); }
    else if (lookingAt("<")) { f.op = FilterOp::Lt; advance(); }
    else if (lookingAt(">")) { f.op = FilterOp::Gt; advance(); }
    else fail("expected comparison operator");
    skipWs();
    f.constant = readTermLike(true);
    skipWs();
    expect(')');
    q_.filters.push_back(std::move(f));
  }

  const std::string& text_;
  const PrefixMap& pm_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Query q_;
};

std::string opToString(FilterOp op) {
  switch (op) {
    case FilterOp::Eq: return "=";
    case FilterOp::Ne: return "!=";
    case FilterOp::Lt: return "<";
    case FilterOp::Le: return "<=";
    case FilterOp::Gt: return ">";
    case FilterOp::Ge: return ">=";
  }
  return "=";
}

std::string termToQuerySyntax(const Term& t, const PrefixMap& pm) {
  switch (t.kind()) {
    case TermKind::Iri: {
      std::string compacted = pm.compact(t.iri());
      if (compacted.front() == '<') return compacted;
      return compacted;
    }
    case TermKind::BlankNode:
      return "_:" + t.blank().label;
    case TermKind::Literal: {
      const Literal& l = t.literal();
      if (l.language()) return "\"" + l.lexical() + "\"@" + *l.language();
      if (l.datatype().value() == xsd::string_)
        return "\"" + l.lexical() + "\"";
      if (l.datatype().value() == xsd::integer_ ||
          l.datatype().value() == xsd::decimal_)
        return l.lexical();
      return "\"" + l.lexical() + "\"^^<" + l.datatype().value() + ">";
    }
  }
  return "";
}

std::string slotToString(const PatternSlot& slot, const PrefixMap& pm,
                         bool isPredicate) {
  if (isVariable(slot)) return "?" + asVariable(slot).name;
  const Term& t = std::get<Term>(slot);
  if (isPredicate && t.isIri() && t.iri() == vocab::rdfType) return "a";
  return termToQuerySyntax(t, pm);
}

}  // namespace

Query parseQuery(const std::string& text, const PrefixMap& prefixes) {
  return QueryParser(text, prefixes).run();
}

std::string printQuery(const Query& q, const PrefixMap& prefixes) {
  std::ostringstream out;
  out << "SELECT";
  for (const std::string& v : q.selectVars) out << " ?" << v;
  out << " WHERE { ";
  for (std::size_t i = 0; i < q.patterns.size(); ++i) {
    const TriplePattern& tp = q.patterns[i];
    if (i) out << " . ";
    out << slotToString(tp.subject, prefixes, false) << " "
        << slotToString(tp.predicate, prefixes, true) << " "
        << slotToString(tp.object, prefixes, false);
  }
  for (const FilterExpr& f : q.filters) {
    out << " . FILTER(?" << f.variable << " " << opToString(f.op) << " "
        << termToQuerySyntax(f.constant, prefixes) << ")";
  }
  out << " }";
  return out.str();
}

}  // namespace agriont
