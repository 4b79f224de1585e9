#include "agriont/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "agriont/vocab.hpp"

namespace agriont {

namespace {

class Parser {
 public:
  Parser(std::string_view input, const PrefixMap& basePrefixes)
      : input_(input) {
    graph_.prefixes().mergeFrom(basePrefixes);
  }

  Graph run() {
    skipWs();
    while (!atEnd()) {
      if (peek() == '@')
        directive();
      else
        statement();
      skipWs();
    }
    return std::move(graph_);
  }

 private:
  bool atEnd() const { return pos_ >= input_.size(); }
  char peek() const { return input_[pos_]; }

  char advance() {
    char c = input_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& msg, std::string token = "") {
    throw ParseError(line_, col_, msg, std::move(token));
  }

  void skipWs() {
    while (!atEnd()) {
      char c = peek();
      if (c == '#') {
        while (!atEnd() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (atEnd() || peek() != c)
      fail(std::string("expected '") + c + "'",
           atEnd() ? "<eof>" : std::string(1, peek()));
    advance();
  }

  static bool nameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '.';
  }

  std::string readName() {
    std::string out;
    while (!atEnd() && nameChar(peek())) out += advance();
    // A trailing '.' belongs to the statement terminator, not the name.
    while (!out.empty() && out.back() == '.') {
      out.pop_back();
      --pos_;
      --col_;
    }
    return out;
  }

  Iri readIriRef() {
    std::size_t l = line_, c = col_;
    expect('<');
    std::string out;
    while (!atEnd() && peek() != '>') {
      char ch = advance();
      if (ch == '\n') throw ParseError(l, c, "unterminated IRI");
      out += ch;
    }
    if (atEnd()) throw ParseError(l, c, "unterminated IRI");
    advance();
    try {
      return Iri(out);
    } catch (const std::invalid_argument& e) {
      throw ParseError(l, c, e.what(), out);
    }
  }

  Iri readIri() {
    if (peek() == '<') return readIriRef();
    std::size_t l = line_, c = col_;
    std::string prefix = readName();
    if (atEnd() || peek() != ':')
      fail("expected prefixed name", prefix);
    advance();
    std::string local = readName();
    auto ns = graph_.prefixes().lookup(prefix);
    if (!ns) throw ParseError(l, c, "undeclared prefix '" + prefix + ":'");
    return Iri(ns->value() + local);
  }

  Literal readStringLiteral() {
    std::size_t l = line_, c = col_;
    expect('"');
    std::string lexical;
    while (true) {
      if (atEnd()) throw ParseError(l, c, "unterminated string literal");
      char ch = advance();
      if (ch == '"') break;
      if (ch == '\n') throw ParseError(l, c, "unterminated string literal");
      if (ch == '\\') {
        if (atEnd()) throw ParseError(l, c, "unterminated escape");
        char e = advance();
        switch (e) {
          case 'n': lexical += '\n'; break;
          case 't': lexical += '\t'; break;
          case 'r': lexical += '\r'; break;
          case '"': lexical += '"'; break;
          case '\\': lexical += '\\'; break;
          default:
            fail(std::string("unsupported escape '\\") + e + "'");
        }
      } else {
        lexical += ch;
      }
    }
    if (!atEnd() && peek() == '@') {
      advance();
      std::string tag;
      while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                          peek() == '-'))
        tag += advance();
      if (tag.empty()) fail("empty language tag");
      return Literal(lexical, tag);
    }
    if (pos_ + 1 < input_.size() && peek() == '^' && input_[pos_ + 1] == '^') {
      advance();
      advance();
      Iri datatype = readIri();
      try {
        return Literal(lexical, datatype);
      } catch (const std::invalid_argument& e) {
        throw ParseError(l, c, e.what(), lexical);
      }
    }
    return Literal(lexical);
  }

  Literal readNumericLiteral() {
    std::size_t l = line_, c = col_;
    std::string lexical;
    if (peek() == '+' || peek() == '-') lexical += advance();
    bool dot = false;
    while (!atEnd() &&
           (std::isdigit(static_cast<unsigned char>(peek())) ||
            (peek() == '.' && !dot))) {
      // "12." is a statement terminator after an integer, not a decimal.
      if (peek() == '.') {
        if (pos_ + 1 >= input_.size() ||
            !std::isdigit(static_cast<unsigned char>(input_[pos_ + 1])))
          break;
        dot = true;
      }
      lexical += advance();
    }
    if (lexical.empty() || lexical == "+" || lexical == "-")
      throw ParseError(l, c, "malformed numeric literal", lexical);
    return Literal(lexical, Iri(dot ? xsd::decimal_ : xsd::integer_));
  }

  Term readSubject() {
    if (peek() == '_') return readBlank();
    return Term(readIri());
  }

  Term readBlank() {
    expect('_');
    expect(':');
    std::string label = readName();
    if (label.empty()) fail("empty blank node label");
    return Term(BlankNode{label});
  }

  Term readObject() {
    char c = peek();
    if (c == '"') return Term(readStringLiteral());
    if (c == '_') return readBlank();
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
      return Term(readNumericLiteral());
    return Term(readIri());
  }

  Iri readVerb() {
    if (peek() == 'a') {
      // 'a' keyword only when followed by whitespace.
      if (pos_ + 1 < input_.size() &&
          std::isspace(static_cast<unsigned char>(input_[pos_ + 1]))) {
        advance();
        return vocab::rdfType;
      }
    }
    return readIri();
  }

  void directive() {
    std::size_t l = line_, c = col_;
    expect('@');
    std::string word = readName();
    if (word != "prefix")
      throw ParseError(l, c, "unsupported directive '@" + word + "'");
    skipWs();
    std::string prefix = readName();
    expect(':');
    skipWs();
    Iri ns = readIriRef();
    skipWs();
    expect('.');
    graph_.prefixes().bind(prefix, ns);
  }

  void statement() {
    Term subject = readSubject();
    while (true) {
      skipWs();
      if (atEnd()) fail("expected predicate", "<eof>");
      Iri predicate = readVerb();
      while (true) {
        skipWs();
        if (atEnd()) fail("expected object", "<eof>");
        Term object = readObject();
        graph_.insert(Triple(subject, predicate, object));
        skipWs();
        if (!atEnd() && peek() == ',') {
          advance();
          continue;
        }
        break;
      }
      if (!atEnd() && peek() == ';') {
        advance();
        skipWs();
        // Trailing ';' before '.' is tolerated.
        if (!atEnd() && peek() == '.') break;
        continue;
      }
      break;
    }
    skipWs();
    if (atEnd()) fail("statement missing terminating '.'", "<eof>");
    expect('.');
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Graph graph_;
};

std::string escapeString(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

bool integerShorthandOk(const std::string& lex) {
  if (lex.empty()) return false;
  std::size_t i = (lex[0] == '+' || lex[0] == '-') ? 1 : 0;
  if (i == lex.size()) return false;
  return lex.find_first_not_of("0123456789", i) == std::string::npos;
}

bool decimalShorthandOk(const std::string& lex) {
  auto dot = lex.find('.');
  if (dot == std::string::npos || dot + 1 == lex.size()) return false;
  std::size_t i = (lex[0] == '+' || lex[0] == '-') ? 1 : 0;
  for (std::size_t k = i; k < lex.size(); ++k)
    if (lex[k] != '.' && !std::isdigit(static_cast<unsigned char>(lex[k])))
      return false;
  return lex.find('.', dot + 1) == std::string::npos && dot > i - 0 &&
         dot >= i && dot + 1 < lex.size() && dot != i;
}

std::string termToTurtle(const Term& t, const PrefixMap& pm) {
  switch (t.kind()) {
    case TermKind::Iri:
      return pm.compact(t.iri());
    case TermKind::BlankNode:
      return "_:" + t.blank().label;
    case TermKind::Literal: {
      const Literal& l = t.literal();
      const std::string& dt = l.datatype().value();
      if (l.language())
        return "\"" + escapeString(l.lexical()) + "\"@" + *l.language();
      if (dt == xsd::integer_ && integerShorthandOk(l.lexical()))
        return l.lexical();
      if (dt == xsd::decimal_ && decimalShorthandOk(l.lexical()))
        return l.lexical();
      if (dt == xsd::string_) return "\"" + escapeString(l.lexical()) + "\"";
      return "\"" + escapeString(l.lexical()) + "\"^^" +
             pm.compact(l.datatype());
    }
  }
  return "";
}

}  // namespace

Graph parseTurtle(std::string_view input, const PrefixMap& basePrefixes) {
  return Parser(input, basePrefixes).run();
}

std::string serializeTurtle(const Graph& graph, bool includeInferred) {
  const PrefixMap& pm = graph.prefixes();
  std::ostringstream out;
  for (const auto& [prefix, ns] : pm.bindings())
    out << "@prefix " << prefix << ": <" << ns.value() << "> .\n";
  auto triples = includeInferred ? graph.triples() : graph.assertedTriples();
  if (triples.empty()) return out.str();
  if (!pm.bindings().empty()) out << "\n";

  // subject key -> predicate key -> sorted object strings
  std::map<std::string, std::map<std::string, std::vector<std::string>>>
      grouped;
  for (const Triple& t : triples) {
    std::string s = termToTurtle(t.subject, pm);
    std::string p = t.predicate == vocab::rdfType
                        ? "a"
                        : pm.compact(t.predicate);
    grouped[s][p].push_back(termToTurtle(t.object, pm));
  }
  for (auto& [s, preds] : grouped) {
    out << s;
    bool firstPred = true;
    // 'a' first, then the rest alphabetically (std::map keeps them sorted;
    // lowercase 'a' sorts after uppercase names, so pull it out).
    std::vector<std::pair<std::string, std::vector<std::string>*>> order;
    auto ait = preds.find("a");
    if (ait != preds.end()) order.emplace_back("a", &ait->second);
    for (auto& [p, objs] : preds)
      if (p != "a") order.emplace_back(p, &objs);
    for (auto& [p, objs] : order) {
      std::sort(objs->begin(), objs->end());
      out << (firstPred ? " " : " ;\n    ") << p << " ";
      firstPred = false;
      for (std::size_t i = 0; i < objs->size(); ++i)
        out << (i ? ", " : "") << (*objs)[i];
    }
    out << " .\n";
  }
  return out.str();
}

Graph loadTurtleFile(const std::string& path, const PrefixMap& basePrefixes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseTurtle(buf.str(), basePrefixes);
}

void saveTurtleFile(const Graph& graph, const std::string& path,
                    bool includeInferred) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << serializeTurtle(graph, includeInferred);
}

}  // namespace agriont
