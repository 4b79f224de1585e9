#include <doctest.h>

#include <random>

#include "agriont/schema.hpp"
#include "agriont/turtle.hpp"
#include "agriont/vocab.hpp"
#include "support/oracles.hpp"

using namespace agriont;
using namespace agriont::testing;

TEST_CASE("empty document parses to an empty graph") {
  Graph g = parseTurtle("");
  CHECK(g.empty());
  CHECK(parseTurtle("   \n # just a comment\n").empty());
}

TEST_CASE("single statement") {
  Graph g = parseTurtle("@prefix ex: <http://e/> . ex:a ex:p ex:b .");
  CHECK(g.size() == 1);
  CHECK(g.contains(Triple(Term(Iri("http://e/a")), Iri("http://e/p"),
                          Term(Iri("http://e/b")))));
}

TEST_CASE("predicate and object lists, 'a' keyword") {
  Graph g = parseTurtle(
      "@prefix ex: <http://e/> .\n"
      "ex:s a ex:C ;\n"
      "     ex:p ex:o1 , ex:o2 ;\n"
      "     ex:q \"text\" .\n");
  CHECK(g.size() == 4);
  CHECK(g.contains(
      Triple(Term(Iri("http://e/s")), vocab::rdfType, Term(Iri("http://e/C")))));
  CHECK(g.contains(Triple(Term(Iri("http://e/s")), Iri("http://e/p"),
                          Term(Iri("http://e/o2")))));
}

TEST_CASE("literal forms") {
  Graph g = parseTurtle(
      "@prefix ex: <http://e/> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      "ex:s ex:str \"hi\" ;\n"
      "     ex:lang \"bonjour\"@fr ;\n"
      "     ex:typed \"5\"^^xsd:integer ;\n"
      "     ex:int 42 ;\n"
      "     ex:neg -7 ;\n"
      "     ex:dec 3.25 ;\n"
      "     ex:esc \"a\\\"b\\nc\" .\n");
  auto val = [&](const char* p) {
    auto m = g.match(Term(Iri("http://e/s")), Iri(std::string("http://e/") + p),
                     {});
    REQUIRE(m.size() == 1);
    return m[0].object.literal();
  };
  CHECK(val("str").datatype().value() == xsd::string_);
  CHECK(*val("lang").language() == "fr");
  CHECK(val("typed").datatype().value() == xsd::integer_);
  CHECK(val("int").datatype().value() == xsd::integer_);
  CHECK(val("neg").lexical() == "-7");
  CHECK(val("dec").datatype().value() == xsd::decimal_);
  CHECK(val("esc").lexical() == "a\"b\nc");
}

TEST_CASE("blank node subjects and objects") {
  Graph g = parseTurtle(
      "@prefix ex: <http://e/> .\n"
      "_:x ex:p _:y .\n"
      "_:x ex:q ex:o .\n");
  CHECK(g.size() == 2);
  CHECK(g.contains(Triple(Term(BlankNode{"x"}), Iri("http://e/p"),
                          Term(BlankNode{"y"}))));
}

TEST_CASE("parse errors carry line and column") {
  try {
    parseTurtle("@prefix ex: <http://e/> .\nex:a ex:p ex:b");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  CHECK_THROWS_AS(parseTurtle("nope:a nope:p nope:b ."), ParseError);
  CHECK_THROWS_AS(
      parseTurtle("@prefix ex: <http://e/> . ex:a ex:p \"unterminated ."),
      ParseError);
  CHECK_THROWS_AS(parseTurtle("@prefix ex: <http://e/ "), ParseError);
}

TEST_CASE("truncated documents fail inside the truncated region") {
  std::string doc = "@prefix ex: <http://e/> .\nex:a ex:p ex:b .\n";
  Graph full = parseTurtle(doc);
  // Cutting inside the statement body must not silently succeed with the
  // full triple.
  for (std::size_t cut = doc.find("ex:a") + 1; cut < doc.size() - 2; ++cut) {
    std::string prefix = doc.substr(0, cut);
    try {
      Graph g = parseTurtle(prefix);
      CHECK(g.size() < full.size());
    } catch (const ParseError& e) {
      CHECK(e.line >= 1);
      CHECK(e.line <= 2);
    }
  }
}

TEST_CASE("serializing a statement-free graph emits only prefixes") {
  Graph g;
  g.prefixes().bind("ex", Iri("http://e/"));
  CHECK(serializeTurtle(g) == "@prefix ex: <http://e/> .\n");
}

TEST_CASE("serializer is deterministic") {
  std::mt19937 rng(11);
  RandomGraphOptions opts;
  opts.tripleCount = 120;
  opts.blankPool = 6;
  opts.literalPool = 15;
  Graph g = randomGraph(rng, opts);

  std::string once = serializeTurtle(g);
  std::string twice = serializeTurtle(g);
  CHECK(once == twice);

  // Same triple set inserted in reverse order serializes identically.
  Graph reversed;
  reversed.prefixes().mergeFrom(g.prefixes());
  auto ts = g.triples();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) reversed.insert(*it);
  CHECK(serializeTurtle(reversed) == once);
}

TEST_CASE("round trip on random graphs") {
  std::mt19937 rng(23);
  for (int i = 0; i < 25; ++i) {
    RandomGraphOptions opts;
    opts.tripleCount = 20 + static_cast<std::size_t>(i) * 10;
    opts.blankPool = (i % 3 == 0) ? 0 : 5;
    opts.literalPool = 12;
    Graph g = randomGraph(rng, opts);
    Graph back = parseTurtle(serializeTurtle(g));
    CHECK(graphsIsomorphic(g, back));
  }
}

TEST_CASE("round trip on the core schema") {
  Graph schema = buildCoreSchema();
  Graph back = parseTurtle(serializeTurtle(schema));
  CHECK(graphsIsomorphic(schema, back));
  CHECK(back.size() == schema.size());
}

TEST_CASE("serializer can exclude inferred triples") {
  Graph g;
  g.prefixes().bind("ex", Iri("http://e/"));
  g.insert(Triple(Term(Iri("http://e/a")), Iri("http://e/p"),
                  Term(Iri("http://e/b"))));
  g.insert(Triple(Term(Iri("http://e/a")), Iri("http://e/q"),
                  Term(Iri("http://e/c"))),
           /*inferred=*/true);
  Graph withInferred = parseTurtle(serializeTurtle(g, true));
  Graph withoutInferred = parseTurtle(serializeTurtle(g, false));
  CHECK(withInferred.size() == 2);
  CHECK(withoutInferred.size() == 1);
}

TEST_CASE("file IO round trip and missing-file error") {
  Graph g = parseTurtle("@prefix ex: <http://e/> . ex:a ex:p 5 .");
  std::string path = "/tmp/agriont_turtle_test.ttl";
  saveTurtleFile(g, path);
  Graph back = loadTurtleFile(path);
  CHECK(graphsIsomorphic(g, back));
  CHECK_THROWS_AS(loadTurtleFile("/tmp/agriont_no_such_file.ttl"), IoError);
}
