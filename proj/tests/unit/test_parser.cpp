#include "doctest.h"

#include "owlreg/parser.hpp"
#include "support/oracles.hpp"

using namespace owlreg;

TEST_SUITE("parser") {
    TEST_CASE("single subclass axiom") {
        const Document doc = parse_document(
            "Prefix(:=<http://x.org/#>)\nOntology(SubClassOf(:A :B))");
        REQUIRE(doc.axioms.size() == 1);
        const AxiomTree& t = doc.axioms[0];
        CHECK(t.label().text() == "SubClassOf");
        REQUIRE(t.children().size() == 2);
        CHECK(t.children()[0].tag == EdgeTag::Sub);
        CHECK(t.children()[0].tree.label().text() == "<http://x.org/#A>");
        CHECK(t.children()[0].tree.label().leaf_kind() == LeafKind::Class);
        CHECK(t.children()[1].tree.label().text() == "<http://x.org/#B>");
        CHECK(doc.skipped == 0);
    }

    TEST_CASE("annotations are stripped") {
        const Document plain = parse_document(
            "Prefix(:=<http://x.org/#>) Ontology(SubClassOf(:A :B))");
        const Document annotated = parse_document(
            "Prefix(:=<http://x.org/#>) Ontology(SubClassOf(Annotation(rdfs:comment \"x\") :A :B))");
        REQUIRE(annotated.axioms.size() == 1);
        CHECK(canonical_encoding(annotated.axioms[0]) == canonical_encoding(plain.axioms[0]));
    }

    TEST_CASE("unbalanced input reports a position") {
        try {
            parse_document("Prefix(:=<http://x.org/#>)\nOntology(SubClassOf(:A )");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() > 0);
        }
    }

    TEST_CASE("unknown prefix names the prefix") {
        try {
            parse_document("Ontology(SubClassOf(foo:A owl:Thing))");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("foo") != std::string::npos);
        }
    }

    TEST_CASE("other axiom kinds are counted as skipped") {
        const Document doc = parse_document(R"(
Prefix(:=<http://x.org/#>)
Ontology(<http://x.org/o>
  Import(<http://x.org/other>)
  Annotation(rdfs:label "ontology")
  Declaration(Class(:A))
  ObjectPropertyDomain(:r :A)
  ClassAssertion(:A :a)
  AnnotationAssertion(rdfs:label :A "A")
  SubClassOf(:A :B)
))");
        CHECK(doc.axioms.size() == 1);
        CHECK(doc.skipped == 4);
        CHECK(doc.total_axioms() == 5);
        CHECK(doc.warnings.empty());
    }

    TEST_CASE("unsupported constructors skip the whole axiom with a warning") {
        const Document doc = parse_document(R"(
Prefix(:=<http://x.org/#>)
Ontology(
  SubClassOf(:A ObjectSomeValuesFrom(ObjectInverseOf(:r) :B))
  SubClassOf(:A DataSomeValuesFrom(:d DatatypeRestriction(xsd:integer xsd:minInclusive "1"^^xsd:integer)))
  SubClassOf(:A)
  SubClassOf(:A :B)
))");
        CHECK(doc.axioms.size() == 1);
        CHECK(doc.skipped == 3);
        REQUIRE(doc.warnings.size() == 3);
        CHECK(doc.warnings[0].find("line 4") != std::string::npos);
    }

    TEST_CASE("data constructs and literals parse as leaves") {
        const Document doc = parse_document(R"(
Prefix(:=<http://x.org/#>)
Ontology(
  EquivalentClasses(:A ObjectIntersectionOf(ObjectSomeValuesFrom(:r :B) DataHasValue(:v "yes \"really\""^^xsd:string)))
  SubClassOf(:A DataSomeValuesFrom(:d xsd:integer))
  SubClassOf(:A DataHasValue(:label "chat"@fr))
  SubClassOf(:A ObjectExactCardinality(05 :r :B))
  SubClassOf(:A ObjectOneOf(:x _:b1))
))");
        REQUIRE(doc.axioms.size() == 5);
        CHECK(canonical_encoding(doc.axioms[3]).find("card=5") != std::string::npos);
        CHECK(canonical_encoding(doc.axioms[0]).find(
                  "lit=\"yes \\\"really\\\"\"^^<http://www.w3.org/2001/XMLSchema#string>") !=
              std::string::npos);
    }

    TEST_CASE("duplicates are kept unless deduplicated") {
        const Document doc = parse_document(
            "Prefix(:=<http://x.org/#>) Ontology(SubClassOf(:A :B) SubClassOf(:A :B) SubClassOf(:B :C))");
        CHECK(doc.axioms.size() == 3);
        CHECK(deduplicate(doc).axioms.size() == 2);
    }

    TEST_CASE("comments are ignored") {
        const Document doc = parse_document(
            "// leading comment\nPrefix(:=<http://x.org/#>)\n# another\nOntology( // trailing\n SubClassOf(:A :B))\n");
        CHECK(doc.axioms.size() == 1);
    }

    TEST_CASE("malformed documents") {
        CHECK_THROWS_AS(parse_document(""), ParseError);
        CHECK_THROWS_AS(parse_document("Ontology() Ontology()"), ParseError);
        CHECK_THROWS_AS(parse_document("Ontology(SubClassOf(<urn:a> <urn:b))"), ParseError);
        CHECK_THROWS_AS(parse_document("Ontology(SubClassOf(<urn:a> \"open))"), ParseError);
        CHECK_THROWS_AS(parse_document("Prefix(x=<urn:x>) Ontology()"), ParseError);
        CHECK_THROWS_AS(parse_file(testing::kFixtures + "/does-not-exist.ofn"), ParseError);
    }

    TEST_CASE("parsing is deterministic") {
        const Document a = parse_file(testing::kFixtures + "/rich.ofn");
        const Document b = parse_file(testing::kFixtures + "/rich.ofn");
        REQUIRE(a.axioms.size() == b.axioms.size());
        for (std::size_t i = 0; i < a.axioms.size(); ++i) {
            CHECK(canonical_encoding(a.axioms[i]) == canonical_encoding(b.axioms[i]));
        }
        CHECK(a.skipped == b.skipped);
    }

    TEST_CASE("property: render then re-parse is stable") {
        testing::TreeGen gen(7);
        for (int round = 0; round < 200; ++round) {
            const Document doc = gen.document(12, 14);
            const Document again = parse_document(render_document(doc.axioms));
            REQUIRE(again.axioms.size() == doc.axioms.size());
            for (std::size_t i = 0; i < doc.axioms.size(); ++i) {
                CHECK(testing::brute_equal(again.axioms[i], doc.axioms[i]));
            }
        }
        const Document rich = parse_file(testing::kFixtures + "/rich_annotated.ofn");
        const Document rich_again = parse_document(render_document(rich.axioms));
        REQUIRE(rich_again.axioms.size() == rich.axioms.size());
        for (std::size_t i = 0; i < rich.axioms.size(); ++i) {
            CHECK(canonical_encoding(rich_again.axioms[i]) == canonical_encoding(rich.axioms[i]));
        }
    }
}
