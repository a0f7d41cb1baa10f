#include "doctest.h"

#include "owlreg/frames.hpp"
#include "owlreg/parser.hpp"
#include "support/oracles.hpp"

using namespace owlreg;

TEST_SUITE("frames") {
    TEST_CASE("subjects by axiom kind") {
        const Document doc = parse_document(R"(
Prefix(:=<urn:x#>)
Ontology(
  SubClassOf(:A :B)
  EquivalentClasses(:A :C ObjectSomeValuesFrom(:r :D))
  DisjointClasses(:B ObjectSomeValuesFrom(:r :D) :B)
  DisjointUnion(:E :F :G)
  SubClassOf(ObjectSomeValuesFrom(:r :D) :A)
))");
        using V = std::vector<std::string>;
        CHECK(frame_subjects(doc.axioms[0]) == V{"<urn:x#A>"});
        CHECK(frame_subjects(doc.axioms[1]) == V{"<urn:x#A>", "<urn:x#C>"});
        CHECK(frame_subjects(doc.axioms[2]) == V{"<urn:x#B>"});
        CHECK(frame_subjects(doc.axioms[3]) == V{"<urn:x#E>"});
        CHECK(frame_subjects(doc.axioms[4]).empty());
    }

    TEST_CASE("frames group axioms by subject") {
        const Document doc = parse_document(R"(
Prefix(:=<urn:x#>)
Ontology(
  SubClassOf(:B :X)
  SubClassOf(:A :X)
  SubClassOf(:A ObjectSomeValuesFrom(:r :Y))
  EquivalentClasses(:A :B)
  SubClassOf(ObjectSomeValuesFrom(:r :D) :A)
))");
        const FrameSet fs = extract_frames(doc);
        REQUIRE(fs.frames.size() == 2);
        CHECK(fs.frameless == 1);
        CHECK(fs.frames[0].subject == "<urn:x#A>");
        CHECK(fs.frames[0].member_axioms == std::vector<std::size_t>{1, 2, 3});
        CHECK(fs.frames[0].structure.total() == 3);
        CHECK(fs.frames[1].subject == "<urn:x#B>");
        CHECK(fs.frames[1].member_axioms == std::vector<std::size_t>{0, 3});
        CHECK(fs.frames[1].structure.encoding() ==
              "{EquivalentClasses(op=*,op=*)^1,SubClassOf(sub=*,super=*)^1}");
    }

    TEST_CASE("empty document has no frames") {
        const FrameSet fs = extract_frames(Document{});
        CHECK(fs.frames.empty());
        CHECK(fs.frameless == 0);
    }

    TEST_CASE("property: every axiom is in a frame or frameless") {
        testing::TreeGen gen(5);
        for (int round = 0; round < 200; ++round) {
            const Document doc = gen.document(20, 12);
            const FrameSet fs = extract_frames(doc);
            std::vector<bool> covered(doc.axioms.size(), false);
            for (const ClassFrame& f : fs.frames) {
                CHECK(f.structure.total() == f.member_axioms.size());
                for (std::size_t i : f.member_axioms) {
                    covered[i] = true;
                    const auto subjects = frame_subjects(doc.axioms[i]);
                    CHECK(std::find(subjects.begin(), subjects.end(), f.subject) != subjects.end());
                }
            }
            std::size_t uncovered = 0;
            for (std::size_t i = 0; i < covered.size(); ++i) {
                if (!covered[i]) {
                    ++uncovered;
                    CHECK(frame_subjects(doc.axioms[i]).empty());
                }
            }
            CHECK(uncovered == fs.frameless);
        }
    }
}
