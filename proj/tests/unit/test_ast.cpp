#include "doctest.h"

#include <stdexcept>

#include "owlreg/abstraction.hpp"
#include "owlreg/ast.hpp"
#include "support/oracles.hpp"

using namespace owlreg;

namespace {

AxiomTree cls(const char* name) { return make_leaf(LeafKind::Class, name); }
AxiomTree prop(const char* name) { return make_leaf(LeafKind::ObjectProperty, name); }

AxiomTree node(Constructor c, std::vector<AxiomTree> args) { return make_node(c, std::move(args)); }

}  // namespace

TEST_SUITE("ast") {
    TEST_CASE("edge labels follow constructor and position") {
        CHECK(edge_label_for(Constructor::SubClassOf, 0, 2) == EdgeTag::Sub);
        CHECK(edge_label_for(Constructor::SubClassOf, 1, 2) == EdgeTag::Super);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(edge_label_for(Constructor::ObjectIntersectionOf, k, 4) == EdgeTag::Op);
            CHECK(edge_label_for(Constructor::EquivalentClasses, k, 4) == EdgeTag::Op);
        }
        CHECK(edge_label_for(Constructor::DisjointUnion, 0, 3) == EdgeTag::Lhs);
        CHECK(edge_label_for(Constructor::DisjointUnion, 2, 3) == EdgeTag::Op);
        CHECK(edge_label_for(Constructor::ObjectSomeValuesFrom, 0, 2) == EdgeTag::Prop);
        CHECK(edge_label_for(Constructor::ObjectAllValuesFrom, 1, 2) == EdgeTag::Filler);
        CHECK(edge_label_for(Constructor::ObjectHasValue, 1, 2) == EdgeTag::Ind);
        CHECK(edge_label_for(Constructor::ObjectHasSelf, 0, 1) == EdgeTag::Prop);
        CHECK(edge_label_for(Constructor::DataHasValue, 1, 2) == EdgeTag::Lit);
        CHECK(edge_label_for(Constructor::DataSomeValuesFrom, 1, 2) == EdgeTag::Range);
        // Three leaf arguments of OExactCardinality(*,*,*).
        CHECK(edge_label_for(Constructor::ObjectExactCardinality, 0, 3) == EdgeTag::Card);
        CHECK(edge_label_for(Constructor::ObjectExactCardinality, 1, 3) == EdgeTag::Prop);
        CHECK(edge_label_for(Constructor::ObjectExactCardinality, 2, 3) == EdgeTag::Filler);
        CHECK(edge_label_for(Constructor::DataMinCardinality, 2, 3) == EdgeTag::Range);
    }

    TEST_CASE("edge labels reject bad positions and arities") {
        CHECK_THROWS_AS(edge_label_for(Constructor::SubClassOf, 2, 2), std::out_of_range);
        CHECK_THROWS_AS(edge_label_for(Constructor::SubClassOf, 0, 3), std::invalid_argument);
        CHECK_THROWS_AS(edge_label_for(Constructor::ObjectHasSelf, 0, 2), std::invalid_argument);
    }

    TEST_CASE("constructor names round trip") {
        for (std::size_t i = 0; i < kConstructorCount; ++i) {
            const auto c = static_cast<Constructor>(i);
            CHECK(constructor_from_name(constructor_name(c)) == c);
        }
        CHECK_FALSE(constructor_from_name("ObjectInverseOf").has_value());
    }

    TEST_CASE("canonical encoding ignores order of same-tag children") {
        const auto ab = node(Constructor::ObjectIntersectionOf, {cls("A"), cls("B")});
        const auto ba = node(Constructor::ObjectIntersectionOf, {cls("B"), cls("A")});
        CHECK(canonical_encoding(ab) == canonical_encoding(ba));

        const auto sub_ab = node(Constructor::SubClassOf, {cls("A"), cls("B")});
        const auto sub_ba = node(Constructor::SubClassOf, {cls("B"), cls("A")});
        CHECK(canonical_encoding(sub_ab) != canonical_encoding(sub_ba));
    }

    TEST_CASE("canonical encoding of a ground existential") {
        const auto t = node(Constructor::SubClassOf,
                            {make_placeholder(),
                             node(Constructor::ObjectSomeValuesFrom,
                                  {make_placeholder(), make_placeholder()})});
        CHECK(canonical_encoding(t) == "SubClassOf(sub=*,super=ObjectSomeValuesFrom(filler=*,prop=*))");
    }

    TEST_CASE("node count and depth") {
        const auto atomic = node(Constructor::SubClassOf, {make_placeholder(), make_placeholder()});
        CHECK(node_count(atomic) == 3);
        CHECK(tree_depth(atomic) == 1);
        CHECK(node_count(make_placeholder()) == 1);
        CHECK(tree_depth(make_placeholder()) == 0);

        const auto ex = node(Constructor::SubClassOf,
                             {cls("A"), node(Constructor::ObjectSomeValuesFrom, {prop("r"), cls("B")})});
        CHECK(tree_depth(ex) == 2);

        // * = * and (some *.(* and (some *.*)))
        const auto inner = node(Constructor::ObjectIntersectionOf,
                                {cls("C"), node(Constructor::ObjectSomeValuesFrom, {prop("p"), cls("T")})});
        const auto chiro = node(
            Constructor::EquivalentClasses,
            {cls("P"), node(Constructor::ObjectIntersectionOf,
                            {cls("Q"), node(Constructor::ObjectSomeValuesFrom, {prop("i"), inner})})});
        CHECK(node_count(chiro) == 11);
        CHECK(tree_depth(chiro) == 5);
    }

    TEST_CASE("leaf nodes cannot carry children") {
        CHECK_THROWS_AS(AxiomTree(NodeLabel::placeholder(), {Branch{EdgeTag::Op, make_placeholder()}}),
                        std::invalid_argument);
    }

    TEST_CASE("property: encoding equality agrees with brute-force tree equality") {
        testing::TreeGen gen(1234);
        for (int round = 0; round < 400; ++round) {
            const AxiomTree a = gen.bounded_axiom(10);
            const AxiomTree b = gen.uniform(0, 2) == 0 ? a : gen.bounded_axiom(10);
            const AxiomTree ga = ground_generalisation(a);
            const AxiomTree gb = ground_generalisation(b);
            CHECK(same_tree(a, b) == testing::brute_equal(a, b));
            CHECK(same_tree(ga, gb) == testing::brute_equal(ga, gb));
        }
    }

    TEST_CASE("property: size and depth recurrences") {
        testing::TreeGen gen(99);
        for (int round = 0; round < 200; ++round) {
            const AxiomTree t = gen.bounded_axiom(14);
            std::size_t sum = 1;
            std::size_t deepest = 0;
            for (const Branch& b : t.children()) {
                sum += node_count(b.tree);
                deepest = std::max(deepest, tree_depth(b.tree) + 1);
            }
            CHECK(node_count(t) == sum);
            CHECK(tree_depth(t) == deepest);
        }
    }
}
