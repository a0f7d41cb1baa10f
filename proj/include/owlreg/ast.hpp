#ifndef OWLREG_AST_HPP_
#define OWLREG_AST_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace owlreg {

// Constructor vocabulary of class-expression axioms. The first four are the
// axiom kinds; everything else builds class expressions.
enum class Constructor : std::uint8_t {
    SubClassOf,
    EquivalentClasses,
    DisjointClasses,
    DisjointUnion,
    ObjectIntersectionOf,
    ObjectUnionOf,
    ObjectComplementOf,
    ObjectOneOf,
    ObjectSomeValuesFrom,
    ObjectAllValuesFrom,
    ObjectHasValue,
    ObjectHasSelf,
    ObjectMinCardinality,
    ObjectMaxCardinality,
    ObjectExactCardinality,
    DataSomeValuesFrom,
    DataAllValuesFrom,
    DataHasValue,
    DataMinCardinality,
    DataMaxCardinality,
    DataExactCardinality,
};

inline constexpr std::size_t kConstructorCount = 21;

std::string_view constructor_name(Constructor c);
std::optional<Constructor> constructor_from_name(std::string_view name);
bool is_axiom_kind(Constructor c);
bool valid_arity(Constructor c, std::size_t arity);

enum class LeafKind : std::uint8_t {
    Class,
    ObjectProperty,
    DataProperty,
    Individual,
    Datatype,
    Literal,
    Cardinality,
    Placeholder,
};

// Role of a child below its parent constructor.
enum class EdgeTag : std::uint8_t { Sub, Super, Lhs, Op, Prop, Filler, Ind, Lit, Range, Card };

std::string_view tag_name(EdgeTag tag);

// Labelling function: tag of the argument at `position` of a constructor
// applied to `arity` arguments. Throws std::out_of_range when position >=
// arity and std::invalid_argument when the arity is not valid for c.
EdgeTag edge_label_for(Constructor c, std::size_t position, std::size_t arity);

class NodeLabel {
public:
    static NodeLabel of(Constructor c);
    static NodeLabel leaf(LeafKind kind, std::string token);
    static NodeLabel placeholder();

    bool is_leaf() const { return leaf_; }
    bool is_placeholder() const { return leaf_ && kind_ == LeafKind::Placeholder; }
    // Only meaningful for constructor labels.
    Constructor constructor() const { return ctor_; }
    LeafKind leaf_kind() const { return kind_; }
    // Constructor name or leaf token.
    std::string_view text() const;

    // Leaf kinds do not take part in equality.
    friend bool operator==(const NodeLabel& a, const NodeLabel& b);

private:
    NodeLabel() = default;

    bool leaf_ = false;
    Constructor ctor_ = Constructor::SubClassOf;
    LeafKind kind_ = LeafKind::Placeholder;
    std::string token_;
};

struct Branch;

// Rooted, edge-labelled tree of one axiom. Children are semantically
// unordered; the stored order is the source argument order and is only used
// when printing back to functional syntax.
class AxiomTree {
public:
    explicit AxiomTree(NodeLabel label);
    AxiomTree(NodeLabel label, std::vector<Branch> children);

    const NodeLabel& label() const { return label_; }
    const std::vector<Branch>& children() const { return children_; }
    bool is_leaf() const { return children_.empty(); }

private:
    NodeLabel label_;
    std::vector<Branch> children_;
};

struct Branch {
    EdgeTag tag;
    AxiomTree tree;
};

// Builds a constructor node, tagging the arguments with edge_label_for.
AxiomTree make_node(Constructor c, std::vector<AxiomTree> args);
AxiomTree make_leaf(LeafKind kind, std::string token);
AxiomTree make_placeholder();

// leaf -> token; node -> Name(tag=child,...) with children sorted by
// (tag, child encoding). Equal strings iff equal unordered trees.
std::string canonical_encoding(const AxiomTree& t);

std::size_t node_count(const AxiomTree& t);
std::size_t tree_depth(const AxiomTree& t);

// Functional-style syntax with children in stored order.
std::string to_functional_syntax(const AxiomTree& t);

inline bool same_tree(const AxiomTree& a, const AxiomTree& b) {
    return canonical_encoding(a) == canonical_encoding(b);
}

}  // namespace owlreg

#endif  // OWLREG_AST_HPP_
