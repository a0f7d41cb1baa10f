#include "owlreg/ast.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace owlreg {

namespace {

constexpr std::array<std::string_view, kConstructorCount> kNames = {
    "SubClassOf",
    "EquivalentClasses",
    "DisjointClasses",
    "DisjointUnion",
    "ObjectIntersectionOf",
    "ObjectUnionOf",
    "ObjectComplementOf",
    "ObjectOneOf",
    "ObjectSomeValuesFrom",
    "ObjectAllValuesFrom",
    "ObjectHasValue",
    "ObjectHasSelf",
    "ObjectMinCardinality",
    "ObjectMaxCardinality",
    "ObjectExactCardinality",
    "DataSomeValuesFrom",
    "DataAllValuesFrom",
    "DataHasValue",
    "DataMinCardinality",
    "DataMaxCardinality",
    "DataExactCardinality",
};

constexpr std::array<std::string_view, 10> kTagNames = {
    "sub", "super", "lhs", "op", "prop", "filler", "ind", "lit", "range", "card"};

bool is_object_cardinality(Constructor c) {
    return c == Constructor::ObjectMinCardinality || c == Constructor::ObjectMaxCardinality ||
           c == Constructor::ObjectExactCardinality;
}

bool is_data_cardinality(Constructor c) {
    return c == Constructor::DataMinCardinality || c == Constructor::DataMaxCardinality ||
           c == Constructor::DataExactCardinality;
}

void encode_into(const AxiomTree& t, std::string& out);

std::string encode(const AxiomTree& t) {
    std::string s;
    encode_into(t, s);
    return s;
}

void encode_into(const AxiomTree& t, std::string& out) {
    out += t.label().text();
    if (t.is_leaf()) {
        return;
    }
    std::vector<std::pair<std::string_view, std::string>> parts;
    parts.reserve(t.children().size());
    for (const Branch& b : t.children()) {
        parts.emplace_back(tag_name(b.tag), encode(b.tree));
    }
    std::sort(parts.begin(), parts.end());
    out += '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += parts[i].first;
        out += '=';
        out += parts[i].second;
    }
    out += ')';
}

}  // namespace

std::string_view constructor_name(Constructor c) { return kNames[static_cast<std::size_t>(c)]; }

std::optional<Constructor> constructor_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) {
            return static_cast<Constructor>(i);
        }
    }
    return std::nullopt;
}

bool is_axiom_kind(Constructor c) {
    return c == Constructor::SubClassOf || c == Constructor::EquivalentClasses ||
           c == Constructor::DisjointClasses || c == Constructor::DisjointUnion;
}

bool valid_arity(Constructor c, std::size_t arity) {
    switch (c) {
        case Constructor::SubClassOf:
        case Constructor::ObjectSomeValuesFrom:
        case Constructor::ObjectAllValuesFrom:
        case Constructor::ObjectHasValue:
        case Constructor::DataHasValue:
            return arity == 2;
        case Constructor::EquivalentClasses:
        case Constructor::DisjointClasses:
        case Constructor::ObjectIntersectionOf:
        case Constructor::ObjectUnionOf:
        case Constructor::DataSomeValuesFrom:
        case Constructor::DataAllValuesFrom:
            return arity >= 2;
        case Constructor::DisjointUnion:
            return arity >= 3;
        case Constructor::ObjectComplementOf:
        case Constructor::ObjectHasSelf:
            return arity == 1;
        case Constructor::ObjectOneOf:
            return arity >= 1;
        default:
            return arity == 2 || arity == 3;  // cardinalities
    }
}

std::string_view tag_name(EdgeTag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

EdgeTag edge_label_for(Constructor c, std::size_t position, std::size_t arity) {
    if (!valid_arity(c, arity)) {
        throw std::invalid_argument("invalid arity " + std::to_string(arity) + " for " +
                                    std::string(constructor_name(c)));
    }
    if (position >= arity) {
        throw std::out_of_range("argument position " + std::to_string(position) +
                                " out of range for arity " + std::to_string(arity));
    }
    switch (c) {
        case Constructor::SubClassOf:
            return position == 0 ? EdgeTag::Sub : EdgeTag::Super;
        case Constructor::DisjointUnion:
            return position == 0 ? EdgeTag::Lhs : EdgeTag::Op;
        case Constructor::EquivalentClasses:
        case Constructor::DisjointClasses:
        case Constructor::ObjectIntersectionOf:
        case Constructor::ObjectUnionOf:
        case Constructor::ObjectComplementOf:
        case Constructor::ObjectOneOf:
            return EdgeTag::Op;
        case Constructor::ObjectSomeValuesFrom:
        case Constructor::ObjectAllValuesFrom:
            return position == 0 ? EdgeTag::Prop : EdgeTag::Filler;
        case Constructor::ObjectHasValue:
            return position == 0 ? EdgeTag::Prop : EdgeTag::Ind;
        case Constructor::ObjectHasSelf:
            return EdgeTag::Prop;
        case Constructor::DataHasValue:
            return position == 0 ? EdgeTag::Prop : EdgeTag::Lit;
        case Constructor::DataSomeValuesFrom:
        case Constructor::DataAllValuesFrom:
            return position + 1 == arity ? EdgeTag::Range : EdgeTag::Prop;
        default:
            break;
    }
    if (position == 0) {
        return EdgeTag::Card;
    }
    if (position == 1) {
        return EdgeTag::Prop;
    }
    if (is_object_cardinality(c)) {
        return EdgeTag::Filler;
    }
    if (is_data_cardinality(c)) {
        return EdgeTag::Range;
    }
    throw std::logic_error("unhandled constructor");
}

NodeLabel NodeLabel::of(Constructor c) {
    NodeLabel l;
    l.ctor_ = c;
    return l;
}

NodeLabel NodeLabel::leaf(LeafKind kind, std::string token) {
    NodeLabel l;
    l.leaf_ = true;
    l.kind_ = kind;
    l.token_ = std::move(token);
    return l;
}

NodeLabel NodeLabel::placeholder() { return leaf(LeafKind::Placeholder, "*"); }

std::string_view NodeLabel::text() const {
    return leaf_ ? std::string_view(token_) : constructor_name(ctor_);
}

bool operator==(const NodeLabel& a, const NodeLabel& b) {
    if (a.leaf_ != b.leaf_) {
        return false;
    }
    return a.leaf_ ? a.token_ == b.token_ : a.ctor_ == b.ctor_;
}

AxiomTree::AxiomTree(NodeLabel label) : label_(std::move(label)) {}

AxiomTree::AxiomTree(NodeLabel label, std::vector<Branch> children)
    : label_(std::move(label)), children_(std::move(children)) {
    if (label_.is_leaf() && !children_.empty()) {
        throw std::invalid_argument("leaf node cannot have children");
    }
}

AxiomTree make_node(Constructor c, std::vector<AxiomTree> args) {
    std::vector<Branch> children;
    children.reserve(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        children.push_back(Branch{edge_label_for(c, i, args.size()), std::move(args[i])});
    }
    return AxiomTree(NodeLabel::of(c), std::move(children));
}

AxiomTree make_leaf(LeafKind kind, std::string token) {
    return AxiomTree(NodeLabel::leaf(kind, std::move(token)));
}

AxiomTree make_placeholder() { return AxiomTree(NodeLabel::placeholder()); }

std::string canonical_encoding(const AxiomTree& t) { return encode(t); }

std::size_t node_count(const AxiomTree& t) {
    std::size_t n = 1;
    for (const Branch& b : t.children()) {
        n += node_count(b.tree);
    }
    return n;
}

std::size_t tree_depth(const AxiomTree& t) {
    std::size_t d = 0;
    for (const Branch& b : t.children()) {
        d = std::max(d, 1 + tree_depth(b.tree));
    }
    return d;
}

std::string to_functional_syntax(const AxiomTree& t) {
    std::string out(t.label().text());
    if (t.label().is_leaf()) {
        return out;
    }
    out += '(';
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += to_functional_syntax(t.children()[i].tree);
    }
    out += ')';
    return out;
}

}  // namespace owlreg
