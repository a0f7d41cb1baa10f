#include "owlreg/profile.hpp"

#include <algorithm>

namespace owlreg {

namespace {

bool is_el_expression(const AxiomTree& t) {
    if (t.label().is_leaf()) {
        return true;
    }
    switch (t.label().constructor()) {
        case Constructor::ObjectIntersectionOf:
        case Constructor::ObjectSomeValuesFrom:
        case Constructor::ObjectHasValue:
        case Constructor::ObjectHasSelf:
        case Constructor::DataSomeValuesFrom:
        case Constructor::DataHasValue:
            break;
        case Constructor::ObjectOneOf:
            if (t.children().size() != 1) {
                return false;
            }
            break;
        default:
            return false;
    }
    return std::all_of(t.children().begin(), t.children().end(),
                       [](const Branch& b) { return is_el_expression(b.tree); });
}

}  // namespace

std::string_view category_name(Category c) {
    switch (c) {
        case Category::Atomic:
            return "atomic";
        case Category::ElPlusPlus:
            return "elpp";
        case Category::Rich:
            return "rich";
    }
    return "rich";
}

std::optional<Category> category_from_name(std::string_view name) {
    for (Category c : {Category::Atomic, Category::ElPlusPlus, Category::Rich}) {
        if (category_name(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

bool is_atomic_axiom(const AxiomTree& axiom) {
    if (axiom.label().is_leaf()) {
        return false;
    }
    const Constructor c = axiom.label().constructor();
    if (c != Constructor::SubClassOf && c != Constructor::EquivalentClasses) {
        return false;
    }
    return std::all_of(axiom.children().begin(), axiom.children().end(), [](const Branch& b) {
        return b.tree.label().is_leaf() && b.tree.label().leaf_kind() == LeafKind::Class;
    });
}

bool is_el_axiom(const AxiomTree& axiom) {
    if (axiom.label().is_leaf()) {
        return false;
    }
    const Constructor c = axiom.label().constructor();
    if (c != Constructor::SubClassOf && c != Constructor::EquivalentClasses &&
        c != Constructor::DisjointClasses) {
        return false;
    }
    return std::all_of(axiom.children().begin(), axiom.children().end(),
                       [](const Branch& b) { return is_el_expression(b.tree); });
}

Category classify(const Document& doc) {
    if (std::all_of(doc.axioms.begin(), doc.axioms.end(), is_atomic_axiom)) {
        return Category::Atomic;
    }
    if (std::all_of(doc.axioms.begin(), doc.axioms.end(), is_el_axiom)) {
        return Category::ElPlusPlus;
    }
    return Category::Rich;
}

}  // namespace owlreg
