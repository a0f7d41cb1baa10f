#include "owlreg/abstraction.hpp"

#include <stdexcept>
#include <utility>

namespace owlreg {

std::string_view abstraction_name(Abstraction a) { return a == Abstraction::Ground ? "G" : "I"; }

std::optional<Abstraction> abstraction_from_name(std::string_view name) {
    if (name == "G" || name == "g") {
        return Abstraction::Ground;
    }
    if (name == "I" || name == "i") {
        return Abstraction::Internal;
    }
    return std::nullopt;
}

AxiomTree ground_generalisation(const AxiomTree& t) {
    if (t.is_leaf()) {
        return t.label().is_leaf() ? make_placeholder() : t;
    }
    std::vector<Branch> children;
    children.reserve(t.children().size());
    for (const Branch& b : t.children()) {
        children.push_back(Branch{b.tag, ground_generalisation(b.tree)});
    }
    return AxiomTree(t.label(), std::move(children));
}

AxiomTree internal_tree_structure(const AxiomTree& t) {
    if (t.is_leaf()) {
        throw std::invalid_argument("internal tree structure of a single leaf is empty");
    }
    std::vector<Branch> children;
    for (const Branch& b : t.children()) {
        if (!b.tree.is_leaf()) {
            children.push_back(Branch{b.tag, internal_tree_structure(b.tree)});
        }
    }
    return AxiomTree(t.label(), std::move(children));
}

AxiomTree apply(Abstraction a, const AxiomTree& t) {
    return a == Abstraction::Ground ? ground_generalisation(t) : internal_tree_structure(t);
}

void StructureMultiset::add(AxiomTree structure, std::size_t times) {
    if (times == 0) {
        return;
    }
    std::string key = canonical_encoding(structure);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(std::move(key), Entry{std::move(structure), times});
    } else {
        it->second.multiplicity += times;
    }
    total_ += times;
}

std::size_t StructureMultiset::multiplicity(const std::string& encoding) const {
    const auto it = entries_.find(encoding);
    return it == entries_.end() ? 0 : it->second.multiplicity;
}

std::string StructureMultiset::encoding() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, entry] : entries_) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += key;
        out += '^';
        out += std::to_string(entry.multiplicity);
    }
    out += '}';
    return out;
}

StructureMultiset lift(std::span<const AxiomTree> trees, Abstraction a) {
    StructureMultiset m;
    for (const AxiomTree& t : trees) {
        m.add(apply(a, t));
    }
    return m;
}

}  // namespace owlreg
