#ifndef OWLREG_ABSTRACTION_HPP_
#define OWLREG_ABSTRACTION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "owlreg/ast.hpp"

namespace owlreg {

enum class Abstraction {
    Ground,    // G: every leaf label becomes `*`
    Internal,  // I: leaves and their branches are removed
};

std::string_view abstraction_name(Abstraction a);
std::optional<Abstraction> abstraction_from_name(std::string_view name);

AxiomTree ground_generalisation(const AxiomTree& t);

// Throws std::invalid_argument if t is a single leaf (the image would be empty).
AxiomTree internal_tree_structure(const AxiomTree& t);

AxiomTree apply(Abstraction a, const AxiomTree& t);

// Multiset of abstracted trees keyed by canonical encoding.
class StructureMultiset {
public:
    struct Entry {
        AxiomTree structure;
        std::size_t multiplicity;
    };

    void add(AxiomTree structure, std::size_t times = 1);

    const std::map<std::string, Entry>& entries() const { return entries_; }
    std::size_t multiplicity(const std::string& encoding) const;
    std::size_t total() const { return total_; }
    bool empty() const { return entries_.empty(); }

    // `{enc^m,...}` in encoding order; the identity of the multiset.
    std::string encoding() const;

    friend bool operator==(const StructureMultiset& a, const StructureMultiset& b) {
        return a.encoding() == b.encoding();
    }

private:
    std::map<std::string, Entry> entries_;
    std::size_t total_ = 0;
};

StructureMultiset lift(std::span<const AxiomTree> trees, Abstraction a);

}  // namespace owlreg

#endif  // OWLREG_ABSTRACTION_HPP_
