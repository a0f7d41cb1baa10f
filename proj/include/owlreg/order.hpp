#ifndef OWLREG_ORDER_HPP_
#define OWLREG_ORDER_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "owlreg/abstraction.hpp"
#include "owlreg/regularity.hpp"

namespace owlreg {

enum class EmbedMode {
    AnyNode,  // small's root may land on any node of big
    Rooted,   // roots must correspond
};

// Injective, label- and edge-tag-preserving embedding of `small` into `big`.
// Bottom-up over node pairs with one bipartite matching of children per pair.
bool tree_embeds(const AxiomTree& small, const AxiomTree& big,
                 EmbedMode mode = EmbedMode::AnyNode);

// t <= t2 under internal-structure containment with the ground-generalisation
// fallback for equal internal structures.
bool axiom_contains(const AxiomTree& t, const AxiomTree& t2,
                    EmbedMode mode = EmbedMode::AnyNode);

// Multiset inclusion of G-lifted frames.
bool frame_contains(const StructureMultiset& c, const StructureMultiset& c2);

using Deadline = std::chrono::steady_clock::time_point;

struct PosetOptions {
    EmbedMode mode = EmbedMode::AnyNode;
    std::optional<Deadline> deadline;
};

struct StructurePoset {
    std::vector<ModellingStructure> elements;
    std::vector<std::string> encodings;
    // Reflexive containment relation, relation[i][j] == (i <= j).
    std::vector<std::vector<bool>> relation;
    // Covering pairs (smaller, larger), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
    std::size_t depth = 0;          // nodes on the longest chain
    std::size_t max_branching = 0;  // most covering successors of one element

    std::size_t size() const { return elements.size(); }
};

// Elements must be pairwise distinct and all of one kind (trees or
// multisets). Returns nullopt if the deadline passes. Throws
// std::invalid_argument on mixed or duplicate elements and std::logic_error if
// the computed relation is not antisymmetric.
std::optional<StructurePoset> build_poset(std::vector<ModellingStructure> structures,
                                          const PosetOptions& options = {});

// Covering pairs of a strict partial order given as an adjacency matrix.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    const std::vector<std::vector<bool>>& strict);

// Fills hasse_edges, depth and max_branching from relation.
void finish_poset(StructurePoset& poset);

}  // namespace owlreg

#endif  // OWLREG_ORDER_HPP_
