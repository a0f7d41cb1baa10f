#ifndef OWLREG_REGULARITY_HPP_
#define OWLREG_REGULARITY_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "owlreg/abstraction.hpp"
#include "owlreg/frames.hpp"
#include "owlreg/parser.hpp"
#include "owlreg/profile.hpp"

namespace owlreg {

// An abstracted axiom tree, or the G-lifted multiset of a class frame.
using ModellingStructure = std::variant<AxiomTree, StructureMultiset>;

std::string structure_encoding(const ModellingStructure& s);

// Equivalence class of axioms (or frames) sharing one modelling structure.
struct Regularity {
    ModellingStructure structure;
    std::string encoding;
    std::vector<std::size_t> members;  // axiom or frame indices, ascending

    std::size_t size() const { return members.size(); }
};

// Both partition functions order regularities by size descending, then
// encoding ascending.
std::vector<Regularity> partition_trees(std::span<const AxiomTree> trees, Abstraction a);
std::vector<Regularity> partition_axioms(const Document& doc, Abstraction a);
std::vector<Regularity> partition_frames(std::span<const ClassFrame> frames);

// Smallest k such that the k largest regularities hold at least
// threshold * total members. Requires 0 < threshold <= 1.
std::size_t coverage_count(std::span<const Regularity> partition, double threshold);

// result[i][j]: at least min_counts[i] regularities have size >= min_sizes[j].
std::vector<std::vector<bool>> threshold_table(std::span<const Regularity> partition,
                                               std::span<const std::size_t> min_counts,
                                               std::span<const std::size_t> min_sizes);
std::vector<std::vector<bool>> threshold_table_for_sizes(std::span<const std::size_t> sizes,
                                                         std::span<const std::size_t> min_counts,
                                                         std::span<const std::size_t> min_sizes);

// Structures of the k largest regularities; expects a sorted partition.
std::vector<ModellingStructure> top_structures(std::span<const Regularity> partition,
                                               std::size_t k);

struct OntologyTops {
    std::string id;
    Category category;
    std::vector<ModellingStructure> structures;
};

struct CommonStructureRow {
    std::string encoding;
    ModellingStructure structure;
    std::array<std::size_t, kCategoryCount> per_category{};
    std::size_t total = 0;
};

// Number of ontologies per category whose top structures include each
// structure, ordered by total descending then encoding.
std::vector<CommonStructureRow> aggregate_common(std::span<const OntologyTops> tops);

}  // namespace owlreg

#endif  // OWLREG_REGULARITY_HPP_
