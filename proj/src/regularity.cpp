#include "owlreg/regularity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace owlreg {

namespace {

void sort_partition(std::vector<Regularity>& partition) {
    std::sort(partition.begin(), partition.end(), [](const Regularity& a, const Regularity& b) {
        if (a.size() != b.size()) {
            return a.size() > b.size();
        }
        return a.encoding < b.encoding;
    });
}

template <typename Structure>
std::vector<Regularity> group(std::vector<Structure> structures) {
    std::vector<Regularity> out;
    std::unordered_map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < structures.size(); ++i) {
        std::string key = structure_encoding(structures[i]);
        const auto [it, inserted] = slot.try_emplace(key, out.size());
        if (inserted) {
            out.push_back(Regularity{std::move(structures[i]), std::move(key), {}});
        }
        out[it->second].members.push_back(i);
    }
    sort_partition(out);
    return out;
}

}  // namespace

std::string structure_encoding(const ModellingStructure& s) {
    if (const auto* tree = std::get_if<AxiomTree>(&s)) {
        return canonical_encoding(*tree);
    }
    return std::get<StructureMultiset>(s).encoding();
}

std::vector<Regularity> partition_trees(std::span<const AxiomTree> trees, Abstraction a) {
    std::vector<ModellingStructure> structures;
    structures.reserve(trees.size());
    for (const AxiomTree& t : trees) {
        structures.emplace_back(apply(a, t));
    }
    return group(std::move(structures));
}

std::vector<Regularity> partition_axioms(const Document& doc, Abstraction a) {
    return partition_trees(doc.axioms, a);
}

std::vector<Regularity> partition_frames(std::span<const ClassFrame> frames) {
    std::vector<ModellingStructure> structures;
    structures.reserve(frames.size());
    for (const ClassFrame& f : frames) {
        structures.emplace_back(f.structure);
    }
    return group(std::move(structures));
}

std::size_t coverage_count(std::span<const Regularity> partition, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("coverage threshold must lie in (0, 1]");
    }
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    for (const Regularity& r : partition) {
        sizes.push_back(r.size());
        total += r.size();
    }
    if (total == 0) {
        return 0;
    }
    std::sort(sizes.rbegin(), sizes.rend());
    // Small slack so that e.g. 0.9 * 10 is reached by 9.
    const double needed = threshold * static_cast<double>(total) - 1e-9;
    std::size_t covered = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        covered += sizes[k];
        if (static_cast<double>(covered) >= needed) {
            return k + 1;
        }
    }
    return sizes.size();
}

std::vector<std::vector<bool>> threshold_table_for_sizes(std::span<const std::size_t> sizes,
                                                         std::span<const std::size_t> min_counts,
                                                         std::span<const std::size_t> min_sizes) {
    std::vector<std::vector<bool>> table(min_counts.size(),
                                         std::vector<bool>(min_sizes.size(), false));
    for (std::size_t j = 0; j < min_sizes.size(); ++j) {
        const auto big = static_cast<std::size_t>(std::count_if(
            sizes.begin(), sizes.end(), [&](std::size_t s) { return s >= min_sizes[j]; }));
        for (std::size_t i = 0; i < min_counts.size(); ++i) {
            table[i][j] = big > 0 && big >= min_counts[i];
        }
    }
    return table;
}

std::vector<std::vector<bool>> threshold_table(std::span<const Regularity> partition,
                                               std::span<const std::size_t> min_counts,
                                               std::span<const std::size_t> min_sizes) {
    std::vector<std::size_t> sizes;
    sizes.reserve(partition.size());
    for (const Regularity& r : partition) {
        sizes.push_back(r.size());
    }
    return threshold_table_for_sizes(sizes, min_counts, min_sizes);
}

std::vector<ModellingStructure> top_structures(std::span<const Regularity> partition,
                                               std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("top_structures requires k >= 1");
    }
    std::vector<ModellingStructure> out;
    for (std::size_t i = 0; i < partition.size() && i < k; ++i) {
        out.push_back(partition[i].structure);
    }
    return out;
}

std::vector<CommonStructureRow> aggregate_common(std::span<const OntologyTops> tops) {
    std::map<std::string, CommonStructureRow> rows;
    for (const OntologyTops& o : tops) {
        std::set<std::string> seen;
        for (const ModellingStructure& s : o.structures) {
            std::string key = structure_encoding(s);
            if (!seen.insert(key).second) {
                continue;
            }
            auto it = rows.find(key);
            if (it == rows.end()) {
                it = rows.emplace(key, CommonStructureRow{key, s, {}, 0}).first;
            }
            ++it->second.per_category[static_cast<std::size_t>(o.category)];
            ++it->second.total;
        }
    }
    std::vector<CommonStructureRow> out;
    out.reserve(rows.size());
    for (auto& [key, row] : rows) {
        out.push_back(std::move(row));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CommonStructureRow& a, const CommonStructureRow& b) {
                         return a.total > b.total;
                     });
    return out;
}

}  // namespace owlreg
