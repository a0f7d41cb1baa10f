#include "owlreg/order.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace owlreg {

namespace {

// Preorder flattening; every child has a larger index than its parent.
struct FlatTree {
    std::vector<const NodeLabel*> labels;
    std::vector<std::vector<std::pair<EdgeTag, std::size_t>>> kids;

    explicit FlatTree(const AxiomTree& t) { visit(t); }

    std::size_t visit(const AxiomTree& t) {
        const std::size_t id = labels.size();
        labels.push_back(&t.label());
        kids.emplace_back();
        for (const Branch& b : t.children()) {
            const std::size_t child = visit(b.tree);
            kids[id].emplace_back(b.tag, child);
        }
        return id;
    }

    std::size_t size() const { return labels.size(); }
};

// Kuhn's augmenting paths on a small bipartite graph.
class Matcher {
public:
    Matcher(std::size_t left, std::size_t right)
        : adj_(left), owner_(right, kFree), visited_(right, false) {}

    void connect(std::size_t l, std::size_t r) { adj_[l].push_back(r); }

    bool saturates_left() {
        for (std::size_t l = 0; l < adj_.size(); ++l) {
            std::fill(visited_.begin(), visited_.end(), false);
            if (!augment(l)) {
                return false;
            }
        }
        return true;
    }

private:
    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

    bool augment(std::size_t l) {
        for (std::size_t r : adj_[l]) {
            if (visited_[r]) {
                continue;
            }
            visited_[r] = true;
            if (owner_[r] == kFree || augment(owner_[r])) {
                owner_[r] = l;
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> owner_;
    std::vector<bool> visited_;
};

class Bitset {
public:
    explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void merge(const Bitset& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] |= o.words_[w];
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

class DeadlineClock {
public:
    explicit DeadlineClock(std::optional<Deadline> deadline) : deadline_(deadline) {}

    bool expired() {
        if (!deadline_) {
            return false;
        }
        if (ticks_++ % 64 != 0) {
            return false;
        }
        return std::chrono::steady_clock::now() >= *deadline_;
    }

private:
    std::optional<Deadline> deadline_;
    std::size_t ticks_ = 0;
};

// Relation for axiom structures; embedding results of distinct internal
// structures are shared between pairs.
bool fill_axiom_relation(const std::vector<ModellingStructure>& elements,
                         const PosetOptions& options, StructurePoset& poset) {
    const std::size_t n = elements.size();
    std::vector<AxiomTree> ground;
    std::vector<std::size_t> internal_id(n);
    std::vector<AxiomTree> internals;
    std::unordered_map<std::string, std::size_t> internal_slot;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& t = std::get<AxiomTree>(elements[i]);
        ground.push_back(ground_generalisation(t));
        AxiomTree it = internal_tree_structure(t);
        const auto [pos, inserted] =
            internal_slot.try_emplace(canonical_encoding(it), internals.size());
        if (inserted) {
            internals.push_back(std::move(it));
        }
        internal_id[i] = pos->second;
    }
    std::map<std::pair<std::size_t, std::size_t>, bool> internal_embeds;
    DeadlineClock clock(options.deadline);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            if (clock.expired()) {
                return false;
            }
            const std::size_t a = internal_id[i];
            const std::size_t b = internal_id[j];
            bool leq = false;
            if (a != b) {
                auto [slot, fresh] = internal_embeds.try_emplace({a, b}, false);
                if (fresh) {
                    slot->second = tree_embeds(internals[a], internals[b], options.mode);
                }
                leq = slot->second;
            } else {
                leq = tree_embeds(ground[i], ground[j], options.mode);
            }
            poset.relation[i][j] = leq;
        }
    }
    return true;
}

bool fill_frame_relation(const std::vector<ModellingStructure>& elements,
                         const PosetOptions& options, StructurePoset& poset) {
    const std::size_t n = elements.size();
    DeadlineClock clock(options.deadline);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            if (clock.expired()) {
                return false;
            }
            poset.relation[i][j] = frame_contains(std::get<StructureMultiset>(elements[i]),
                                                  std::get<StructureMultiset>(elements[j]));
        }
    }
    return true;
}

}  // namespace

bool tree_embeds(const AxiomTree& small, const AxiomTree& big, EmbedMode mode) {
    const FlatTree s(small);
    const FlatTree b(big);
    if (s.size() > b.size()) {
        return false;
    }
    std::vector<std::vector<char>> match(s.size(), std::vector<char>(b.size(), 0));
    for (std::size_t u = s.size(); u-- > 0;) {
        const auto& ukids = s.kids[u];
        for (std::size_t v = 0; v < b.size(); ++v) {
            if (!(*s.labels[u] == *b.labels[v])) {
                continue;
            }
            const auto& vkids = b.kids[v];
            if (ukids.size() > vkids.size()) {
                continue;
            }
            Matcher m(ukids.size(), vkids.size());
            for (std::size_t x = 0; x < ukids.size(); ++x) {
                for (std::size_t y = 0; y < vkids.size(); ++y) {
                    if (ukids[x].first == vkids[y].first &&
                        match[ukids[x].second][vkids[y].second] != 0) {
                        m.connect(x, y);
                    }
                }
            }
            match[u][v] = m.saturates_left() ? 1 : 0;
        }
    }
    if (mode == EmbedMode::Rooted) {
        return match[0][0] != 0;
    }
    return std::any_of(match[0].begin(), match[0].end(), [](char c) { return c != 0; });
}

bool axiom_contains(const AxiomTree& t, const AxiomTree& t2, EmbedMode mode) {
    const AxiomTree i1 = internal_tree_structure(t);
    const AxiomTree i2 = internal_tree_structure(t2);
    if (canonical_encoding(i1) != canonical_encoding(i2)) {
        return tree_embeds(i1, i2, mode);
    }
    return tree_embeds(ground_generalisation(t), ground_generalisation(t2), mode);
}

bool frame_contains(const StructureMultiset& c, const StructureMultiset& c2) {
    for (const auto& [key, entry] : c.entries()) {
        if (entry.multiplicity > c2.multiplicity(key)) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    const std::vector<std::vector<bool>>& strict) {
    const std::size_t n = strict.size();
    std::vector<Bitset> above(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (strict[i][j]) {
                above[i].set(j);
            }
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        Bitset through(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (strict[i][k]) {
                through.merge(above[k]);
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (strict[i][j] && !through.test(j)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return edges;
}

void finish_poset(StructurePoset& poset) {
    const std::size_t n = poset.relation.size();
    std::vector<std::vector<bool>> strict(n, std::vector<bool>(n, false));
    std::vector<std::size_t> below(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && poset.relation[i][j]) {
                if (poset.relation[j][i]) {
                    throw std::logic_error("containment is not antisymmetric between " +
                                           poset.encodings[i] + " and " + poset.encodings[j]);
                }
                strict[i][j] = true;
                ++below[j];
            }
        }
    }
    poset.hasse_edges = transitive_reduction(strict);

    std::vector<std::vector<std::size_t>> covers(n);
    for (const auto& [lo, hi] : poset.hasse_edges) {
        covers[lo].push_back(hi);
    }
    poset.max_branching = 0;
    for (const auto& c : covers) {
        poset.max_branching = std::max(poset.max_branching, c.size());
    }
    // Fewer strict predecessors first is a linear extension.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&below](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    std::vector<std::size_t> chain(n, 1);
    poset.depth = n == 0 ? 0 : 1;
    for (std::size_t v : order) {
        for (std::size_t w : covers[v]) {
            chain[w] = std::max(chain[w], chain[v] + 1);
        }
        poset.depth = std::max(poset.depth, chain[v]);
    }
}

std::optional<StructurePoset> build_poset(std::vector<ModellingStructure> structures,
                                          const PosetOptions& options) {
    StructurePoset poset;
    const std::size_t n = structures.size();
    bool trees = false;
    bool multisets = false;
    for (const ModellingStructure& s : structures) {
        (std::holds_alternative<AxiomTree>(s) ? trees : multisets) = true;
        poset.encodings.push_back(structure_encoding(s));
    }
    if (trees && multisets) {
        throw std::invalid_argument("poset elements must be all axiom or all frame structures");
    }
    {
        auto sorted = poset.encodings;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("poset elements must be pairwise distinct");
        }
    }
    poset.relation.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        poset.relation[i][i] = true;
    }
    const bool done = trees ? fill_axiom_relation(structures, options, poset)
                            : fill_frame_relation(structures, options, poset);
    if (!done) {
        return std::nullopt;
    }
    poset.elements = std::move(structures);
    finish_poset(poset);
    return poset;
}

}  // namespace owlreg
