#ifndef OWLREG_SURVEY_HPP_
#define OWLREG_SURVEY_HPP_

#include <array>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "owlreg/order.hpp"
#include "owlreg/parser.hpp"
#include "owlreg/profile.hpp"
#include "owlreg/regularity.hpp"

namespace owlreg {

inline constexpr double kDefaultBudgetSeconds = 60.0;
inline constexpr std::size_t kDefaultTopK = 3;

struct AnalysisOptions {
    double budget_seconds = kDefaultBudgetSeconds;
    std::size_t top_k = kDefaultTopK;
    EmbedMode mode = EmbedMode::AnyNode;
};

struct RankedStructure {
    std::string structure;  // display form
    std::string encoding;
    std::size_t size = 0;
};

struct HasseMetrics {
    std::size_t depth = 0;
    std::size_t max_branching = 0;
};

struct PartitionSizes {
    std::vector<std::size_t> axioms;  // regularity sizes under G, descending
    std::vector<std::size_t> frames;
};

struct Coverage {
    std::size_t axioms = 0;
    std::size_t frames = 0;
};

struct OntologyReport {
    std::string id;
    Category category = Category::Atomic;
    std::size_t axiom_count = 0;
    std::size_t frame_count = 0;
    std::size_t frameless_count = 0;
    std::size_t regularities_axioms_G = 0;
    std::size_t regularities_axioms_I = 0;
    std::size_t regularities_frames = 0;
    PartitionSizes size_histogram;
    Coverage coverage_90;
    std::vector<RankedStructure> top3_axioms;
    std::vector<RankedStructure> top3_frames;
    std::size_t max_structure_size = 0;
    std::size_t max_structure_depth = 0;
    std::size_t max_frame_axioms = 0;
    std::optional<HasseMetrics> hasse_axioms;  // absent when empty or timed out
    std::optional<HasseMetrics> hasse_frames;
    bool timed_out = false;
};

OntologyReport analyze(const Document& doc, const std::string& id,
                       const AnalysisOptions& options = {});

// Posets over the G-regularities of axioms and over frame regularities.
struct OntologyPosets {
    std::optional<StructurePoset> axioms;
    std::optional<StructurePoset> frames;
    bool timed_out = false;
};

OntologyPosets build_posets(const Document& doc, const AnalysisOptions& options = {});

struct CorpusEntry {
    std::size_t index = 0;
    OntologyReport report;
};

struct ExcludedFile {
    std::string id;
    std::string reason;
};

// Number of ontologies per category having at least min_counts[i]
// regularities of size >= min_sizes[j].
struct ThresholdCounts {
    std::vector<std::size_t> min_counts;
    std::vector<std::size_t> min_sizes;
    std::vector<std::vector<std::array<std::size_t, kCategoryCount>>> axioms;
    std::vector<std::vector<std::array<std::size_t, kCategoryCount>>> frames;
};

struct CorpusReport {
    std::vector<CorpusEntry> ontologies;  // by (category, axiom_count, id)
    std::vector<ExcludedFile> excluded;
    std::vector<CommonStructureRow> common_structures_axioms;
    std::vector<CommonStructureRow> common_structures_frames;
    ThresholdCounts threshold_tables;
};

// Analyzes every `.ofn` file of dir. Throws std::invalid_argument if dir is
// missing or has no `.ofn` files.
CorpusReport survey_corpus(const std::filesystem::path& dir, const AnalysisOptions& options = {},
                           std::size_t threads = 0);

// Tag-free display form: `SubClassOf(*, ObjectSomeValuesFrom(*, *))`,
// `{SubClassOf(*, *)^2}`.
std::string render_structure(const ModellingStructure& s);
std::string render_tree(const AxiomTree& t);

std::string to_structured(const OntologyReport& report);
std::string to_structured(const CorpusReport& report);
std::string to_tabular(const OntologyReport& report);
std::string to_tabular(const CorpusReport& report);
std::string common_structures_tabular(const CorpusReport& report);

}  // namespace owlreg

#endif  // OWLREG_SURVEY_HPP_
