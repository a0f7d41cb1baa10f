#include "owlreg/survey.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"

namespace owlreg {

namespace {

using json = nlohmann::ordered_json;

struct Analysis {
    OntologyReport report;
    std::vector<ModellingStructure> top_axioms;
    std::vector<ModellingStructure> top_frames;
};

std::vector<RankedStructure> ranked(const std::vector<Regularity>& partition, std::size_t k) {
    std::vector<RankedStructure> out;
    for (std::size_t i = 0; i < partition.size() && i < k; ++i) {
        out.push_back({render_structure(partition[i].structure), partition[i].encoding,
                       partition[i].size()});
    }
    return out;
}

std::vector<std::size_t> sizes_of(const std::vector<Regularity>& partition) {
    std::vector<std::size_t> out;
    out.reserve(partition.size());
    for (const Regularity& r : partition) {
        out.push_back(r.size());
    }
    return out;
}

std::vector<ModellingStructure> structures_of(const std::vector<Regularity>& partition) {
    std::vector<ModellingStructure> out;
    out.reserve(partition.size());
    for (const Regularity& r : partition) {
        out.push_back(r.structure);
    }
    return out;
}

Deadline deadline_after(double seconds) {
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(seconds));
}

HasseMetrics metrics_of(const StructurePoset& p) { return {p.depth, p.max_branching}; }

void check_options(const AnalysisOptions& options) {
    if (!(options.budget_seconds > 0.0)) {
        throw std::invalid_argument("budget must be positive");
    }
    if (options.top_k == 0) {
        throw std::invalid_argument("top-k must be at least 1");
    }
}

OntologyPosets posets_from(const std::vector<Regularity>& axioms_g,
                           const std::vector<Regularity>& frames, const AnalysisOptions& options) {
    OntologyPosets out;
    const PosetOptions poset_options{options.mode, deadline_after(options.budget_seconds)};
    if (!axioms_g.empty()) {
        out.axioms = build_poset(structures_of(axioms_g), poset_options);
        if (!out.axioms) {
            out.timed_out = true;
            return out;
        }
    }
    if (!frames.empty()) {
        out.frames = build_poset(structures_of(frames), poset_options);
        if (!out.frames) {
            out.timed_out = true;
            out.axioms.reset();
        }
    }
    return out;
}

Analysis analyze_full(const Document& doc, const std::string& id,
                      const AnalysisOptions& options) {
    check_options(options);
    Analysis a;
    OntologyReport& r = a.report;
    r.id = id;
    r.category = classify(doc);
    r.axiom_count = doc.axioms.size();

    const FrameSet frames = extract_frames(doc);
    r.frame_count = frames.frames.size();
    r.frameless_count = frames.frameless;

    const auto axioms_g = partition_axioms(doc, Abstraction::Ground);
    const auto axioms_i = partition_axioms(doc, Abstraction::Internal);
    const auto frame_regs = partition_frames(frames.frames);
    r.regularities_axioms_G = axioms_g.size();
    r.regularities_axioms_I = axioms_i.size();
    r.regularities_frames = frame_regs.size();

    r.size_histogram = {sizes_of(axioms_g), sizes_of(frame_regs)};
    r.coverage_90 = {coverage_count(axioms_g, 0.9), coverage_count(frame_regs, 0.9)};

    r.top3_axioms = ranked(axioms_g, options.top_k);
    r.top3_frames = ranked(frame_regs, options.top_k);
    if (!axioms_g.empty()) {
        a.top_axioms = top_structures(axioms_g, options.top_k);
    }
    if (!frame_regs.empty()) {
        a.top_frames = top_structures(frame_regs, options.top_k);
    }

    for (const AxiomTree& t : doc.axioms) {
        r.max_structure_size = std::max(r.max_structure_size, node_count(t));
        r.max_structure_depth = std::max(r.max_structure_depth, tree_depth(t));
    }
    for (const ClassFrame& f : frames.frames) {
        r.max_frame_axioms = std::max(r.max_frame_axioms, f.member_axioms.size());
    }

    const OntologyPosets posets = posets_from(axioms_g, frame_regs, options);
    r.timed_out = posets.timed_out;
    if (posets.axioms) {
        r.hasse_axioms = metrics_of(*posets.axioms);
    }
    if (posets.frames) {
        r.hasse_frames = metrics_of(*posets.frames);
    }
    return a;
}

std::string render_multiset(const StructureMultiset& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, entry] : m.entries()) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += render_tree(entry.structure);
        out += '^';
        out += std::to_string(entry.multiplicity);
    }
    out += '}';
    return out;
}

json ranked_json(const std::vector<RankedStructure>& items) {
    json out = json::array();
    for (const RankedStructure& s : items) {
        out.push_back({{"structure", s.structure}, {"encoding", s.encoding}, {"size", s.size}});
    }
    return out;
}

json hasse_json(const std::optional<HasseMetrics>& m) {
    if (!m) {
        return nullptr;
    }
    return {{"depth", m->depth}, {"max_branching", m->max_branching}};
}

json report_json(const OntologyReport& r) {
    json j;
    j["id"] = r.id;
    j["category"] = category_name(r.category);
    j["axiom_count"] = r.axiom_count;
    j["frame_count"] = r.frame_count;
    j["frameless_count"] = r.frameless_count;
    j["regularities_axioms_G"] = r.regularities_axioms_G;
    j["regularities_axioms_I"] = r.regularities_axioms_I;
    j["regularities_frames"] = r.regularities_frames;
    j["size_histogram"] = {{"axioms", r.size_histogram.axioms},
                           {"frames", r.size_histogram.frames}};
    j["coverage_90"] = {{"axioms", r.coverage_90.axioms}, {"frames", r.coverage_90.frames}};
    j["top3_axioms"] = ranked_json(r.top3_axioms);
    j["top3_frames"] = ranked_json(r.top3_frames);
    j["max_structure_size"] = r.max_structure_size;
    j["max_structure_depth"] = r.max_structure_depth;
    j["max_frame_axioms"] = r.max_frame_axioms;
    j["hasse_axioms"] = hasse_json(r.hasse_axioms);
    j["hasse_frames"] = hasse_json(r.hasse_frames);
    j["timed_out"] = r.timed_out;
    return j;
}

json common_json(const std::vector<CommonStructureRow>& rows) {
    json out = json::array();
    for (const CommonStructureRow& row : rows) {
        json counts;
        for (Category c : {Category::Atomic, Category::ElPlusPlus, Category::Rich}) {
            counts[std::string(category_name(c))] = row.per_category[static_cast<std::size_t>(c)];
        }
        out.push_back({{"structure", render_structure(row.structure)},
                       {"encoding", row.encoding},
                       {"counts", counts},
                       {"total", row.total}});
    }
    return out;
}

json threshold_json(const ThresholdCounts& t) {
    const auto table = [&t](const auto& cells) {
        json rows = json::array();
        for (std::size_t i = 0; i < t.min_counts.size(); ++i) {
            for (std::size_t j = 0; j < t.min_sizes.size(); ++j) {
                json row{{"min_regularities", t.min_counts[i]}, {"min_size", t.min_sizes[j]}};
                for (Category c : {Category::Atomic, Category::ElPlusPlus, Category::Rich}) {
                    row[std::string(category_name(c))] =
                        cells[i][j][static_cast<std::size_t>(c)];
                }
                rows.push_back(std::move(row));
            }
        }
        return rows;
    };
    return {{"axioms", table(t.axioms)}, {"frames", table(t.frames)}};
}

const char* const kColumns[] = {
    "index",
    "id",
    "category",
    "axiom_count",
    "frame_count",
    "frameless_count",
    "regularities_axioms_G",
    "regularities_axioms_I",
    "regularities_frames",
    "coverage_90_axioms",
    "coverage_90_frames",
    "max_structure_size",
    "max_structure_depth",
    "max_frame_axioms",
    "hasse_axioms_depth",
    "hasse_axioms_max_branching",
    "hasse_frames_depth",
    "hasse_frames_max_branching",
    "timed_out",
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

std::string csv_header() {
    std::string out;
    for (const char* c : kColumns) {
        if (!out.empty()) {
            out += ',';
        }
        out += c;
    }
    return out + '\n';
}

std::string csv_row(const std::optional<std::size_t>& index, const OntologyReport& r) {
    const auto opt = [](const std::optional<HasseMetrics>& m, bool depth) -> std::string {
        if (!m) {
            return "";
        }
        return std::to_string(depth ? m->depth : m->max_branching);
    };
    const std::vector<std::string> cells = {
        index ? std::to_string(*index) : "",
        csv_field(r.id),
        std::string(category_name(r.category)),
        std::to_string(r.axiom_count),
        std::to_string(r.frame_count),
        std::to_string(r.frameless_count),
        std::to_string(r.regularities_axioms_G),
        std::to_string(r.regularities_axioms_I),
        std::to_string(r.regularities_frames),
        std::to_string(r.coverage_90.axioms),
        std::to_string(r.coverage_90.frames),
        std::to_string(r.max_structure_size),
        std::to_string(r.max_structure_depth),
        std::to_string(r.max_frame_axioms),
        opt(r.hasse_axioms, true),
        opt(r.hasse_axioms, false),
        opt(r.hasse_frames, true),
        opt(r.hasse_frames, false),
        r.timed_out ? "true" : "false",
    };
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += cells[i];
    }
    return out + '\n';
}

}  // namespace

OntologyReport analyze(const Document& doc, const std::string& id,
                       const AnalysisOptions& options) {
    return analyze_full(doc, id, options).report;
}

OntologyPosets build_posets(const Document& doc, const AnalysisOptions& options) {
    check_options(options);
    const FrameSet frames = extract_frames(doc);
    return posets_from(partition_axioms(doc, Abstraction::Ground),
                       partition_frames(frames.frames), options);
}

CorpusReport survey_corpus(const std::filesystem::path& dir, const AnalysisOptions& options,
                           std::size_t threads) {
    check_options(options);
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        throw std::invalid_argument("not a directory: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".ofn") {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw std::invalid_argument("no .ofn files in " + dir.string());
    }
    std::sort(files.begin(), files.end());

    struct Slot {
        std::optional<Analysis> analysis;
        std::string error;
    };
    std::vector<Slot> slots(files.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            try {
                const Document doc = parse_file(files[i]);
                slots[i].analysis = analyze_full(doc, files[i].filename().string(), options);
            } catch (const ParseError& e) {
                slots[i].error = e.what();
            }
        }
    };
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, files.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread& t : pool) {
        t.join();
    }

    CorpusReport out;
    std::vector<Analysis> analyses;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (slots[i].analysis) {
            analyses.push_back(std::move(*slots[i].analysis));
        } else {
            out.excluded.push_back({files[i].filename().string(), slots[i].error});
        }
    }
    std::sort(analyses.begin(), analyses.end(), [](const Analysis& a, const Analysis& b) {
        return std::tuple(a.report.category, a.report.axiom_count, a.report.id) <
               std::tuple(b.report.category, b.report.axiom_count, b.report.id);
    });

    std::vector<OntologyTops> axiom_tops;
    std::vector<OntologyTops> frame_tops;
    ThresholdCounts& t = out.threshold_tables;
    t.min_counts = {5, 10};
    t.min_sizes = {10, 100, 1000};
    t.axioms.assign(t.min_counts.size(),
                    std::vector<std::array<std::size_t, kCategoryCount>>(t.min_sizes.size()));
    t.frames = t.axioms;
    const auto tally = [&t](const std::vector<std::size_t>& sizes, Category c, auto& cells) {
        const auto table = threshold_table_for_sizes(sizes, t.min_counts, t.min_sizes);
        for (std::size_t i = 0; i < table.size(); ++i) {
            for (std::size_t j = 0; j < table[i].size(); ++j) {
                cells[i][j][static_cast<std::size_t>(c)] += table[i][j] ? 1 : 0;
            }
        }
    };
    for (std::size_t i = 0; i < analyses.size(); ++i) {
        Analysis& a = analyses[i];
        axiom_tops.push_back({a.report.id, a.report.category, std::move(a.top_axioms)});
        frame_tops.push_back({a.report.id, a.report.category, std::move(a.top_frames)});
        tally(a.report.size_histogram.axioms, a.report.category, t.axioms);
        tally(a.report.size_histogram.frames, a.report.category, t.frames);
        out.ontologies.push_back({i, std::move(a.report)});
    }
    out.common_structures_axioms = aggregate_common(axiom_tops);
    out.common_structures_frames = aggregate_common(frame_tops);
    return out;
}

namespace {

// Argument position of a tag in functional-style syntax.
int display_rank(EdgeTag tag) {
    switch (tag) {
        case EdgeTag::Card:
            return 0;
        case EdgeTag::Sub:
            return 1;
        case EdgeTag::Lhs:
            return 2;
        case EdgeTag::Prop:
            return 3;
        case EdgeTag::Op:
            return 4;
        case EdgeTag::Super:
            return 5;
        case EdgeTag::Filler:
            return 6;
        case EdgeTag::Ind:
            return 7;
        case EdgeTag::Lit:
            return 8;
        case EdgeTag::Range:
            return 9;
    }
    return 10;
}

}  // namespace

std::string render_tree(const AxiomTree& t) {
    std::string out(t.label().text());
    if (t.children().empty()) {
        return out;
    }
    std::vector<std::tuple<int, std::string, const AxiomTree*>> parts;
    for (const Branch& b : t.children()) {
        parts.emplace_back(display_rank(b.tag), canonical_encoding(b.tree), &b.tree);
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    out += '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += render_tree(*std::get<2>(parts[i]));
    }
    out += ')';
    return out;
}

std::string render_structure(const ModellingStructure& s) {
    if (const auto* tree = std::get_if<AxiomTree>(&s)) {
        return render_tree(*tree);
    }
    return render_multiset(std::get<StructureMultiset>(s));
}

std::string to_structured(const OntologyReport& report) {
    return report_json(report).dump(2) + "\n";
}

std::string to_structured(const CorpusReport& report) {
    json j;
    json ontologies = json::array();
    for (const CorpusEntry& e : report.ontologies) {
        ontologies.push_back({{"index", e.index}, {"report", report_json(e.report)}});
    }
    j["ontologies"] = std::move(ontologies);
    json excluded = json::array();
    for (const ExcludedFile& e : report.excluded) {
        excluded.push_back({{"id", e.id}, {"reason", e.reason}});
    }
    j["excluded"] = std::move(excluded);
    j["common_structures_axioms"] = common_json(report.common_structures_axioms);
    j["common_structures_frames"] = common_json(report.common_structures_frames);
    j["threshold_tables"] = threshold_json(report.threshold_tables);
    return j.dump(2) + "\n";
}

std::string to_tabular(const OntologyReport& report) {
    return csv_header() + csv_row(std::nullopt, report);
}

std::string to_tabular(const CorpusReport& report) {
    std::string out = csv_header();
    for (const CorpusEntry& e : report.ontologies) {
        out += csv_row(e.index, e.report);
    }
    return out;
}

std::string common_structures_tabular(const CorpusReport& report) {
    std::string out = "kind,structure,atomic,elpp,rich,total\n";
    const auto rows = [&out](const char* kind, const std::vector<CommonStructureRow>& table) {
        for (const CommonStructureRow& row : table) {
            out += kind;
            out += ',' + csv_field(render_structure(row.structure));
            for (std::size_t c : row.per_category) {
                out += ',' + std::to_string(c);
            }
            out += ',' + std::to_string(row.total) + '\n';
        }
    };
    rows("axioms", report.common_structures_axioms);
    rows("frames", report.common_structures_frames);
    return out;
}

}  // namespace owlreg
