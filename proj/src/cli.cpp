#include "owlreg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "owlreg/survey.hpp"

namespace owlreg::cli {

namespace {

struct Flags {
    std::string input;
    std::size_t k = kDefaultTopK;
    double budget = kDefaultBudgetSeconds;
    std::string abstraction = "G";
    bool dedup = false;
    bool rooted = false;
    std::string output;
    std::string format = "structured";
    std::size_t threads = 0;
};

double default_budget() {
    if (const char* env = std::getenv(kBudgetEnv)) {
        try {
            const double v = std::stod(env);
            if (v > 0.0) {
                return v;
            }
        } catch (const std::exception&) {
        }
    }
    return kDefaultBudgetSeconds;
}

AnalysisOptions options_of(const Flags& f) {
    AnalysisOptions o;
    o.budget_seconds = f.budget;
    o.top_k = f.k;
    o.mode = f.rooted ? EmbedMode::Rooted : EmbedMode::AnyNode;
    return o;
}

Document load(const Flags& f) {
    Document doc = parse_file(f.input);
    return f.dedup ? deduplicate(doc) : doc;
}

std::string top_text(const Document& doc, const Flags& f) {
    const Abstraction a = *abstraction_from_name(f.abstraction);
    const auto axioms = partition_axioms(doc, a);
    const auto frames = partition_frames(extract_frames(doc).frames);
    std::ostringstream os;
    os << "# axioms (" << abstraction_name(a) << ")\n";
    for (std::size_t i = 0; i < axioms.size() && i < f.k; ++i) {
        os << axioms[i].size() << '\t' << render_structure(axioms[i].structure) << '\n';
    }
    os << "# frames (G)\n";
    for (std::size_t i = 0; i < frames.size() && i < f.k; ++i) {
        os << frames[i].size() << '\t' << render_structure(frames[i].structure) << '\n';
    }
    return os.str();
}

void poset_section(std::ostream& os, const char* title, const std::optional<StructurePoset>& p,
                   bool timed_out) {
    os << "# " << title << '\n';
    if (!p) {
        os << (timed_out ? "timed_out\n" : "empty\n");
        return;
    }
    os << "depth " << p->depth << '\n';
    os << "max_branching " << p->max_branching << '\n';
    for (const auto& [lo, hi] : p->hasse_edges) {
        os << p->encodings[lo] << " -> " << p->encodings[hi] << '\n';
    }
}

int emit(const std::string& text, const Flags& f, std::ostream& out, std::ostream& err) {
    if (f.output.empty() || f.output == "-") {
        out << text;
        return kOk;
    }
    std::ofstream file(f.output, std::ios::binary);
    if (!file || !(file << text)) {
        err << "owlreg: cannot write " << f.output << '\n';
        return kUsage;
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Syntactic regularities of OWL ontologies", "owlreg"};
    app.require_subcommand(1);
    Flags f;
    f.budget = default_budget();

    const auto add_output = [&f](CLI::App* cmd) {
        cmd->add_option("-o,--output", f.output, "Write to this file instead of stdout");
    };
    const auto add_budget = [&f](CLI::App* cmd) {
        cmd->add_option("--budget", f.budget, "Seconds allowed for poset construction")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--rooted", f.rooted, "Require root-to-root embeddings");
    };
    const auto add_format = [&f](CLI::App* cmd) {
        cmd->add_option("--format", f.format, "structured (JSON) or tabular (CSV)")
            ->check(CLI::IsMember({"structured", "tabular"}));
    };
    const auto add_dedup = [&f](CLI::App* cmd) {
        cmd->add_flag("--dedup", f.dedup, "Drop repeated axioms before analysis");
    };
    const auto add_k = [&f](CLI::App* cmd) {
        cmd->add_option("-k", f.k, "Number of largest regularities")->check(CLI::PositiveNumber);
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Report on one ontology");
    analyze_cmd->add_option("FILE", f.input)->required();
    add_budget(analyze_cmd);
    add_format(analyze_cmd);
    add_dedup(analyze_cmd);
    add_k(analyze_cmd);
    add_output(analyze_cmd);

    CLI::App* survey_cmd = app.add_subcommand("survey", "Report on every .ofn file of a directory");
    survey_cmd->add_option("DIR", f.input)->required();
    add_budget(survey_cmd);
    add_format(survey_cmd);
    add_k(survey_cmd);
    add_output(survey_cmd);
    survey_cmd->add_option("--threads", f.threads, "Worker threads (0 = all cores)");

    CLI::App* top_cmd = app.add_subcommand("top", "Largest regularities with their structures");
    top_cmd->add_option("FILE", f.input)->required();
    add_k(top_cmd);
    top_cmd->add_option("--abstraction", f.abstraction, "G or I")
        ->check(CLI::IsMember({"G", "I"}));
    add_dedup(top_cmd);
    add_output(top_cmd);

    CLI::App* poset_cmd = app.add_subcommand("poset", "Hasse diagrams of the structure posets");
    poset_cmd->add_option("FILE", f.input)->required();
    add_budget(poset_cmd);
    add_dedup(poset_cmd);
    add_output(poset_cmd);

    CLI::App* classify_cmd = app.add_subcommand("classify", "Print atomic, elpp or rich");
    classify_cmd->add_option("FILE", f.input)->required();
    add_output(classify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (survey_cmd->parsed()) {
            const CorpusReport report = survey_corpus(f.input, options_of(f), f.threads);
            const std::string text =
                f.format == "tabular" ? to_tabular(report) : to_structured(report);
            return emit(text, f, out, err);
        }

        const Document doc = load(f);
        for (const std::string& w : doc.warnings) {
            err << f.input << ": " << w << '\n';
        }
        if (classify_cmd->parsed()) {
            return emit(std::string(category_name(classify(doc))) + "\n", f, out, err);
        }
        if (top_cmd->parsed()) {
            return emit(top_text(doc, f), f, out, err);
        }
        if (poset_cmd->parsed()) {
            const OntologyPosets posets = build_posets(doc, options_of(f));
            std::ostringstream os;
            poset_section(os, "axioms", posets.axioms, posets.timed_out);
            poset_section(os, "frames", posets.frames, posets.timed_out);
            const int code = emit(os.str(), f, out, err);
            return code == kOk && posets.timed_out ? kTimedOut : code;
        }
        const std::string id = std::filesystem::path(f.input).filename().string();
        const OntologyReport report = analyze(doc, id, options_of(f));
        const std::string text =
            f.format == "tabular" ? to_tabular(report) : to_structured(report);
        const int code = emit(text, f, out, err);
        return code == kOk && report.timed_out ? kTimedOut : code;
    } catch (const ParseError& e) {
        err << "owlreg: " << f.input << ": " << e.what() << '\n';
        return kParseFailure;
    } catch (const std::invalid_argument& e) {
        err << "owlreg: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace owlreg::cli
