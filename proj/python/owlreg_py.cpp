#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>

#include "owlreg/survey.hpp"

namespace py = pybind11;
using namespace owlreg;

namespace {

Abstraction to_abstraction(const std::string& name) {
    const auto a = abstraction_from_name(name);
    if (!a) {
        throw py::value_error("abstraction must be 'G' or 'I'");
    }
    return *a;
}

AnalysisOptions options(double budget, std::size_t k) {
    AnalysisOptions o;
    o.budget_seconds = budget;
    o.top_k = k;
    return o;
}

py::object poset_dict(const std::optional<StructurePoset>& p) {
    if (!p) {
        return py::none();
    }
    py::list edges;
    for (const auto& [lo, hi] : p->hasse_edges) {
        edges.append(py::make_tuple(p->encodings[lo], p->encodings[hi]));
    }
    py::dict d;
    d["elements"] = p->encodings;
    d["hasse_edges"] = edges;
    d["depth"] = p->depth;
    d["max_branching"] = p->max_branching;
    return std::move(d);
}

}  // namespace

PYBIND11_MODULE(_owlreg, m) {
    m.doc() = "Syntactic regularities of OWL ontologies (C++ core)";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        }
    });

    py::class_<AxiomTree>(m, "AxiomTree")
        .def_property_readonly("label", [](const AxiomTree& t) { return std::string(t.label().text()); })
        .def_property_readonly("children",
                               [](const AxiomTree& t) {
                                   py::list out;
                                   for (const Branch& b : t.children()) {
                                       out.append(py::make_tuple(std::string(tag_name(b.tag)), b.tree));
                                   }
                                   return out;
                               })
        .def("encoding", &canonical_encoding)
        .def("render", &render_tree)
        .def("functional_syntax", &to_functional_syntax)
        .def("__eq__", [](const AxiomTree& a, const AxiomTree& b) { return same_tree(a, b); })
        .def("__hash__", [](const AxiomTree& t) { return py::hash(py::str(canonical_encoding(t))); })
        .def("__repr__", [](const AxiomTree& t) { return "AxiomTree(" + render_tree(t) + ")"; });

    py::class_<StructureMultiset>(m, "StructureMultiset")
        .def_property_readonly("entries",
                               [](const StructureMultiset& s) {
                                   py::dict d;
                                   for (const auto& [key, e] : s.entries()) {
                                       d[py::str(key)] = e.multiplicity;
                                   }
                                   return d;
                               })
        .def_property_readonly("total", &StructureMultiset::total)
        .def("encoding", &StructureMultiset::encoding)
        .def("__eq__", [](const StructureMultiset& a, const StructureMultiset& b) { return a == b; })
        .def("__repr__", [](const StructureMultiset& s) {
            return "StructureMultiset(" + render_structure(s) + ")";
        });

    py::class_<Document>(m, "Document")
        .def_readonly("prefixes", &Document::prefixes)
        .def_readonly("axioms", &Document::axioms)
        .def_readonly("skipped", &Document::skipped)
        .def_readonly("warnings", &Document::warnings)
        .def_property_readonly("total_axioms", &Document::total_axioms);

    py::class_<ClassFrame>(m, "ClassFrame")
        .def_readonly("subject", &ClassFrame::subject)
        .def_readonly("member_axioms", &ClassFrame::member_axioms)
        .def_readonly("structure", &ClassFrame::structure);

    py::class_<Regularity>(m, "Regularity")
        .def_readonly("structure", &Regularity::structure)
        .def_readonly("encoding", &Regularity::encoding)
        .def_readonly("members", &Regularity::members)
        .def_property_readonly("size", &Regularity::size);

    m.def("parse_document", [](const std::string& text) { return parse_document(text); },
          py::arg("text"));
    m.def("parse_file", &parse_file, py::arg("path"));
    m.def("deduplicate", &deduplicate);

    m.def("canonical_encoding", &canonical_encoding);
    m.def("node_count", &node_count);
    m.def("tree_depth", &tree_depth);
    m.def("ground_generalisation", &ground_generalisation);
    m.def("internal_tree_structure", &internal_tree_structure);
    m.def(
        "lift",
        [](const std::vector<AxiomTree>& trees, const std::string& a) {
            return lift(trees, to_abstraction(a));
        },
        py::arg("trees"), py::arg("abstraction") = "G");

    m.def("extract_frames", [](const Document& doc) {
        FrameSet s = extract_frames(doc);
        return py::make_tuple(std::move(s.frames), s.frameless);
    });
    m.def(
        "partition_axioms",
        [](const Document& doc, const std::string& a) {
            return partition_axioms(doc, to_abstraction(a));
        },
        py::arg("doc"), py::arg("abstraction") = "G");
    m.def("partition_frames",
          [](const std::vector<ClassFrame>& frames) { return partition_frames(frames); });
    m.def("coverage_count",
          [](const std::vector<Regularity>& p, double threshold) {
              return coverage_count(p, threshold);
          },
          py::arg("partition"), py::arg("threshold") = 0.9);

    m.def("tree_embeds", [](const AxiomTree& a, const AxiomTree& b) { return tree_embeds(a, b); });
    m.def("axiom_contains",
          [](const AxiomTree& a, const AxiomTree& b) { return axiom_contains(a, b); });
    m.def("frame_contains", &frame_contains);

    m.def("classify", [](const Document& doc) { return std::string(category_name(classify(doc))); });
    m.def("render_structure", [](const AxiomTree& t) { return render_tree(t); });
    m.def("render_structure",
          [](const StructureMultiset& s) { return render_structure(ModellingStructure(s)); });

    m.def("_analyze_json", [](const Document& doc, const std::string& id, double budget,
                              std::size_t k) { return to_structured(analyze(doc, id, options(budget, k))); });
    m.def("_survey_json", [](const std::string& dir, double budget, std::size_t k) {
        return to_structured(survey_corpus(dir, options(budget, k)));
    });
    m.def("_posets", [](const Document& doc, double budget) {
        const OntologyPosets p = build_posets(doc, options(budget, kDefaultTopK));
        py::dict d;
        d["axioms"] = poset_dict(p.axioms);
        d["frames"] = poset_dict(p.frames);
        d["timed_out"] = p.timed_out;
        return d;
    });
}
