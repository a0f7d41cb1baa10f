#include "owlreg/frames.hpp"

#include <algorithm>
#include <map>

namespace owlreg {

namespace {

bool is_named_class(const AxiomTree& t) {
    return t.label().is_leaf() && t.label().leaf_kind() == LeafKind::Class;
}

}  // namespace

std::vector<std::string> frame_subjects(const AxiomTree& axiom) {
    std::vector<std::string> subjects;
    if (axiom.label().is_leaf()) {
        return subjects;
    }
    const auto add = [&subjects](const AxiomTree& t) {
        std::string token(t.label().text());
        if (std::find(subjects.begin(), subjects.end(), token) == subjects.end()) {
            subjects.push_back(std::move(token));
        }
    };
    switch (axiom.label().constructor()) {
        case Constructor::SubClassOf:
            for (const Branch& b : axiom.children()) {
                if (b.tag == EdgeTag::Sub && is_named_class(b.tree)) {
                    add(b.tree);
                }
            }
            break;
        case Constructor::EquivalentClasses:
        case Constructor::DisjointClasses:
            for (const Branch& b : axiom.children()) {
                if (is_named_class(b.tree)) {
                    add(b.tree);
                }
            }
            break;
        case Constructor::DisjointUnion:
            for (const Branch& b : axiom.children()) {
                if (b.tag == EdgeTag::Lhs && is_named_class(b.tree)) {
                    add(b.tree);
                }
            }
            break;
        default:
            break;
    }
    return subjects;
}

FrameSet extract_frames(const Document& doc) {
    std::map<std::string, std::vector<std::size_t>> members;
    FrameSet out;
    for (std::size_t i = 0; i < doc.axioms.size(); ++i) {
        const auto subjects = frame_subjects(doc.axioms[i]);
        if (subjects.empty()) {
            ++out.frameless;
        }
        for (const std::string& s : subjects) {
            members[s].push_back(i);
        }
    }
    out.frames.reserve(members.size());
    for (auto& [subject, indices] : members) {
        ClassFrame frame{subject, std::move(indices), {}};
        for (std::size_t i : frame.member_axioms) {
            frame.structure.add(ground_generalisation(doc.axioms[i]));
        }
        out.frames.push_back(std::move(frame));
    }
    return out;
}

}  // namespace owlreg
