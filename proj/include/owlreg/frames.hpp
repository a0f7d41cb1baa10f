#ifndef OWLREG_FRAMES_HPP_
#define OWLREG_FRAMES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "owlreg/abstraction.hpp"
#include "owlreg/parser.hpp"

namespace owlreg {

struct ClassFrame {
    std::string subject;                     // named class token, e.g. `<http://x#A>`
    std::vector<std::size_t> member_axioms;  // indices into Document::axioms
    StructureMultiset structure;             // G-lifted member axioms
};

struct FrameSet {
    std::vector<ClassFrame> frames;  // ordered by subject
    // Axioms that belong to no frame (e.g. GCIs with a complex left-hand side).
    std::size_t frameless = 0;
};

// Named classes whose frame the axiom belongs to: the subclass of a
// SubClassOf, any named operand of EquivalentClasses/DisjointClasses, or the
// defined class of a DisjointUnion. Deduplicated, in first-seen order.
std::vector<std::string> frame_subjects(const AxiomTree& axiom);

FrameSet extract_frames(const Document& doc);

}  // namespace owlreg

#endif  // OWLREG_FRAMES_HPP_
