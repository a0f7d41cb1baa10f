#ifndef OWLREG_PROFILE_HPP_
#define OWLREG_PROFILE_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

#include "owlreg/parser.hpp"

namespace owlreg {

// Expressivity category of an ontology's class-expression axioms, most
// specific first.
enum class Category { Atomic = 0, ElPlusPlus = 1, Rich = 2 };

inline constexpr std::size_t kCategoryCount = 3;

std::string_view category_name(Category c);
std::optional<Category> category_from_name(std::string_view name);

// atomic: only SubClassOf/EquivalentClasses between named classes.
// elpp: SubClassOf/EquivalentClasses/DisjointClasses over the EL constructor
// whitelist (intersection, existential, has-value, has-self, singleton
// nominal, data existential, data has-value). This is a syntactic proxy on
// the parsed fragment, not a full OWL 2 EL profile check.
Category classify(const Document& doc);

bool is_atomic_axiom(const AxiomTree& axiom);
bool is_el_axiom(const AxiomTree& axiom);

}  // namespace owlreg

#endif  // OWLREG_PROFILE_HPP_
