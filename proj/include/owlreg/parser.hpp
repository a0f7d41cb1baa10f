#ifndef OWLREG_PARSER_HPP_
#define OWLREG_PARSER_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "owlreg/ast.hpp"

namespace owlreg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Class-expression axioms of one ontology document. Immutable once parsed.
struct Document {
    std::map<std::string, std::string> prefixes;
    std::vector<AxiomTree> axioms;
    // Axioms read but not kept: other axiom kinds plus rejected
    // class-expression axioms (the latter also produce a warning).
    std::size_t skipped = 0;
    std::vector<std::string> warnings;

    std::size_t total_axioms() const { return axioms.size() + skipped; }
};

// Parses OWL 2 functional-style syntax. Annotations are dropped, IRIs are
// expanded to `<full>` form. Throws ParseError on malformed input or an
// undeclared prefix.
Document parse_document(std::string_view text);

// Reads and parses a file; an unreadable path raises ParseError at 0:0.
Document parse_file(const std::filesystem::path& path);

// Renders axioms as a standalone document that parse_document accepts.
std::string render_document(const std::vector<AxiomTree>& axioms);

// Drops repeated axioms (same canonical encoding), keeping first occurrences.
Document deduplicate(const Document& doc);

}  // namespace owlreg

#endif  // OWLREG_PARSER_HPP_
