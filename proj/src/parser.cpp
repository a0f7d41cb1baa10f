#include "owlreg/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace owlreg {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

enum class TokenKind { LParen, RParen, Equals, FullIri, Name, String, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;  // IRI body, name, or string lexical form
    // String tokens only: "^^" datatype (full IRI body or pname) or "@" language.
    std::string datatype;
    bool datatype_is_full = false;
    std::string language;
    Position pos;
};

bool is_name_char(char c) {
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        return false;
    }
    switch (c) {
        case '(':
        case ')':
        case '<':
        case '>':
        case '"':
        case '=':
            return false;
        default:
            return true;
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        Token tok;
        tok.pos = pos_;
        if (at_end()) {
            return tok;
        }
        const char c = peek();
        if (c == '(') {
            advance();
            tok.kind = TokenKind::LParen;
        } else if (c == ')') {
            advance();
            tok.kind = TokenKind::RParen;
        } else if (c == '=') {
            advance();
            tok.kind = TokenKind::Equals;
        } else if (c == '<') {
            tok.kind = TokenKind::FullIri;
            tok.text = read_full_iri();
        } else if (c == '"') {
            tok.kind = TokenKind::String;
            read_string(tok);
        } else if (c == '>') {
            throw ParseError("unexpected '>'", pos_.line, pos_.column);
        } else {
            tok.kind = TokenKind::Name;
            while (!at_end() && is_name_char(peek())) {
                tok.text += advance();
            }
        }
        return tok;
    }

private:
    bool at_end() const { return offset_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return offset_ + ahead < text_.size() ? text_[offset_ + ahead] : '\0';
    }

    char advance() {
        const char c = text_[offset_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (!at_end()) {
            const char c = peek();
            if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                advance();
            } else if ((c == '/' && peek(1) == '/') || c == '#') {
                while (!at_end() && peek() != '\n') {
                    advance();
                }
            } else {
                return;
            }
        }
    }

    std::string read_full_iri() {
        const Position start = pos_;
        advance();  // '<'
        std::string iri;
        while (true) {
            if (at_end() || peek() == '\n') {
                throw ParseError("unterminated IRI", start.line, start.column);
            }
            const char c = advance();
            if (c == '>') {
                return iri;
            }
            iri += c;
        }
    }

    void read_string(Token& tok) {
        const Position start = pos_;
        advance();  // '"'
        while (true) {
            if (at_end()) {
                throw ParseError("unterminated string literal", start.line, start.column);
            }
            const char c = advance();
            if (c == '"') {
                break;
            }
            if (c == '\\') {
                if (at_end()) {
                    throw ParseError("unterminated string literal", start.line, start.column);
                }
                const char e = advance();
                if (e != '"' && e != '\\') {
                    throw ParseError(std::string("invalid escape \\") + e, pos_.line, pos_.column);
                }
                tok.text += e;
            } else {
                tok.text += c;
            }
        }
        if (peek() == '^' && peek(1) == '^') {
            advance();
            advance();
            if (peek() == '<') {
                tok.datatype = read_full_iri();
                tok.datatype_is_full = true;
            } else {
                while (!at_end() && is_name_char(peek())) {
                    tok.datatype += advance();
                }
                if (tok.datatype.empty()) {
                    throw ParseError("missing datatype after ^^", pos_.line, pos_.column);
                }
            }
        } else if (peek() == '@') {
            advance();
            while (!at_end() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) != 0 || peek() == '-')) {
                tok.language += advance();
            }
            if (tok.language.empty()) {
                throw ParseError("missing language tag after @", pos_.line, pos_.column);
            }
        }
    }

    std::string_view text_;
    std::size_t offset_ = 0;
    Position pos_;
};

// Generic parenthesised term of the document.
struct Term {
    enum class Kind { Call, Iri, Name, Literal };

    Kind kind = Kind::Name;
    std::string text;  // call name, expanded IRI, bare name, or literal leaf token
    std::vector<Term> args;
    Position pos;
};

std::string escape_literal(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

bool is_cardinality(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

bool is_blank_node(std::string_view s) { return s.size() > 2 && s.substr(0, 2) == "_:"; }

class TermParser {
public:
    explicit TermParser(std::string_view text) : lexer_(text) { shift(); }

    Document parse() {
        Document doc;
        doc.prefixes = {
            {"owl", "http://www.w3.org/2002/07/owl#"},
            {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
            {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
            {"xsd", "http://www.w3.org/2001/XMLSchema#"},
        };
        std::vector<Term> items;
        bool seen_ontology = false;
        while (current_.kind != TokenKind::End) {
            if (seen_ontology) {
                fail("unexpected content after Ontology(...)");
            }
            if (current_.kind != TokenKind::Name) {
                fail("expected Prefix( or Ontology(");
            }
            if (current_.text == "Prefix") {
                parse_prefix(doc);
            } else if (current_.text == "Ontology") {
                items = parse_ontology();
                seen_ontology = true;
            } else {
                fail("expected Prefix( or Ontology(, found '" + current_.text + "'");
            }
        }
        if (!seen_ontology) {
            fail("missing Ontology(...) block");
        }
        prefixes_ = &doc.prefixes;
        for (Term& item : items) {
            expand(item);
        }
        return doc_from_items(std::move(doc), items);
    }

private:
    void shift() { current_ = take(); }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, current_.pos.line, current_.pos.column);
    }

    void expect(TokenKind kind, const char* what) {
        if (current_.kind != kind) {
            fail(std::string("expected ") + what);
        }
        shift();
    }

    void parse_prefix(Document& doc) {
        shift();
        expect(TokenKind::LParen, "'(' after Prefix");
        if (current_.kind != TokenKind::Name || current_.text.empty() ||
            current_.text.back() != ':') {
            fail("expected prefix name ending in ':'");
        }
        std::string name = current_.text.substr(0, current_.text.size() - 1);
        shift();
        expect(TokenKind::Equals, "'=' in prefix declaration");
        if (current_.kind != TokenKind::FullIri) {
            fail("expected full IRI in prefix declaration");
        }
        doc.prefixes[std::move(name)] = current_.text;
        shift();
        expect(TokenKind::RParen, "')' closing Prefix");
    }

    std::vector<Term> parse_ontology() {
        shift();
        expect(TokenKind::LParen, "'(' after Ontology");
        std::vector<Term> items;
        // Optional ontology IRI and version IRI precede the first call.
        while (current_.kind == TokenKind::FullIri ||
               (current_.kind == TokenKind::Name && items.empty() && !next_is_call())) {
            shift();
        }
        while (current_.kind != TokenKind::RParen) {
            if (current_.kind == TokenKind::End) {
                fail("unbalanced parentheses: Ontology( is not closed");
            }
            items.push_back(parse_term());
            if (items.back().kind != Term::Kind::Call) {
                throw ParseError("expected an axiom", items.back().pos.line,
                                 items.back().pos.column);
            }
        }
        shift();
        return items;
    }

    // One token of lookahead past a name is needed to distinguish a call.
    bool next_is_call() {
        Token after = lexer_.next();
        lookahead_ = after;
        has_lookahead_ = true;
        return after.kind == TokenKind::LParen;
    }

    Token take() {
        if (has_lookahead_) {
            has_lookahead_ = false;
            return lookahead_;
        }
        return lexer_.next();
    }

    Term parse_term() {
        Term t;
        t.pos = current_.pos;
        switch (current_.kind) {
            case TokenKind::FullIri:
                t.kind = Term::Kind::Iri;
                t.text = current_.text;
                shift();
                return t;
            case TokenKind::String: {
                t.kind = Term::Kind::Literal;
                t.text = '"' + escape_literal(current_.text) + '"';
                if (!current_.datatype.empty()) {
                    // Datatype pnames are expanded in expand().
                    t.args.push_back(Term{current_.datatype_is_full ? Term::Kind::Iri
                                                                    : Term::Kind::Name,
                                          current_.datatype, {}, current_.pos});
                } else if (!current_.language.empty()) {
                    t.text += '@' + current_.language;
                }
                shift();
                return t;
            }
            case TokenKind::Name: {
                t.text = current_.text;
                shift();
                if (current_.kind != TokenKind::LParen) {
                    t.kind = Term::Kind::Name;
                    return t;
                }
                t.kind = Term::Kind::Call;
                shift();
                while (current_.kind != TokenKind::RParen) {
                    if (current_.kind == TokenKind::End) {
                        fail("unbalanced parentheses: " + t.text + "( opened at " +
                             std::to_string(t.pos.line) + ":" + std::to_string(t.pos.column) +
                             " is not closed");
                    }
                    t.args.push_back(parse_term());
                }
                shift();
                return t;
            }
            case TokenKind::End:
                fail("unexpected end of input");
            default:
                fail("unexpected token");
        }
    }

    std::string expand_name(const std::string& name, const Position& pos) const {
        const auto colon = name.find(':');
        if (colon == std::string::npos) {
            return {};
        }
        const std::string prefix = name.substr(0, colon);
        const auto it = prefixes_->find(prefix);
        if (it == prefixes_->end()) {
            throw ParseError("unknown prefix '" + prefix + ":'", pos.line, pos.column);
        }
        return it->second + name.substr(colon + 1);
    }

    void expand(Term& t) const {
        switch (t.kind) {
            case Term::Kind::Call:
                for (Term& a : t.args) {
                    expand(a);
                }
                break;
            case Term::Kind::Name:
                if (is_blank_node(t.text) || is_cardinality(t.text)) {
                    break;
                }
                if (std::string iri = expand_name(t.text, t.pos); !iri.empty()) {
                    t.kind = Term::Kind::Iri;
                    t.text = std::move(iri);
                }
                break;
            case Term::Kind::Literal:
                if (!t.args.empty()) {
                    Term& dt = t.args.front();
                    if (dt.kind == Term::Kind::Name) {
                        std::string iri = expand_name(dt.text, dt.pos);
                        if (iri.empty()) {
                            throw ParseError("datatype must be an IRI", dt.pos.line,
                                             dt.pos.column);
                        }
                        dt.text = std::move(iri);
                    }
                    t.text += "^^<" + dt.text + ">";
                    t.args.clear();
                }
                break;
            case Term::Kind::Iri:
                break;
        }
    }

    static Document doc_from_items(Document doc, const std::vector<Term>& items);

    Lexer lexer_;
    Token current_;
    Token lookahead_;
    bool has_lookahead_ = false;
    const std::map<std::string, std::string>* prefixes_ = nullptr;
};

// Axiom-level rejection; the axiom is skipped with a warning.
struct Rejection {
    std::string message;
    Position pos;
};

enum class Role { Class, NamedClass, ObjectProperty, DataProperty, Individual, Literal, DataRange,
                  Cardinality };

bool is_data_constructor(Constructor c) {
    switch (c) {
        case Constructor::DataSomeValuesFrom:
        case Constructor::DataAllValuesFrom:
        case Constructor::DataHasValue:
        case Constructor::DataMinCardinality:
        case Constructor::DataMaxCardinality:
        case Constructor::DataExactCardinality:
            return true;
        default:
            return false;
    }
}

Role role_of(Constructor c, EdgeTag tag) {
    switch (tag) {
        case EdgeTag::Lhs:
            return Role::NamedClass;
        case EdgeTag::Sub:
        case EdgeTag::Super:
        case EdgeTag::Filler:
            return Role::Class;
        case EdgeTag::Op:
            return c == Constructor::ObjectOneOf ? Role::Individual : Role::Class;
        case EdgeTag::Prop:
            return is_data_constructor(c) ? Role::DataProperty : Role::ObjectProperty;
        case EdgeTag::Ind:
            return Role::Individual;
        case EdgeTag::Lit:
            return Role::Literal;
        case EdgeTag::Range:
            return Role::DataRange;
        case EdgeTag::Card:
            return Role::Cardinality;
    }
    return Role::Class;
}

std::string iri_token(const std::string& iri) { return '<' + iri + '>'; }

AxiomTree convert(const Term& t, Role role);

AxiomTree convert_call(const Term& t, bool axiom) {
    const auto ctor = constructor_from_name(t.text);
    if (!ctor || is_axiom_kind(*ctor) != axiom) {
        throw Rejection{"unsupported " + std::string(axiom ? "axiom" : "class expression") +
                            " constructor " + t.text,
                        t.pos};
    }
    std::vector<const Term*> args;
    for (const Term& a : t.args) {
        if (axiom && a.kind == Term::Kind::Call && a.text == "Annotation") {
            continue;
        }
        args.push_back(&a);
    }
    if (!valid_arity(*ctor, args.size())) {
        throw Rejection{t.text + " with " + std::to_string(args.size()) + " arguments", t.pos};
    }
    std::vector<Branch> children;
    children.reserve(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        const EdgeTag tag = edge_label_for(*ctor, i, args.size());
        children.push_back(Branch{tag, convert(*args[i], role_of(*ctor, tag))});
    }
    return AxiomTree(NodeLabel::of(*ctor), std::move(children));
}

AxiomTree convert(const Term& t, Role role) {
    const auto reject = [&t](const std::string& what) -> Rejection {
        return Rejection{what, t.pos};
    };
    switch (role) {
        case Role::Class:
            if (t.kind == Term::Kind::Iri) {
                return make_leaf(LeafKind::Class, iri_token(t.text));
            }
            if (t.kind == Term::Kind::Call) {
                return convert_call(t, false);
            }
            throw reject("expected a class expression, found '" + t.text + "'");
        case Role::NamedClass:
            if (t.kind == Term::Kind::Iri) {
                return make_leaf(LeafKind::Class, iri_token(t.text));
            }
            throw reject("expected a named class, found '" + t.text + "'");
        case Role::ObjectProperty:
        case Role::DataProperty:
            if (t.kind == Term::Kind::Iri) {
                return make_leaf(role == Role::ObjectProperty ? LeafKind::ObjectProperty
                                                              : LeafKind::DataProperty,
                                 iri_token(t.text));
            }
            throw reject("unsupported property expression '" + t.text + "'");
        case Role::Individual:
            if (t.kind == Term::Kind::Iri) {
                return make_leaf(LeafKind::Individual, iri_token(t.text));
            }
            if (t.kind == Term::Kind::Name && is_blank_node(t.text)) {
                return make_leaf(LeafKind::Individual, t.text);
            }
            throw reject("expected an individual, found '" + t.text + "'");
        case Role::Literal:
            if (t.kind == Term::Kind::Literal) {
                return make_leaf(LeafKind::Literal, t.text);
            }
            throw reject("expected a literal, found '" + t.text + "'");
        case Role::DataRange:
            if (t.kind == Term::Kind::Iri) {
                return make_leaf(LeafKind::Datatype, iri_token(t.text));
            }
            throw reject("unsupported data range '" + t.text + "'");
        case Role::Cardinality:
            if (t.kind == Term::Kind::Name && is_cardinality(t.text)) {
                const auto first = t.text.find_first_not_of('0');
                return make_leaf(LeafKind::Cardinality,
                                 first == std::string::npos ? "0" : t.text.substr(first));
            }
            throw reject("expected a non-negative integer, found '" + t.text + "'");
    }
    throw reject("unhandled argument");
}

Document TermParser::doc_from_items(Document doc, const std::vector<Term>& items) {
    for (const Term& item : items) {
        if (item.text == "Import" || item.text == "Annotation") {
            continue;
        }
        const auto ctor = constructor_from_name(item.text);
        if (!ctor || !is_axiom_kind(*ctor)) {
            ++doc.skipped;
            continue;
        }
        try {
            doc.axioms.push_back(convert_call(item, true));
        } catch (const Rejection& r) {
            ++doc.skipped;
            doc.warnings.push_back("line " + std::to_string(r.pos.line) + ", column " +
                                   std::to_string(r.pos.column) + ": skipped " + item.text +
                                   " axiom: " + r.message);
        }
    }
    return doc;
}

}  // namespace

Document parse_document(std::string_view text) { return TermParser(text).parse(); }

Document parse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read " + path.string(), 0, 0);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string render_document(const std::vector<AxiomTree>& axioms) {
    std::string out = "Ontology(\n";
    for (const AxiomTree& a : axioms) {
        out += "  ";
        out += to_functional_syntax(a);
        out += '\n';
    }
    out += ")\n";
    return out;
}

Document deduplicate(const Document& doc) {
    Document out;
    out.prefixes = doc.prefixes;
    out.skipped = doc.skipped;
    out.warnings = doc.warnings;
    std::unordered_set<std::string> seen;
    for (const AxiomTree& a : doc.axioms) {
        if (seen.insert(canonical_encoding(a)).second) {
            out.axioms.push_back(a);
        }
    }
    return out;
}

}  // namespace owlreg
