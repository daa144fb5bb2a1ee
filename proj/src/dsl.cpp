// Lexer, recursive-descent parser and canonical printer for the
// map-definition language.

#include "fixlocus/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "fixlocus/errors.hpp"

namespace fixlocus {

namespace {

enum class Tok {
    Identifier,
    Integer,
    Comma,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Equals,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool is_keyword(const std::string& s) {
    return s == "ring" || s == "map" || s == "inverse" || s == "witness" || s == "for" ||
           s == "params";
}

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                advance();
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
                continue;
            }
            const std::size_t line = line_, col = col_;
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_')) {
                    word.push_back(text_[pos_]);
                    advance();
                }
                out.push_back({Tok::Identifier, std::move(word), line, col});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    digits.push_back(text_[pos_]);
                    advance();
                }
                out.push_back({Tok::Integer, std::move(digits), line, col});
                continue;
            }
            Tok kind;
            switch (c) {
                case ',': kind = Tok::Comma; break;
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '^': kind = Tok::Caret; break;
                case '/': kind = Tok::Slash; break;
                case '=': kind = Tok::Equals; break;
                default:
                    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
            }
            out.push_back({kind, std::string(1, c), line, col});
            advance();
        }
        out.push_back({Tok::End, "", line_, col_});
        return out;
    }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    MapDocument run() {
        MapDocument doc;
        while (peek().kind != Tok::End) {
            const Token& t = peek();
            if (t.kind != Tok::Identifier)
                throw ParseError(t.line, t.column, "expected a statement keyword");
            if (t.text == "ring") {
                if (!doc.ring.empty())
                    throw ParseError(t.line, t.column, "duplicate ring declaration");
                parse_ring(doc);
            } else if (t.text == "map") {
                parse_map(doc);
            } else if (t.text == "inverse") {
                parse_inverse(doc);
            } else if (t.text == "witness") {
                parse_witness(doc);
            } else {
                throw ParseError(t.line, t.column,
                                 "expected 'ring', 'map', 'inverse' or 'witness', got '" + t.text +
                                     "'");
            }
        }
        return doc;
    }

  private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(idx_ + ahead, toks_.size() - 1)];
    }
    Token next() { return toks_[std::min(idx_++, toks_.size() - 1)]; }

    Token expect(Tok kind, const char* what) {
        Token t = next();
        if (t.kind != kind)
            throw ParseError(t.line, t.column,
                             std::string("expected ") + what + ", got '" +
                                 (t.kind == Tok::End ? "end of input" : t.text) + "'");
        return t;
    }

    std::string expect_fresh_identifier(const char* what) {
        Token t = expect(Tok::Identifier, what);
        if (is_keyword(t.text))
            throw ParseError(t.line, t.column, "'" + t.text + "' is a reserved word");
        return t.text;
    }

    void parse_ring(MapDocument& doc) {
        next();  // 'ring'
        while (true) {
            Token t = expect(Tok::Identifier, "a variable name");
            if (is_keyword(t.text))
                throw ParseError(t.line, t.column, "'" + t.text + "' is a reserved word");
            if (std::find(doc.ring.begin(), doc.ring.end(), t.text) != doc.ring.end())
                throw ParseError(t.line, t.column, "duplicate variable '" + t.text + "'");
            doc.ring.push_back(t.text);
            if (peek().kind != Tok::Comma) break;
            next();
        }
    }

    void require_ring(const MapDocument& doc, const Token& at) {
        if (doc.ring.empty())
            throw ParseError(at.line, at.column, "a ring declaration must come first");
    }

    void parse_map(MapDocument& doc) {
        Token kw = next();  // 'map'
        require_ring(doc, kw);
        std::string name = expect_fresh_identifier("a map name");
        if (doc.find_map(name))
            throw ParseError(kw.line, kw.column, "duplicate map '" + name + "'");
        expect(Tok::Equals, "'='");
        std::vector<Polynomial> comps = parse_tuple(doc.ring, doc.ring.size());
        doc.maps.push_back({std::move(name), PolynomialMap(std::move(comps))});
    }

    void parse_inverse(MapDocument& doc) {
        Token kw = next();  // 'inverse'
        require_ring(doc, kw);
        Token nt = expect(Tok::Identifier, "a map name");
        if (!doc.find_map(nt.text))
            throw ParseError(nt.line, nt.column, "inverse for undeclared map '" + nt.text + "'");
        if (doc.find_inverse(nt.text))
            throw ParseError(nt.line, nt.column, "duplicate inverse for '" + nt.text + "'");
        expect(Tok::Equals, "'='");
        std::vector<Polynomial> comps = parse_tuple(doc.ring, doc.ring.size());
        doc.inverses.push_back({nt.text, PolynomialMap(std::move(comps))});
    }

    void parse_witness(MapDocument& doc) {
        Token kw = next();  // 'witness'
        require_ring(doc, kw);
        WitnessDecl w;
        w.name = expect_fresh_identifier("a witness name");
        for (const WitnessDecl& other : doc.witnesses)
            if (other.name == w.name)
                throw ParseError(kw.line, kw.column, "duplicate witness '" + w.name + "'");
        Token fk = expect(Tok::Identifier, "'for'");
        if (fk.text != "for") throw ParseError(fk.line, fk.column, "expected 'for'");
        Token mt = expect(Tok::Identifier, "a map name");
        if (!doc.find_map(mt.text))
            throw ParseError(mt.line, mt.column, "witness for undeclared map '" + mt.text + "'");
        w.map_name = mt.text;
        Token pk = expect(Tok::Identifier, "'params'");
        if (pk.text != "params") throw ParseError(pk.line, pk.column, "expected 'params'");
        while (true) {
            Token t = expect(Tok::Identifier, "a parameter name");
            if (is_keyword(t.text))
                throw ParseError(t.line, t.column, "'" + t.text + "' is a reserved word");
            if (std::find(doc.ring.begin(), doc.ring.end(), t.text) != doc.ring.end())
                throw ParseError(t.line, t.column,
                                 "parameter '" + t.text + "' collides with a ring variable");
            if (std::find(w.params.begin(), w.params.end(), t.text) != w.params.end())
                throw ParseError(t.line, t.column, "duplicate parameter '" + t.text + "'");
            w.params.push_back(t.text);
            if (peek().kind != Tok::Comma) break;
            next();
        }
        expect(Tok::Equals, "'='");
        w.psi = parse_tuple(w.params, doc.ring.size());
        doc.witnesses.push_back(std::move(w));
    }

    // names: the variables expressions may use; expected: tuple length.
    std::vector<Polynomial> parse_tuple(const std::vector<std::string>& names,
                                        std::size_t expected) {
        Token open = expect(Tok::LParen, "'('");
        std::vector<Polynomial> out;
        while (true) {
            out.push_back(parse_expr(names));
            if (peek().kind == Tok::Comma) {
                next();
                continue;
            }
            break;
        }
        expect(Tok::RParen, "')'");
        if (out.size() != expected) {
            std::ostringstream os;
            os << "expected " << expected << " components, got " << out.size();
            throw ParseError(open.line, open.column, os.str());
        }
        return out;
    }

    Polynomial parse_expr(const std::vector<std::string>& names) {
        const std::uint32_t n = static_cast<std::uint32_t>(names.size());
        bool negate = false;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            negate = (next().kind == Tok::Minus);
        }
        Polynomial acc = parse_term(names);
        if (negate) acc = Polynomial::constant(n, -1) * acc;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = (next().kind == Tok::Minus);
            Polynomial rhs = parse_term(names);
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial parse_term(const std::vector<std::string>& names) {
        Polynomial acc = parse_factor(names);
        while (true) {
            if (peek().kind == Tok::Star) {
                next();
                acc = acc * parse_factor(names);
                continue;
            }
            if (peek().kind == Tok::Slash) {
                const Token& t = peek();
                throw ParseError(t.line, t.column,
                                 "division is only allowed between integer literals");
            }
            break;
        }
        return acc;
    }

    Polynomial parse_factor(const std::vector<std::string>& names) {
        Polynomial base = parse_base(names);
        if (peek().kind == Tok::Caret) {
            Token caret = next();
            Token e = expect(Tok::Integer, "an integer exponent");
            unsigned long long v = 0;
            for (char c : e.text) {
                v = v * 10 + static_cast<unsigned long long>(c - '0');
                if (v > 100000)
                    throw ParseError(e.line, e.column, "exponent too large");
            }
            (void)caret;
            base = base.pow(static_cast<std::uint32_t>(v));
        }
        return base;
    }

    Polynomial parse_base(const std::vector<std::string>& names) {
        const std::uint32_t n = static_cast<std::uint32_t>(names.size());
        Token t = next();
        switch (t.kind) {
            case Tok::Integer: {
                Integer num(t.text);
                if (peek().kind == Tok::Slash) {
                    next();
                    Token d = expect(Tok::Integer, "an integer denominator");
                    Integer den(d.text);
                    if (den == 0) throw ParseError(d.line, d.column, "zero denominator");
                    return Polynomial::constant(n, Rational(num) / Rational(den));
                }
                return Polynomial::constant(n, Rational(num));
            }
            case Tok::Identifier: {
                if (is_keyword(t.text))
                    throw ParseError(t.line, t.column,
                                     "'" + t.text + "' is a reserved word, not a variable");
                auto it = std::find(names.begin(), names.end(), t.text);
                if (it == names.end())
                    throw ParseError(t.line, t.column, "unknown identifier '" + t.text + "'");
                return Polynomial::variable(
                    n, static_cast<std::uint32_t>(std::distance(names.begin(), it)));
            }
            case Tok::LParen: {
                Polynomial inner = parse_expr(names);
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Minus: {
                // A leading minus inside a product: applies to the next base.
                Polynomial inner = parse_base(names);
                return Polynomial::constant(n, -1) * inner;
            }
            default:
                throw ParseError(t.line, t.column,
                                 "expected a literal, variable or parenthesized expression, got '" +
                                     (t.kind == Tok::End ? std::string("end of input") : t.text) +
                                     "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

}  // namespace

const PolynomialMap* MapDocument::find_map(const std::string& name) const {
    for (const NamedMap& m : maps)
        if (m.name == name) return &m.map;
    return nullptr;
}

const PolynomialMap* MapDocument::find_inverse(const std::string& name) const {
    for (const NamedMap& m : inverses)
        if (m.name == name) return &m.map;
    return nullptr;
}

MapDocument parse_document(const std::string& text) {
    Lexer lexer(text);
    Parser parser(lexer.run());
    return parser.run();
}

std::string print_document(const MapDocument& doc) {
    std::ostringstream os;
    os << "ring ";
    for (std::size_t i = 0; i < doc.ring.size(); ++i) {
        if (i) os << ", ";
        os << doc.ring[i];
    }
    os << "\n";
    auto tuple = [&](const std::vector<Polynomial>& comps, const std::vector<std::string>& names) {
        os << "(";
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (i) os << ", ";
            os << to_string(comps[i], names);
        }
        os << ")";
    };
    for (const NamedMap& m : doc.maps) {
        os << "map " << m.name << " = ";
        tuple(m.map.components, doc.ring);
        os << "\n";
        if (const PolynomialMap* inv = doc.find_inverse(m.name)) {
            os << "inverse " << m.name << " = ";
            tuple(inv->components, doc.ring);
            os << "\n";
        }
    }
    for (const WitnessDecl& w : doc.witnesses) {
        os << "witness " << w.name << " for " << w.map_name << " params ";
        for (std::size_t i = 0; i < w.params.size(); ++i) {
            if (i) os << ", ";
            os << w.params[i];
        }
        os << " = ";
        tuple(w.psi, w.params);
        os << "\n";
    }
    return os.str();
}

}  // namespace fixlocus
