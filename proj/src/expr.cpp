#include "fschur/expr.hpp"

#include <cctype>
#include <sstream>

namespace fschur {

namespace {

struct Token {
    enum class Type { Plus, Minus, Star, LBracket, RBracket, Comma, Integer, Basis, End };
    Type type = Type::End;
    Int value = 0;  // Integer
    char basis = 0; // Basis
    std::size_t line = 1, column = 1;
};

const char* token_name(Token::Type t) {
    switch (t) {
    case Token::Type::Plus: return "'+'";
    case Token::Type::Minus: return "'-'";
    case Token::Type::Star: return "'*'";
    case Token::Type::LBracket: return "'['";
    case Token::Type::RBracket: return "']'";
    case Token::Type::Comma: return "','";
    case Token::Type::Integer: return "integer";
    case Token::Type::Basis: return "'F' or 's'";
    case Token::Type::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        current_ = Token{};
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.type = Token::Type::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
        case '+': current_.type = Token::Type::Plus; bump(); return;
        case '-': current_.type = Token::Type::Minus; bump(); return;
        case '*': current_.type = Token::Type::Star; bump(); return;
        case '[': current_.type = Token::Type::LBracket; bump(); return;
        case ']': current_.type = Token::Type::RBracket; bump(); return;
        case ',': current_.type = Token::Type::Comma; bump(); return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int value = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                Int digit = text_[pos_] - '0';
                value = checked_add(checked_mul(value, 10), digit);
                bump();
            }
            current_.type = Token::Type::Integer;
            current_.value = value;
            return;
        }
        if (c == 'F' || c == 's') {
            current_.type = Token::Type::Basis;
            current_.basis = c;
            bump();
            return;
        }
        throw ParseError(ParseError::Kind::Syntax, line_, column_,
                         std::string("unexpected character '") + c + "'",
                         "'F', 's', integer, '+', '-' or '*'");
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, column_ = 1;
    Token current_;
};

[[noreturn]] void fail_expected(const Token& got, const std::string& expected) {
    throw ParseError(ParseError::Kind::Syntax, got.line, got.column,
                     std::string("unexpected ") + token_name(got.type), expected);
}

Token expect(Lexer& lex, Token::Type type, const std::string& expected) {
    if (lex.peek().type != type)
        fail_expected(lex.peek(), expected);
    return lex.take();
}

// atom := ('F'|'s') '[' [sint (',' sint)*] ']'
ExprAtom parse_atom(Lexer& lex) {
    Token basis = expect(lex, Token::Type::Basis, "'F' or 's'");
    ExprAtom atom;
    atom.basis = basis.basis;
    atom.line = basis.line;
    atom.column = basis.column;
    expect(lex, Token::Type::LBracket, "'['");
    std::vector<Int> parts;
    if (lex.peek().type != Token::Type::RBracket) {
        for (;;) {
            bool negative = false;
            Token t = lex.peek();
            if (t.type == Token::Type::Minus) {
                negative = true;
                lex.take();
            }
            Token num = expect(lex, Token::Type::Integer, "integer");
            parts.push_back(negative ? -num.value : num.value);
            if (lex.peek().type != Token::Type::Comma)
                break;
            lex.take();
        }
    }
    expect(lex, Token::Type::RBracket, "']' or ','");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) {
            std::ostringstream os;
            os << "invalid composition in " << atom.basis << "[...]: part "
               << (i + 1) << " is " << parts[i] << "; every part must be >= 1";
            throw ParseError(ParseError::Kind::Validity, atom.line, atom.column,
                             os.str());
        }
    }
    atom.index = Composition(std::move(parts));
    return atom;
}

// term := [integer '*']? atom
ExprAtom parse_term(Lexer& lex, Int sign) {
    ExprAtom atom;
    if (lex.peek().type == Token::Type::Integer) {
        Token coeff = lex.take();
        expect(lex, Token::Type::Star, "'*'");
        atom = parse_atom(lex);
        atom.coeff = checked_mul(sign, coeff.value);
        return atom;
    }
    atom = parse_atom(lex);
    atom.coeff = sign;
    return atom;
}

} // namespace

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column,
                       const std::string& message, const std::string& expected)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message +
                         (expected.empty() ? "" : " (expected " + expected + ")")),
      kind_(kind), line_(line), column_(column), expected_(expected) {}

std::vector<ExprAtom> parse_atoms(const std::string& text) {
    Lexer lex(text);
    std::vector<ExprAtom> atoms;
    if (lex.peek().type == Token::Type::End)
        return atoms; // empty expression = zero
    // A bare "0" also denotes the zero expression; it is what the canonical
    // serialization prints for it.
    bool have_first = false;
    if (lex.peek().type == Token::Type::Integer && lex.peek().value == 0) {
        lex.take();
        if (lex.peek().type == Token::Type::End)
            return atoms;
        expect(lex, Token::Type::Star, "'*' or end of input");
        ExprAtom a = parse_atom(lex);
        a.coeff = 0;
        atoms.push_back(std::move(a));
        have_first = true;
    }
    if (!have_first) {
        Int sign = 1;
        if (lex.peek().type == Token::Type::Minus) {
            lex.take();
            sign = -1;
        }
        atoms.push_back(parse_term(lex, sign));
    }
    while (lex.peek().type != Token::Type::End) {
        Token op = lex.peek();
        Int sign = 1;
        if (op.type == Token::Type::Plus)
            sign = 1;
        else if (op.type == Token::Type::Minus)
            sign = -1;
        else
            fail_expected(op, "'+', '-' or end of input");
        lex.take();
        atoms.push_back(parse_term(lex, sign));
    }
    return atoms;
}

Expression combine(const std::vector<ExprAtom>& atoms) {
    Expression e;
    for (const auto& atom : atoms) {
        auto& terms = atom.basis == 'F' ? e.f_terms : e.s_terms;
        if (atom.coeff == 0)
            continue;
        auto [it, inserted] = terms.try_emplace(atom.index, atom.coeff);
        if (!inserted && (it->second = checked_add(it->second, atom.coeff)) == 0)
            terms.erase(it);
    }
    return e;
}

Expression parse_expression(const std::string& text) {
    return combine(parse_atoms(text));
}

namespace {

void render_terms(std::ostringstream& os, bool& first,
                  const std::map<Composition, Int, CompositionLess>& terms,
                  char basis) {
    for (const auto& [index, coeff] : terms) {
        Int mag = coeff < 0 ? -coeff : coeff;
        if (first)
            os << (coeff < 0 ? "-" : "");
        else
            os << (coeff < 0 ? " - " : " + ");
        first = false;
        if (mag != 1)
            os << mag << "*";
        os << basis << "[";
        const auto& parts = index.parts();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                os << ",";
            os << parts[i];
        }
        os << "]";
    }
}

} // namespace

std::string serialize(const Expression& e) {
    if (e.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    render_terms(os, first, e.f_terms, 'F');
    render_terms(os, first, e.s_terms, 's');
    return os.str();
}

std::string serialize(const SchurExpansion& e) { return to_string(e); }

SchurExpansion evaluate_schur(const Expression& e) {
    SchurExpansion out = f_to_schur(e.f_terms);
    for (const auto& [L, coeff] : e.s_terms) {
        SignedPartition sp = straighten(L);
        if (!sp.is_zero())
            add_term(out, sp.shape(), checked_mul(coeff, sp.sign()));
    }
    return out;
}

SparsePolynomial evaluate_poly(const Expression& e, std::size_t nvars) {
    SparsePolynomial out = expansion_poly(e.f_terms, nvars);
    for (const auto& [L, coeff] : e.s_terms)
        out += jacobi_trudi_poly(L, nvars).scaled(coeff);
    return out;
}

} // namespace fschur
