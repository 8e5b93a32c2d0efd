#include "qcw/expr.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace qcw {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + std::move(message)),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
    Integer, Q, F, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals,
    Mod, End
};

struct Token {
    Tok kind;
    Int value;  // Integer literal or f-subscript
    int line;
    int column;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Integer: return "integer";
        case Tok::Q: return "'q'";
        case Tok::F: return "'f<subscript>'";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Equals: return "'='";
        case Tok::Mod: return "'mod'";
        case Tok::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            const int line = line_, col = col_;
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, 0, line, col});
                break;
            }
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back({Tok::Integer, read_integer(), line, col});
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                out.push_back(read_word(line, col));
            } else {
                Tok k;
                switch (c) {
                    case '+': k = Tok::Plus; break;
                    case '-': k = Tok::Minus; break;
                    case '*': k = Tok::Star; break;
                    case '/': k = Tok::Slash; break;
                    case '^': k = Tok::Caret; break;
                    case '(': k = Tok::LParen; break;
                    case ')': k = Tok::RParen; break;
                    case '=': k = Tok::Equals; break;
                    default:
                        throw ParseError(std::string("unexpected character '") + c + "'",
                                         line, col);
                }
                advance();
                out.push_back({k, 0, line, col});
            }
        }
        return out;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    Int read_integer() {
        std::string digits;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_];
            advance();
        }
        return Int(digits);
    }

    Token read_word(int line, int col) {
        std::string word;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            word += text_[pos_];
            advance();
        }
        if (word == "q") return {Tok::Q, 0, line, col};
        if (word == "mod") return {Tok::Mod, 0, line, col};
        if (word == "f") {
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected subscript digits after 'f'", line, col_);
            return {Tok::F, read_integer(), line, col};
        }
        throw ParseError("unknown name '" + word + "' (expected q, f<n> or mod)",
                         line, col);
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(Lexer(text).run()) {}

    EtaExpr expr_only() {
        EtaExpr e = expr();
        expect(Tok::End);
        return e;
    }

    IdentityClaim identity() {
        IdentityClaim c;
        c.lhs = expr();
        if (peek().kind != Tok::Equals) {
            throw ParseError(std::string("expected '=' between the two sides, got ") +
                                 tok_name(peek().kind),
                             peek().line, peek().column);
        }
        next();
        c.rhs = expr();
        if (peek().kind == Tok::LParen) {
            next();
            expect(Tok::Mod);
            const Token m = expect(Tok::Integer);
            if (m.value < 2)
                throw ParseError("modulus must be >= 2", m.line, m.column);
            c.modulus = m.value;
            expect(Tok::RParen);
        }
        expect(Tok::End);
        return c;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    Token expect(Tok kind) {
        if (peek().kind != kind) {
            throw ParseError(std::string("expected ") + tok_name(kind) + ", got " +
                                 tok_name(peek().kind),
                             peek().line, peek().column);
        }
        return next();
    }

    EtaExpr expr() {
        EtaExpr e;
        int sign = 1;
        if (peek().kind == Tok::Minus) { next(); sign = -1; }
        e.terms.push_back(term(sign));
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = next().kind == Tok::Plus ? 1 : -1;
            e.terms.push_back(term(sign));
        }
        e = canonicalize(std::move(e));
        if (e.terms.empty()) {
            throw ParseError("expression has no nonzero terms", peek().line,
                             peek().column);
        }
        return e;
    }

    EtaQuotient term(int sign) {
        EtaQuotient t;
        t.coeff = sign;
        atom(t, false);
        while (peek().kind == Tok::Star) {
            next();
            atom(t, false);
        }
        if (peek().kind == Tok::Slash) {
            next();
            if (peek().kind == Tok::LParen) {
                next();
                atom(t, true);
                while (peek().kind == Tok::Star) {
                    next();
                    atom(t, true);
                }
                expect(Tok::RParen);
            } else {
                atom(t, true);
            }
        }
        return t;
    }

    void atom(EtaQuotient& t, bool denominator) {
        const Token tok = peek();
        switch (tok.kind) {
            case Tok::Integer: {
                next();
                if (denominator && tok.value != 1) {
                    throw ParseError("integer divisor " + tok.value.str() +
                                         " is not a unit; only f-factors may be inverted",
                                     tok.line, tok.column);
                }
                if (!denominator) t.coeff *= tok.value;
                break;
            }
            case Tok::Q: {
                next();
                const Int e = exponent();
                if (denominator && e != 0) {
                    throw ParseError(
                        "q in a denominator would give negative q-valuation",
                        tok.line, tok.column);
                }
                t.qpow += static_cast<int>(e);
                break;
            }
            case Tok::F: {
                next();
                if (tok.value == 0)
                    throw ParseError("f0 has no meaning (subscript must be >= 1)",
                                     tok.line, tok.column);
                const int r = static_cast<int>(tok.value);
                const int e = static_cast<int>(exponent());
                const int delta = denominator ? -e : e;
                if (delta != 0) {
                    t.factors[r] += delta;
                    if (t.factors[r] == 0) t.factors.erase(r);
                }
                break;
            }
            default:
                throw ParseError(std::string("expected integer, q or f<n>, got ") +
                                     tok_name(tok.kind),
                                 tok.line, tok.column);
        }
    }

    Int exponent() {
        if (peek().kind != Tok::Caret) return 1;
        next();
        return expect(Tok::Integer).value;
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

bool term_less(const EtaQuotient& a, const EtaQuotient& b) {
    if (a.qpow != b.qpow) return a.qpow < b.qpow;
    if (a.factors != b.factors) {
        return std::lexicographical_compare(a.factors.begin(), a.factors.end(),
                                            b.factors.begin(), b.factors.end());
    }
    return a.coeff < b.coeff;
}

}  // namespace

EtaExpr parse_expr(const std::string& text) { return Parser(text).expr_only(); }

IdentityClaim parse_identity(const std::string& text) {
    return Parser(text).identity();
}

EtaExpr canonicalize(EtaExpr e) {
    std::erase_if(e.terms, [](const EtaQuotient& t) { return t.coeff == 0; });
    std::stable_sort(e.terms.begin(), e.terms.end(), term_less);
    return e;
}

std::string print(const EtaQuotient& t) {
    std::ostringstream out;
    if (t.coeff < 0) out << "-";
    const Int c = abs(t.coeff);

    std::vector<std::string> num;
    if (c != 1) num.push_back(c.str());
    if (t.qpow == 1) num.push_back("q");
    else if (t.qpow > 1) num.push_back("q^" + std::to_string(t.qpow));
    std::vector<std::string> den;
    for (const auto& [r, e] : t.factors) {
        const int a = e > 0 ? e : -e;
        std::string s = "f" + std::to_string(r);
        if (a != 1) s += "^" + std::to_string(a);
        (e > 0 ? num : den).push_back(std::move(s));
    }
    if (num.empty()) num.push_back("1");

    for (size_t i = 0; i < num.size(); ++i) {
        if (i) out << "*";
        out << num[i];
    }
    if (!den.empty()) {
        out << "/";
        if (den.size() > 1) out << "(";
        for (size_t i = 0; i < den.size(); ++i) {
            if (i) out << "*";
            out << den[i];
        }
        if (den.size() > 1) out << ")";
    }
    return out.str();
}

std::string print(const EtaExpr& e) {
    std::ostringstream out;
    for (size_t i = 0; i < e.terms.size(); ++i) {
        const EtaQuotient& t = e.terms[i];
        if (i == 0) {
            out << print(t);
            continue;
        }
        out << (t.coeff < 0 ? " - " : " + ");
        EtaQuotient abs_t = t;
        abs_t.coeff = abs(t.coeff);
        out << print(abs_t);
    }
    return out.str();
}

Series evaluate(const EtaExpr& e, int order, const std::optional<Int>& modulus) {
    if (e.terms.empty())
        throw std::invalid_argument("evaluate: expression has no terms");
    Series acc = eta_quotient(e.terms.front(), order, modulus);
    for (size_t i = 1; i < e.terms.size(); ++i)
        acc = add(acc, eta_quotient(e.terms[i], order, modulus));
    return acc;
}

std::vector<IdentityClaim> parse_fixture_text(const std::string& text) {
    std::vector<IdentityClaim> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);

        std::string label;
        if (line.front() == '[') {
            const auto close = line.find(']');
            if (close == std::string::npos)
                throw ParseError("unterminated [label]", lineno, 1);
            label = line.substr(1, close - 1);
            line = line.substr(close + 1);
        }
        try {
            IdentityClaim c = parse_identity(line);
            c.label = label.empty() ? line : label;
            out.push_back(std::move(c));
        } catch (const ParseError& e) {
            throw ParseError("fixture line " + std::to_string(lineno) + ": " +
                                 e.what(),
                             lineno, e.column());
        }
    }
    return out;
}

std::vector<IdentityClaim> load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture_text(buf.str());
}

}  // namespace qcw
