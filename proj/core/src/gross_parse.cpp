#include "grosstm/gross_parse.hpp"

#include "grosstm/errors.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace grosstm {

namespace {

enum class Tok { integer, gross, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    BigInt value;  // integer only
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                ++i;
            }
            out.push_back({Tok::integer, BigInt(std::string(text.substr(start, i - start))), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case 'G': kind = Tok::gross; break;
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '/': kind = Tok::slash; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, 0, i});
        ++i;
    }
    out.push_back({Tok::end, 0, text.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    GrossNumber parse() {
        GrossNumber value = expr();
        if (peek().kind != Tok::end) {
            throw SyntaxError("unexpected trailing input", peek().pos);
        }
        return value;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = index_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }

    const Token& next() {
        const Token& t = peek();
        if (t.kind != Tok::end) {
            ++index_;
        }
        return t;
    }

    GrossNumber expr() {
        GrossNumber value = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            bool plus = next().kind == Tok::plus;
            GrossNumber rhs = term();
            value = plus ? add(value, rhs) : sub(value, rhs);
        }
        return value;
    }

    GrossNumber term() {
        GrossNumber value = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            bool star = next().kind == Tok::star;
            GrossNumber rhs = factor();
            value = star ? mul(value, rhs) : div(value, rhs);
        }
        return value;
    }

    GrossNumber factor() {
        GrossNumber base = atom();
        if (peek().kind == Tok::caret) {
            next();
            GrossNumber exponent = atom();
            return pow(base, exponent);
        }
        return base;
    }

    GrossNumber atom() {
        const Token& t = next();
        switch (t.kind) {
            case Tok::minus:
                // unary minus binds looser than '^': -3^G is -(3^G)
                return negate(factor());
            case Tok::integer: {
                // INT '/' INT is a rational literal and binds tightest.
                if (peek().kind == Tok::slash && peek(1).kind == Tok::integer) {
                    next();
                    const Token& den = next();
                    if (den.value == 0) {
                        throw DivisionByZero();
                    }
                    return GrossNumber(Rational(t.value, den.value));
                }
                return GrossNumber(Rational(t.value));
            }
            case Tok::gross:
                return GrossNumber::grossone();
            case Tok::lparen: {
                GrossNumber inner = expr();
                if (peek().kind != Tok::rparen) {
                    throw SyntaxError("expected ')'", peek().pos);
                }
                next();
                return inner;
            }
            default:
                throw SyntaxError("expected a number, 'G', or '('", t.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace

GrossNumber parse_gross(std::string_view text) {
    return Parser(tokenize(text)).parse();
}

}  // namespace grosstm
