#include "plab/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace plab {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Tok::End, "", start};
            return;
        }
        char c = src_[i_];
        auto single = [&](Tok k) {
            ++i_;
            tok_ = {k, std::string(1, c), start};
        };
        switch (c) {
            case '+': return single(Tok::Plus);
            case '-': return single(Tok::Minus);
            case '*': return single(Tok::Star);
            case '/': return single(Tok::Slash);
            case '^': return single(Tok::Caret);
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            tok_ = {Tok::Number, std::string(src_.substr(start, i_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            tok_ = {Tok::Ident, std::string(src_.substr(start, i_ - start)), start};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_{Tok::End, "", 0};
};

class Parser {
public:
    Parser(std::string_view src, std::span<const std::string> variables)
        : lex_(src), nvars_(variables.size()) {
        for (std::size_t k = 0; k < variables.size(); ++k) index_.emplace(variables[k], k);
    }

    RationalFunction parse() {
        RationalFunction r = sum();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) throw ParseError("unexpected '" + t.text + "'", t.pos);
        return r;
    }

private:
    RationalFunction sum() {
        RationalFunction acc = product();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                acc += product();
            } else if (k == Tok::Minus) {
                lex_.take();
                acc -= product();
            } else {
                return acc;
            }
        }
    }

    RationalFunction product() {
        RationalFunction acc = factor();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.take();
                acc *= factor();
            } else if (k == Tok::Slash) {
                Token t = lex_.take();
                RationalFunction d = factor();
                if (d.is_zero()) throw ParseError("division by zero", t.pos);
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            return -factor();
        }
        RationalFunction base = primary();
        while (lex_.peek().kind == Tok::Caret) {
            Token caret = lex_.take();
            std::int64_t e = exponent();
            try {
                base = base.pow(e);
            } catch (const DivisionByZeroError&) {
                throw ParseError("negative power of the zero polynomial", caret.pos);
            }
        }
        return base;
    }

    std::int64_t exponent() {
        bool negative = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negative = true;
        }
        Token t = lex_.take();
        if (t.kind != Tok::Number)
            throw ParseError("expected an integer exponent after '^'", t.pos);
        std::int64_t v = 0;
        for (char c : t.text) {
            if (v > (INT64_MAX - 9) / 10) throw ParseError("exponent too large", t.pos);
            v = v * 10 + (c - '0');
        }
        return negative ? -v : v;
    }

    RationalFunction primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number:
                return RationalFunction::constant(nvars_, Rational(mpz_class(t.text)));
            case Tok::Ident: {
                auto it = index_.find(t.text);
                if (it == index_.end())
                    throw ParseError("unknown identifier '" + t.text + "'", t.pos);
                return RationalFunction::variable(nvars_, it->second);
            }
            case Tok::LParen: {
                RationalFunction inner = sum();
                Token close = lex_.take();
                if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
                return inner;
            }
            default:
                throw ParseError("unexpected '" + (t.kind == Tok::End ? "end of input" : t.text) + "'",
                                 t.pos);
        }
    }

    Lexer lex_;
    std::size_t nvars_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

} // namespace

RationalFunction parse_expr(std::string_view text, std::span<const std::string> variables) {
    return Parser(text, variables).parse();
}

std::string format_term(const ExponentVector& e, const Rational& c,
                        std::span<const std::string> variables) {
    // factors listed alphabetically by variable name
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0) order.push_back(k);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return variables[a] < variables[b]; });
    std::string vars;
    for (std::size_t k : order) {
        if (!vars.empty()) vars += "*";
        vars += variables[k];
        if (e[k] != 1) vars += "^" + std::to_string(e[k]);
    }
    if (vars.empty()) return c.str();
    if (c.is_one()) return vars;
    if (c == Rational(-1)) return "-" + vars;
    return c.str() + "*" + vars;
}

std::string format_laurent(const LaurentPolynomial& f, std::span<const std::string> variables) {
    if (f.nvars() != variables.size())
        throw DimensionError("format: variable name count mismatch");
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        if (out.empty()) {
            out = format_term(e, c, variables);
        } else if (c.sign() < 0) {
            out += " - " + format_term(e, -c, variables);
        } else {
            out += " + " + format_term(e, c, variables);
        }
    }
    return out;
}

std::string format_expr(const RationalFunction& f, std::span<const std::string> variables) {
    if (f.nvars() != variables.size())
        throw DimensionError("format: variable name count mismatch");
    if (f.is_zero()) return "0";
    LaurentPolynomial top = f.numerator().shifted(f.monomial_factor());
    std::string num = format_laurent(top, variables);
    if (f.denominator().is_constant()) return num;
    if (top.term_count() > 1) num = "(" + num + ")";
    return num + "/(" + format_laurent(f.denominator(), variables) + ")";
}

} // namespace plab
