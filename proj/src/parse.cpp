#include "wres/parse.hpp"

#include <cctype>

namespace wres {

namespace {

struct Lexer {
    const std::string& src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Parser {
    Lexer lex;
    RingPtr ring;

    Polynomial parse_expr() {
        bool neg = false;
        if (lex.eat('-'))
            neg = true;
        else
            lex.eat('+');
        Polynomial p = parse_term();
        if (neg) p = -p;
        while (true) {
            if (lex.eat('+'))
                p = p + parse_term();
            else if (lex.eat('-'))
                p = p - parse_term();
            else
                break;
        }
        return p;
    }

    Polynomial parse_term() {
        Polynomial p = parse_power();
        while (lex.eat('*')) p = p * parse_power();
        return p;
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (!lex.eat('^')) return base;
        lex.skip_ws();
        if (lex.peek() == '-') throw ParseError("negative exponent", lex.pos);
        if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
            throw ParseError("expected exponent", lex.pos);
        long k = 0;
        while (lex.pos < lex.src.size() && std::isdigit(static_cast<unsigned char>(lex.src[lex.pos]))) {
            k = k * 10 + (lex.src[lex.pos] - '0');
            if (k > 100000) throw ParseError("exponent too large", lex.pos);
            ++lex.pos;
        }
        return base.pow(k);
    }

    Polynomial parse_atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.eat('(');
            Polynomial p = parse_expr();
            if (!lex.eat(')')) throw ParseError("expected ')'", lex.pos);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (ident_start(c)) return parse_variable();
        throw ParseError("syntax error", lex.pos);
    }

    Polynomial parse_number() {
        Int num = read_integer();
        size_t save = lex.pos;
        lex.skip_ws();
        if (lex.pos < lex.src.size() && lex.src[lex.pos] == '/') {
            ++lex.pos;
            lex.skip_ws();
            if (lex.pos >= lex.src.size() ||
                !std::isdigit(static_cast<unsigned char>(lex.src[lex.pos])))
                throw ParseError("expected denominator", lex.pos);
            Int den = read_integer();
            if (den == 0) throw ParseError("zero denominator", lex.pos);
            return Polynomial::constant(ring, Rat(num, den));
        }
        lex.pos = save;
        return Polynomial::constant(ring, Rat(num));
    }

    Int read_integer() {
        lex.skip_ws();
        std::string digits;
        while (lex.pos < lex.src.size() && std::isdigit(static_cast<unsigned char>(lex.src[lex.pos])))
            digits += lex.src[lex.pos++];
        return Int(digits);
    }

    Polynomial parse_variable() {
        lex.skip_ws();
        size_t start = lex.pos;
        std::string name;
        name += lex.src[lex.pos++];
        while (lex.pos < lex.src.size() && ident_cont(lex.src[lex.pos])) name += lex.src[lex.pos++];
        long idx = ring->index_of(name);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
        return Polynomial::variable(ring, static_cast<size_t>(idx));
    }
};

} // namespace

Polynomial parse_poly(const std::string& src, const RingPtr& ring) {
    Parser p{Lexer{src}, ring};
    Polynomial result = p.parse_expr();
    p.lex.skip_ws();
    if (p.lex.pos != src.size()) throw ParseError("unexpected input", p.lex.pos);
    return result;
}

} // namespace wres
