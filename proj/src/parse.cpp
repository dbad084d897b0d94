#include "quatroots/parse.hpp"

#include <cctype>
#include <limits>

namespace quatroots {

namespace {

struct Token {
    enum class Kind { number, unit, var, caret, plus, minus, star, lparen, rparen, end } kind;
    std::string text;
    int line = 1;
    int column = 1;
};

std::vector<Token> lex(std::string_view in) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t pos = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t m = 0; m < n; ++m, ++pos) {
            if (in[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (pos < in.size()) {
        const char ch = in[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        Token tok{Token::Kind::end, std::string(1, ch), line, col};
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t end = pos;
            while (end < in.size() && std::isdigit(static_cast<unsigned char>(in[end]))) ++end;
            if (end < in.size() && in[end] == '/') {
                std::size_t den = end + 1;
                while (den < in.size() && std::isdigit(static_cast<unsigned char>(in[den]))) ++den;
                if (den == end + 1) {
                    advance(end - pos);
                    throw ParseError("expected denominator after '/'", line, col + 1, "/");
                }
                end = den;
            }
            tok.kind = Token::Kind::number;
            tok.text = std::string(in.substr(pos, end - pos));
            const auto slash = tok.text.find('/');
            if (slash != std::string::npos && tok.text.find_first_not_of('0', slash + 1) == std::string::npos)
                throw ParseError("zero denominator", line, col, tok.text);
            advance(end - pos);
            out.push_back(std::move(tok));
            continue;
        }
        switch (ch) {
            case 'i': case 'j': case 'k': tok.kind = Token::Kind::unit; break;
            case 'x': tok.kind = Token::Kind::var; break;
            case '^': tok.kind = Token::Kind::caret; break;
            case '+': tok.kind = Token::Kind::plus; break;
            case '-': tok.kind = Token::Kind::minus; break;
            case '*': tok.kind = Token::Kind::star; break;
            case '(': tok.kind = Token::Kind::lparen; break;
            case ')': tok.kind = Token::Kind::rparen; break;
            default: throw ParseError("unexpected character", line, col, tok.text);
        }
        advance(1);
        out.push_back(std::move(tok));
    }
    out.push_back(Token{Token::Kind::end, "", line, col});
    return out;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    PolyExpr parse_all() {
        PolyExpr e = poly();
        if (peek().kind != Token::Kind::end) fail("unexpected token");
        return e;
    }

  private:
    using K = Token::Kind;

    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg, t.line, t.column, t.kind == K::end ? "end of input" : t.text);
    }

    PolyExpr poly() {
        PolyExpr acc;
        if (peek().kind == K::minus || peek().kind == K::plus) {
            const bool neg = take().kind == K::minus;
            acc = term();
            if (neg) acc = PolyExpr{PolyExpr::Kind::negate, {std::move(acc)}};
        } else {
            acc = term();
        }
        while (peek().kind == K::plus || peek().kind == K::minus) {
            const auto kind = take().kind == K::plus ? PolyExpr::Kind::sum : PolyExpr::Kind::difference;
            PolyExpr rhs = term();
            acc = PolyExpr{kind, {std::move(acc), std::move(rhs)}};
        }
        return acc;
    }

    static bool starts_factor(K k) { return k == K::number || k == K::unit || k == K::var || k == K::lparen; }

    PolyExpr term() {
        if (!starts_factor(peek().kind)) fail("expected a term");
        PolyExpr prod{PolyExpr::Kind::product, {}};
        prod.children.push_back(factor());
        while (true) {
            if (peek().kind == K::star) {
                take();
                if (peek().kind == K::minus) {
                    take();
                    if (peek().kind != K::number && peek().kind != K::unit) fail("expected a literal after '-'");
                    PolyExpr lit = factor();
                    lit = PolyExpr{PolyExpr::Kind::negate, {std::move(lit)}};
                    prod.children.push_back(std::move(lit));
                    continue;
                }
                if (!starts_factor(peek().kind)) fail("expected a factor after '*'");
                prod.children.push_back(factor());
            } else if (starts_factor(peek().kind)) {
                prod.children.push_back(factor());
            } else {
                break;
            }
        }
        if (prod.children.size() == 1) return std::move(prod.children.front());
        return prod;
    }

    PolyExpr factor() {
        PolyExpr base;
        const Token& t = take();
        switch (t.kind) {
            case K::number:
                base.kind = PolyExpr::Kind::literal;
                base.value = parse_rational(t.text);
                // rational immediately followed by a unit forms one literal
                if (peek().kind == K::unit && peek().line == t.line &&
                    peek().column == t.column + static_cast<int>(t.text.size())) {
                    base.unit = take().text[0];
                }
                break;
            case K::unit:
                base.kind = PolyExpr::Kind::literal;
                base.unit = t.text[0];
                break;
            case K::var:
                base.kind = PolyExpr::Kind::variable;
                break;
            case K::lparen:
                base = poly();
                if (peek().kind != K::rparen) fail("expected ')'");
                take();
                break;
            default:
                --pos_;
                fail("expected a factor");
        }
        if (peek().kind == K::caret) {
            take();
            if (peek().kind != K::number || peek().text.find('/') != std::string::npos)
                fail("expected a nonnegative integer exponent");
            const Token& e = take();
            if (e.text.size() > 6) throw ParseError("exponent too large", e.line, e.column, e.text);
            PolyExpr pw{PolyExpr::Kind::power, {std::move(base)}};
            pw.exponent = static_cast<unsigned>(std::stoul(e.text));
            return pw;
        }
        return base;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse(std::string_view input) { return Parser(lex(input)).parse_all(); }

QPolyQ lower(const PolyExpr& e, const AlgebraQ& alg) {
    using Kind = PolyExpr::Kind;
    switch (e.kind) {
        case Kind::sum: return lower(e.children[0], alg) + lower(e.children[1], alg);
        case Kind::difference: return lower(e.children[0], alg) - lower(e.children[1], alg);
        case Kind::negate: return -lower(e.children[0], alg);
        case Kind::product: {
            QPolyQ acc = QPolyQ::constant(QuatQ(alg, 1));
            for (const auto& c : e.children) acc = acc * lower(c, alg);
            return acc;
        }
        case Kind::power: {
            const QPolyQ base = lower(e.children[0], alg);
            QPolyQ acc = QPolyQ::constant(QuatQ(alg, 1));
            for (unsigned n = 0; n < e.exponent; ++n) acc = acc * base;
            return acc;
        }
        case Kind::variable: return QPolyQ::x(alg);
        case Kind::literal: {
            switch (e.unit) {
                case 'i': return QPolyQ::constant(QuatQ(alg, 0, e.value));
                case 'j': return QPolyQ::constant(QuatQ(alg, 0, 0, e.value));
                case 'k': return QPolyQ::constant(QuatQ(alg, 0, 0, 0, e.value));
                default: return QPolyQ::constant(QuatQ(alg, e.value));
            }
        }
    }
    throw InvariantViolation("unknown expression node");
}

QPolyQ parse_poly(std::string_view input, const AlgebraQ& alg) { return lower(parse(input), alg); }

QuatQ parse_quaternion(std::string_view input, const AlgebraQ& alg) {
    const QPolyQ p = parse_poly(input, alg);
    if (p.degree() > Degree(0)) throw ParseError("expected a quaternion, found a polynomial in x", 1, 1, std::string(input));
    return p.coeff(0);
}

namespace {

// Coefficient as a single signed component, e.g. -3/2 with unit "i".
struct Monomial {
    bool single = false;
    bool negative = false;
    Rational magnitude;
    const char* unit = "";
};

Monomial single_component(const QuatQ& q) {
    static const char* units[] = {"", "i", "j", "k"};
    Monomial m;
    int count = 0;
    for (std::size_t n = 0; n < 4; ++n) {
        if (is_zero(q[n])) continue;
        ++count;
        m.negative = sgn(q[n]) < 0;
        m.magnitude = abs(q[n]);
        m.unit = units[n];
    }
    m.single = count == 1;
    return m;
}

std::string component_text(const Rational& mag, const char* unit) {
    if (*unit && mag == 1) return unit;
    return to_string(mag) + unit;
}

}  // namespace

std::string to_text(const QuatQ& q) {
    static const char* units[] = {"", "i", "j", "k"};
    std::string out;
    for (std::size_t n = 0; n < 4; ++n) {
        if (is_zero(q[n])) continue;
        const bool neg = sgn(q[n]) < 0;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        out += component_text(abs(q[n]), units[n]);
    }
    return out.empty() ? "0" : out;
}

std::string to_text(const QPolyQ& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t d = p.coeffs().size(); d-- > 0;) {
        const QuatQ& c = p.coeffs()[d];
        if (c.is_zero()) continue;
        const std::string mono = d == 0 ? "" : d == 1 ? "x" : "x^" + std::to_string(d);
        const Monomial m = single_component(c);
        bool neg = false;
        std::string body;
        if (m.single) {
            neg = m.negative;
            if (d > 0 && !*m.unit && m.magnitude == 1) body = mono;
            else body = component_text(m.magnitude, m.unit) + (d > 0 ? " " + mono : "");
        } else {
            body = "(" + to_text(c) + ")" + (d > 0 ? " " + mono : "");
        }
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        out += body;
    }
    return out;
}

std::string to_text(const CPolyQ& p) { return to_text(QPolyQ::from_central(AlgebraQ::hamilton(), p)); }

}  // namespace quatroots
