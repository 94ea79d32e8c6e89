#include "moyal/parser.hpp"

#include <cctype>

namespace moyal {

namespace {

struct Token {
    enum class Kind { integer, ident, plus, minus, star, caret, slash, lparen,
                      rparen, end };
    Kind kind;
    std::string text;
    size_t pos; // 1-based
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
        size_t pos = i_ + 1;
        if (i_ >= s_.size()) {
            tok_ = Token{Token::Kind::end, "", pos};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
                ++j;
            tok_ = Token{Token::Kind::integer, s_.substr(i_, j - i_), pos};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = Token{Token::Kind::ident, s_.substr(i_, j - i_), pos};
            i_ = j;
            return;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::plus; break;
            case '-': k = Token::Kind::minus; break;
            case '*': k = Token::Kind::star; break;
            case '^': k = Token::Kind::caret; break;
            case '/': k = Token::Kind::slash; break;
            case '(': k = Token::Kind::lparen; break;
            case ')': k = Token::Kind::rparen; break;
            default:
                throw ParseError(pos, std::string("unexpected character '") + c +
                                          "'");
        }
        tok_ = Token{k, std::string(1, c), pos};
        ++i_;
    }

    const std::string& s_;
    size_t i_ = 0;
    Token tok_{Token::Kind::end, "", 0};
};

using AstPtr = std::unique_ptr<ExprAst>;

AstPtr node(ExprAst::Kind k, size_t pos) {
    auto n = std::make_unique<ExprAst>();
    n->kind = k;
    n->pos = pos;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) {}

    AstPtr parse() {
        AstPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw ParseError(t.pos, "unexpected '" + t.text + "'");
        return e;
    }

private:
    BigInt integer_value(const Token& t) { return BigInt(t.text); }

    AstPtr expr() {
        AstPtr e = term();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::plus || t.kind == Token::Kind::minus) {
                Token op = lex_.take();
                AstPtr r = term();
                AstPtr n = node(op.kind == Token::Kind::plus ? ExprAst::Kind::add
                                                             : ExprAst::Kind::sub,
                                op.pos);
                n->lhs = std::move(e);
                n->rhs = std::move(r);
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    AstPtr term() {
        AstPtr e = factor();
        while (lex_.peek().kind == Token::Kind::star) {
            Token op = lex_.take();
            AstPtr r = factor();
            AstPtr n = node(ExprAst::Kind::mul, op.pos);
            n->lhs = std::move(e);
            n->rhs = std::move(r);
            e = std::move(n);
        }
        return e;
    }

    AstPtr factor() {
        AstPtr b = base();
        if (lex_.peek().kind == Token::Kind::caret) {
            Token op = lex_.take();
            Rational e = exponent(op.pos);
            AstPtr n = node(ExprAst::Kind::power, op.pos);
            n->lhs = std::move(b);
            n->exponent = e;
            return n;
        }
        return b;
    }

    Rational exponent(size_t caret_pos) {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::minus) {
            lex_.take();
            const Token& u = lex_.peek();
            if (u.kind != Token::Kind::integer)
                throw ParseError(caret_pos, "missing exponent after '^'");
            return -Rational(integer_value(lex_.take()));
        }
        if (t.kind == Token::Kind::integer)
            return Rational(integer_value(lex_.take()));
        if (t.kind == Token::Kind::lparen) {
            lex_.take();
            bool negative = false;
            if (lex_.peek().kind == Token::Kind::minus) {
                lex_.take();
                negative = true;
            }
            if (lex_.peek().kind != Token::Kind::integer)
                throw ParseError(lex_.peek().pos, "expected integer exponent");
            Rational num(integer_value(lex_.take()));
            Rational result = num;
            if (lex_.peek().kind == Token::Kind::slash) {
                lex_.take();
                if (lex_.peek().kind != Token::Kind::integer)
                    throw ParseError(lex_.peek().pos,
                                     "expected integer denominator");
                Rational den(integer_value(lex_.take()));
                if (den == 0)
                    throw ParseError(lex_.peek().pos, "zero denominator");
                result = num / den;
            }
            if (lex_.peek().kind != Token::Kind::rparen)
                throw ParseError(lex_.peek().pos, "expected ')'");
            lex_.take();
            return negative ? -result : result;
        }
        throw ParseError(caret_pos, "missing exponent after '^'");
    }

    AstPtr base() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::integer) {
            Token num = lex_.take();
            AstPtr n = node(ExprAst::Kind::number, num.pos);
            Rational v(integer_value(num));
            if (lex_.peek().kind == Token::Kind::slash) {
                lex_.take();
                if (lex_.peek().kind != Token::Kind::integer)
                    throw ParseError(lex_.peek().pos,
                                     "expected integer denominator");
                Token den = lex_.take();
                BigInt d = integer_value(den);
                if (d == 0) throw ParseError(den.pos, "zero denominator");
                v /= Rational(d);
            }
            n->value = v;
            return n;
        }
        if (t.kind == Token::Kind::ident) {
            Token id = lex_.take();
            if (id.text == "sqrt") {
                if (lex_.peek().kind != Token::Kind::lparen)
                    throw ParseError(lex_.peek().pos, "expected '(' after sqrt");
                lex_.take();
                AstPtr inner = expr();
                if (lex_.peek().kind != Token::Kind::rparen)
                    throw ParseError(lex_.peek().pos, "expected ')'");
                lex_.take();
                AstPtr n = node(ExprAst::Kind::sqrt_root, id.pos);
                n->lhs = std::move(inner);
                return n;
            }
            AstPtr n = node(ExprAst::Kind::generator, id.pos);
            n->name = id.text;
            return n;
        }
        if (t.kind == Token::Kind::lparen) {
            lex_.take();
            AstPtr inner = expr();
            if (lex_.peek().kind != Token::Kind::rparen)
                throw ParseError(lex_.peek().pos, "expected ')'");
            lex_.take();
            return inner;
        }
        if (t.kind == Token::Kind::minus) {
            Token op = lex_.take();
            AstPtr inner = factor();
            AstPtr n = node(ExprAst::Kind::neg, op.pos);
            n->lhs = std::move(inner);
            return n;
        }
        throw ParseError(t.pos, t.kind == Token::Kind::end
                                    ? "unexpected end of input"
                                    : "unexpected '" + t.text + "'");
    }

    Lexer lex_;
};

// Raise a polynomial to a rational power, with lattice checks against the
// algebra. Non-monomials only take nonnegative integer powers.
Poly poly_power(const Poly& base, const Rational& e, const PresentedAlgebra& alg,
                size_t pos) {
    if (e == 0) return Poly(Rational(1));
    if (base.is_zero()) {
        if (e > 0) return Poly();
        throw ParseError(pos, "zero base with negative exponent");
    }
    if (is_integer(e) && e > 0 && base.size() != 1) {
        if (num(e) > 64) throw ParseError(pos, "exponent too large");
        return base.pow(num(e).convert_to<unsigned>());
    }
    if (base.size() != 1)
        throw ParseError(pos, "fractional or negative power of a sum");
    const auto& [m, c] = *base.terms().begin();
    Monomial powered = m.pow(e);
    for (const auto& [id, ex] : powered.exponents()) {
        if (!is_integer(ex * alg.decl(id).radical_order))
            throw ParseError(pos, "exponent " + to_string(ex) + " of '" +
                                      alg.decl(id).name +
                                      "' lies outside its radical lattice");
    }
    Rational coef;
    if (is_integer(e)) {
        coef = pow_int(c, num(e).convert_to<long>());
    } else {
        unsigned q = den(e).convert_to<unsigned>();
        auto root = rational_root(c, q);
        if (!root)
            throw ParseError(pos, "coefficient " + to_string(c) +
                                      " has no exact " + std::to_string(q) +
                                      "-th root");
        coef = pow_int(*root, num(e).convert_to<long>());
    }
    return Poly::term(powered, coef);
}

Poly lower_node(const ExprAst& n, const PresentedAlgebra& alg) {
    switch (n.kind) {
        case ExprAst::Kind::number:
            return Poly(n.value);
        case ExprAst::Kind::generator: {
            int id = alg.find(n.name);
            if (id < 0)
                throw ParseError(n.pos, "unknown identifier '" + n.name + "' in " +
                                            alg.name());
            return Poly::gen(id);
        }
        case ExprAst::Kind::add:
            return lower_node(*n.lhs, alg) + lower_node(*n.rhs, alg);
        case ExprAst::Kind::sub:
            return lower_node(*n.lhs, alg) - lower_node(*n.rhs, alg);
        case ExprAst::Kind::mul:
            return lower_node(*n.lhs, alg) * lower_node(*n.rhs, alg);
        case ExprAst::Kind::neg:
            return -lower_node(*n.lhs, alg);
        case ExprAst::Kind::power:
            return poly_power(lower_node(*n.lhs, alg), n.exponent, alg, n.pos);
        case ExprAst::Kind::sqrt_root:
            return poly_power(lower_node(*n.lhs, alg), Rational(1, 2), alg, n.pos);
    }
    throw ParseError(n.pos, "malformed expression tree");
}

} // namespace

std::unique_ptr<ExprAst> parse_ast(const std::string& text) {
    Parser p(text);
    return p.parse();
}

Poly lower(const ExprAst& ast, const PresentedAlgebra& alg) {
    return alg.normal_form(lower_node(ast, alg));
}

Poly parse_expr(const std::string& text, const PresentedAlgebra& alg) {
    auto ast = parse_ast(text);
    return lower(*ast, alg);
}

} // namespace moyal
