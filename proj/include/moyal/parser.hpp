#pragma once

#include <memory>

#include "moyal/algebra.hpp"

namespace moyal {

struct ParseError : AlgebraError {
    size_t pos; // 1-based character position
    ParseError(size_t p, const std::string& msg)
        : AlgebraError("parse error at position " + std::to_string(p) + ": " +
                       msg),
          pos(p) {}
};

/// Expression tree produced by the recursive-descent grammar
///   expr    := term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := base ('^' exponent)?
///   base    := NUMBER | IDENT | 'sqrt' '(' expr ')' | '(' expr ')' | '-' factor
///   exponent:= ['-'] INT | '(' ['-'] INT ('/' INT)? ')'
/// Whitespace insensitive; implicit multiplication rejected.
struct ExprAst {
    enum class Kind { number, generator, add, sub, mul, neg, power, sqrt_root };

    Kind kind;
    size_t pos = 0;           // 1-based position of the defining token
    Rational value;           // number
    std::string name;         // generator
    Rational exponent;        // power
    std::unique_ptr<ExprAst> lhs, rhs;
};

std::unique_ptr<ExprAst> parse_ast(const std::string& text);

/// AST lowered into the algebra: sqrt becomes ^(1/2); every generator power
/// must land on the generator's radical lattice. The result is normalized.
Poly lower(const ExprAst& ast, const PresentedAlgebra& alg);

Poly parse_expr(const std::string& text, const PresentedAlgebra& alg);

} // namespace moyal
