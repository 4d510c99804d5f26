#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ltistab/rational_tf.hpp"

namespace ltistab {

/// Syntax tree of a transfer-function expression.
///
///   top    := expr ('/' expr)?
///   expr   := term (('+' | '-') term)*
///   term   := signed ('*' signed)*
///   signed := ('+' | '-')* factor
///   factor := base ('^' uint)?
///   base   := number | 's' | '(' expr ')'
///
/// Whitespace is insignificant. Division appears at most once and only at the
/// top level.
struct AstNode {
    enum class Kind { Number, Variable, Add, Sub, Mul, Neg, Pow, Div };

    Kind kind = Kind::Number;
    double number = 0.0;
    unsigned exponent = 0;
    std::unique_ptr<AstNode> lhs;
    std::unique_ptr<AstNode> rhs;
};

using TfExpressionAst = std::unique_ptr<AstNode>;

/// Throws Error{SyntaxError | MultipleDivision | NegativeExponent} with the
/// byte offset of the offending token.
TfExpressionAst parse_tf(std::string_view text);

/// Lowers the tree to (num, den) polynomials and canonicalizes through tf_new.
TransferFunction lower_ast(const AstNode& ast);

/// parse_tf followed by lower_ast.
TransferFunction parse_transfer_function(std::string_view text);

/// Renders h as "(num)/(den)" in descending powers with 17 significant digits.
/// parse_transfer_function(format_tf(h)) == h exactly.
std::string format_tf(const TransferFunction& h);
std::string format_polynomial(const Polynomial& p);

}  // namespace ltistab
