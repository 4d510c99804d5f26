#include "ltistab/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "ltistab/error.hpp"
#include "ltistab/format.hpp"

namespace ltistab {

namespace {

constexpr unsigned kMaxExponent = 100;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    TfExpressionAst parse_top() {
        auto num = parse_expr();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            auto den = parse_expr();
            skip_ws();
            if (peek() == '/') fail(ErrorCode::MultipleDivision, "only one top-level '/' is allowed");
            auto div = make(AstNode::Kind::Div);
            div->lhs = std::move(num);
            div->rhs = std::move(den);
            num = std::move(div);
        }
        skip_ws();
        if (pos_ < text_.size()) fail(ErrorCode::SyntaxError, std::string("unexpected '") + text_[pos_] + "'");
        return num;
    }

private:
    TfExpressionAst parse_expr() {
        auto lhs = parse_term();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            auto node = make(c == '+' ? AstNode::Kind::Add : AstNode::Kind::Sub);
            node->lhs = std::move(lhs);
            node->rhs = parse_term();
            lhs = std::move(node);
        }
    }

    TfExpressionAst parse_term() {
        auto lhs = parse_signed();
        for (;;) {
            skip_ws();
            if (peek() != '*') return lhs;
            ++pos_;
            auto node = make(AstNode::Kind::Mul);
            node->lhs = std::move(lhs);
            node->rhs = parse_signed();
            lhs = std::move(node);
        }
    }

    TfExpressionAst parse_signed() {
        skip_ws();
        const char c = peek();
        if (c == '+') {
            ++pos_;
            return parse_signed();
        }
        if (c == '-') {
            ++pos_;
            auto node = make(AstNode::Kind::Neg);
            node->lhs = parse_signed();
            return node;
        }
        return parse_factor();
    }

    TfExpressionAst parse_factor() {
        auto base = parse_base();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        if (peek() == '-') fail(ErrorCode::NegativeExponent, "exponents must be nonnegative integers");
        const std::size_t start = pos_;
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc() || ptr == text_.data() + start)
            fail(ErrorCode::SyntaxError, "expected an unsigned integer exponent");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        if (peek() == '.' || peek() == 'e' || peek() == 'E')
            fail(ErrorCode::SyntaxError, "exponents must be integers");
        if (value > kMaxExponent) {
            pos_ = start;
            fail(ErrorCode::SyntaxError, "exponent exceeds " + std::to_string(kMaxExponent));
        }
        auto node = make(AstNode::Kind::Pow);
        node->lhs = std::move(base);
        node->exponent = value;
        return node;
    }

    TfExpressionAst parse_base() {
        skip_ws();
        const char c = peek();
        if (c == 's') {
            ++pos_;
            return make(AstNode::Kind::Variable);
        }
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            skip_ws();
            if (peek() == '/')
                fail(ErrorCode::SyntaxError, "division is only allowed once, at the top level");
            if (peek() != ')') fail(ErrorCode::SyntaxError, "expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (c == '\0') fail(ErrorCode::SyntaxError, "unexpected end of expression");
        fail(ErrorCode::SyntaxError, std::string("unexpected '") + c + "'");
    }

    TfExpressionAst parse_number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        };
        digits();
        if (peek() == '.') {
            ++pos_;
            digits();
        }
        if (peek() == 'e' || peek() == 'E') {
            const std::size_t mark = pos_;
            ++pos_;
            if (peek() == '+' || peek() == '-') ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = mark;
                fail(ErrorCode::SyntaxError, "malformed exponent in number");
            }
            digits();
        }
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc() || ptr != text_.data() + pos_) {
            pos_ = start;
            fail(ErrorCode::SyntaxError, "malformed number");
        }
        auto node = make(AstNode::Kind::Number);
        node->number = value;
        return node;
    }

    static TfExpressionAst make(AstNode::Kind kind) {
        auto node = std::make_unique<AstNode>();
        node->kind = kind;
        return node;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(ErrorCode code, const std::string& message) const {
        throw Error(code, message + " at byte " + std::to_string(pos_), pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Polynomial lower_poly(const AstNode& node) {
    switch (node.kind) {
        case AstNode::Kind::Number: return Polynomial::constant(node.number);
        case AstNode::Kind::Variable: return Polynomial{0.0, 1.0};
        case AstNode::Kind::Add: return lower_poly(*node.lhs) + lower_poly(*node.rhs);
        case AstNode::Kind::Sub: return lower_poly(*node.lhs) - lower_poly(*node.rhs);
        case AstNode::Kind::Mul: return lower_poly(*node.lhs) * lower_poly(*node.rhs);
        case AstNode::Kind::Neg: return -lower_poly(*node.lhs);
        case AstNode::Kind::Pow: {
            const Polynomial base = lower_poly(*node.lhs);
            Polynomial out = Polynomial::constant(1.0);
            for (unsigned k = 0; k < node.exponent; ++k) out *= base;
            return out;
        }
        case AstNode::Kind::Div: break;
    }
    throw Error(ErrorCode::SyntaxError, "division below the top level");
}

}  // namespace

TfExpressionAst parse_tf(std::string_view text) { return Parser(text).parse_top(); }

TransferFunction lower_ast(const AstNode& ast) {
    if (ast.kind == AstNode::Kind::Div) return tf_new(lower_poly(*ast.lhs), lower_poly(*ast.rhs));
    return tf_new(lower_poly(ast), Polynomial::constant(1.0));
}

TransferFunction parse_transfer_function(std::string_view text) { return lower_ast(*parse_tf(text)); }

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const double c = p[static_cast<std::size_t>(k)];
        if (c == 0.0) continue;
        if (out.empty())
            out += c < 0.0 ? "-" : "";
        else
            out += c < 0.0 ? " - " : " + ";
        out += format_double(std::abs(c));
        if (k >= 1) out += "*s";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

std::string format_tf(const TransferFunction& h) {
    return "(" + format_polynomial(h.num()) + ")/(" + format_polynomial(h.den()) + ")";
}

}  // namespace ltistab
