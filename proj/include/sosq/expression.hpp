#ifndef SOSQ_EXPRESSION_HPP
#define SOSQ_EXPRESSION_HPP

#include <memory>
#include <string>
#include <string_view>

namespace sosq {

/// A real function of one variable `x`, parsed from text.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | primary
///   primary := number | 'x' | '(' expr ')'
///            | 'abs' '(' expr ')'
///            | ('min' | 'max') '(' expr (',' expr)+ ')'
///            | 'pow' '(' expr ',' expr ')'
///
/// Parsing failures throw ParseError carrying the offending token.
class Expression {
public:
    struct Node;

    static Expression parse(std::string_view text);
    static Expression constant(double value);

    double operator()(double x) const;

    const std::string& source() const { return source_; }

private:
    Expression(std::shared_ptr<const Node> root, std::string source)
        : root_(std::move(root)), source_(std::move(source))
    {
    }

    std::shared_ptr<const Node> root_;
    std::string source_;
};

} // namespace sosq

#endif // SOSQ_EXPRESSION_HPP
